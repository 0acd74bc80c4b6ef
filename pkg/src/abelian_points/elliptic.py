"""Elliptic curves over finite fields.

Point counts are exhaustive (one kernel pass over x in F_q). Group
structure comes from the exponent of the full point set. Curves in
characteristic 2 and 3 use the long Weierstrass form.
"""
from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple, Union

import numpy as np

from . import kernels
from .arith import factorize, is_prime, prime_factors, prime_power
from .errors import InternalContradiction, NotFoundError, ResourceLimitError
from .ffield import TABLE_LIMIT, GF, FiniteField, field_of_order

EXHAUSTIVE_BOUND = 10**6

Point = Union[None, tuple]  # None is the point at infinity


@dataclass(frozen=True)
class CurveModel:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over a finite field."""

    field: FiniteField
    a1: int = 0
    a2: int = 0
    a3: int = 0
    a4: int = 0
    a6: int = 0

    def __post_init__(self):
        q = self.field.q
        for name in ("a1", "a2", "a3", "a4", "a6"):
            v = getattr(self, name)
            if not 0 <= v < q:
                if self.field.is_prime_field:
                    object.__setattr__(self, name, v % q)
                else:
                    raise ValueError(f"{name}={v} is not an element encoding of F_{q}")
        if self.discriminant() == 0:
            raise ValueError(f"singular model {self}")

    @classmethod
    def short(cls, field, a4, a6):
        return cls(field, 0, 0, 0, a4, a6)

    @property
    def coeffs(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def q(self):
        return self.field.q

    def b_invariants(self):
        F = self.field
        a1, a2, a3, a4, a6 = self.coeffs
        m, ad = F.mul, F.add
        b2 = ad(m(a1, a1), m(F(4), a2))
        b4 = ad(m(F(2), a4), m(a1, a3))
        b6 = ad(m(a3, a3), m(F(4), a6))
        b8 = F.sub(
            ad(ad(m(m(a1, a1), a6), m(m(F(4), a2), a6)), ad(m(a2, m(a3, a3)), F.neg(m(a4, a4)))),
            m(m(a1, a3), a4),
        )
        return b2, b4, b6, b8

    def discriminant(self):
        F = self.field
        m = F.mul
        b2, b4, b6, b8 = self.b_invariants()
        t1 = F.neg(m(m(b2, b2), b8))
        t2 = F.neg(m(F(8), m(b4, m(b4, b4))))
        t3 = F.neg(m(F(27), m(b6, b6)))
        t4 = m(F(9), m(b2, m(b4, b6)))
        return F.add(F.add(t1, t2), F.add(t3, t4))

    def __str__(self):
        return format_curve(self)

    # --- group law -----------------------------------------------------
    def contains(self, P: Point) -> bool:
        if P is None:
            return True
        F = self.field
        x, y = P
        a1, a2, a3, a4, a6 = self.coeffs
        lhs = F.add(F.mul(y, y), F.add(F.mul(a1, F.mul(x, y)), F.mul(a3, y)))
        x2 = F.mul(x, x)
        rhs = F.add(F.add(F.mul(x2, x), F.mul(a2, x2)), F.add(F.mul(a4, x), a6))
        return lhs == rhs

    def neg(self, P: Point) -> Point:
        if P is None:
            return None
        F = self.field
        x, y = P
        return (x, F.sub(F.neg(y), F.add(F.mul(self.a1, x), self.a3)))

    def add(self, P: Point, Q: Point) -> Point:
        if P is None:
            return Q
        if Q is None:
            return P
        F = self.field
        a1, a2, a3, a4, a6 = self.coeffs
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2 and F.add(F.add(y1, y2), F.add(F.mul(a1, x2), a3)) == 0:
            return None
        if x1 == x2:
            num = F.sub(
                F.add(F.add(F.mul(F(3), F.mul(x1, x1)), F.mul(F(2), F.mul(a2, x1))), a4),
                F.mul(a1, y1),
            )
            den = F.add(F.add(F.mul(F(2), y1), F.mul(a1, x1)), a3)
        else:
            num = F.sub(y2, y1)
            den = F.sub(x2, x1)
        lam = F.div(num, den)
        nu = F.sub(y1, F.mul(lam, x1))
        x3 = F.sub(F.sub(F.sub(F.add(F.mul(lam, lam), F.mul(a1, lam)), a2), x1), x2)
        y3 = F.sub(F.neg(F.mul(F.add(lam, a1), x3)), F.add(nu, a3))
        return (x3, y3)

    def mul(self, k: int, P: Point) -> Point:
        if k < 0:
            k, P = -k, self.neg(P)
        R = None
        while k:
            if k & 1:
                R = self.add(R, P)
            P = self.add(P, P)
            k >>= 1
        return R

    def points(self) -> list:
        """All affine points plus ``None`` (infinity), sorted by (x, y)."""
        F = self.field
        a1, a2, a3, a4, a6 = self.coeffs
        roots: dict[int, list[int]] = {}
        if F.p != 2:
            for s in F.elements():
                roots.setdefault(F.mul(s, s), []).append(s)
            half = F.inv(F(2))
        out: list = [None]
        for x in F.elements():
            b = F.add(F.mul(a1, x), a3)
            x2 = F.mul(x, x)
            c = F.add(F.add(F.mul(x2, x), F.mul(a2, x2)), F.add(F.mul(a4, x), a6))
            if F.p != 2:
                # (2y + b)^2 = b^2 + 4c
                D = F.add(F.mul(b, b), F.mul(F(4), c))
                ys = [F.mul(F.sub(s, b), half) for s in roots.get(D, ())]
            else:
                ys = [y for y in F.elements() if F.add(F.mul(y, y), F.mul(b, y)) == c]
            out.extend((x, y) for y in sorted(ys))
        return out


class RationalCurve(NamedTuple):
    """Integral Weierstrass model over Q, kept only to be reduced mod primes."""

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int

    def discriminant(self) -> int:
        a1, a2, a3, a4, a6 = self
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def bad_primes(self) -> list[int]:
        return prime_factors(abs(self.discriminant()))

    def reduce(self, p: int) -> CurveModel:
        if self.discriminant() % p == 0:
            raise ValueError(f"bad reduction at {p}")
        return CurveModel(GF(p), *(c % p for c in self))


SELMER_ABC = 3 * 4 * 5


def selmer_jacobian() -> RationalCurve:
    """y^2 = x^3 - 432 (abc)^2 with abc = 60, the Jacobian of 3X^3 + 4Y^3 + 5Z^3.

    The diagonal cubic aX^3 + bY^3 + cZ^3 has Jacobian X^3 + Y^3 + abc Z^3,
    which is y^2 = x^3 - 432 (abc)^2 in short Weierstrass form.
    """
    return RationalCurve(0, 0, 0, 0, -432 * SELMER_ABC**2)


# --- counting --------------------------------------------------------------

@functools.lru_cache(maxsize=64)
def _nsqrt_mod(p: int) -> np.ndarray:
    y = np.arange(p, dtype=np.int64)
    return np.bincount(y * y % p, minlength=p).astype(np.int64)


def count_points(E: CurveModel, bound: int = EXHAUSTIVE_BOUND) -> int:
    """#E(F_q) including the point at infinity, by exhaustive enumeration of x."""
    F = E.field
    if F.q > bound:
        raise ResourceLimitError(f"q = {F.q} exceeds exhaustive bound {bound}")
    if F.is_prime_field and F.p > 2:
        return int(kernels.count_points_modp(*E.coeffs, F.p, _nsqrt_mod(F.p)))
    if F.q > TABLE_LIMIT:
        raise ResourceLimitError(f"extension fields limited to q <= {TABLE_LIMIT}")
    t = F.tables()
    return int(
        kernels.count_points_table(
            *E.coeffs, t.add, t.mul, t.inv, t.nsqrt, t.trace, F(4), F.p == 2
        )
    )


def trace_of_frobenius(E: CurveModel) -> int:
    return E.q + 1 - count_points(E)


@dataclass(frozen=True)
class GroupStructure:
    """E(F_q) = Z/m x Z/n with m | n."""

    order: int
    m: int
    n: int

    @property
    def exponent(self):
        return self.n

    @property
    def is_cyclic(self):
        return self.m == 1

    def to_dict(self):
        return {"order": self.order, "invariants": [self.m, self.n], "cyclic": self.is_cyclic}

    @classmethod
    def from_dict(cls, d):
        m, n = d["invariants"]
        return cls(d["order"], m, n)

    def __str__(self):
        if self.m == 1:
            return f"Z/{self.n}"
        return f"Z/{self.m} x Z/{self.n}"


def point_order(E: CurveModel, P: Point, N: int) -> int:
    """Order of P given that it divides N."""
    order = N
    for r, _ in factorize(N):
        while order % r == 0 and E.mul(order // r, P) is None:
            order //= r
    return order


def group_structure(E: CurveModel, bound: int = 20_000) -> GroupStructure:
    """Invariant factors from the exponent (lcm of all point orders)."""
    if E.q > bound:
        raise ResourceLimitError(f"q = {E.q} exceeds group-structure bound {bound}")
    pts = E.points()
    N = len(pts)
    if N != count_points(E):
        raise InternalContradiction("point enumeration disagrees with the counting kernel")
    exponent = 1
    for P in pts:
        exponent = math.lcm(exponent, point_order(E, P, N))
        if exponent == N:
            break
    m = N // exponent
    if exponent % m or (E.q - 1) % m:
        raise InternalContradiction(f"invalid invariant factors ({m}, {exponent})")
    return GroupStructure(N, m, exponent)


def has_point_of_order(E: CurveModel, n: int) -> bool:
    """True iff E(F_q) has an element of order n; n may be a prime power such as 4."""
    return group_structure(E).exponent % n == 0


def is_supersingular(E: CurveModel) -> bool:
    """Prime fields only: p divides the trace (t = 0 exactly when p >= 5)."""
    if not E.field.is_prime_field:
        raise ValueError("is_supersingular is implemented for prime fields")
    return trace_of_frobenius(E) % E.field.p == 0


# --- admissible orders and the ell-finding claim ----------------------------

def admissible_order(q: int, N: int) -> bool:
    """Sufficient realizability test for N = #E(F_q).

    With t = q + 1 - N: Hasse (t^2 <= 4q) plus either gcd(t, p) = 1, or
    t = 0 with p not 1 mod 4.
    """
    p, _ = prime_power(q)
    t = q + 1 - N
    if t * t > 4 * q:
        return False
    return math.gcd(t, p) == 1 or (t == 0 and p % 4 != 1)


class EllChoice(NamedTuple):
    N: int
    ell: int


def claim_case(q: int) -> str:
    p, a = prime_power(q)
    if q in (2, 4, 16):
        return "I"
    if p == 2:
        return "II"
    if q == 3:
        return "III"
    if p == 3:
        return "IV"
    return "V"


def find_ell(q: int) -> EllChoice:
    """Pick (N, ell): ell prime to q(q-1), ell | N, N an admissible curve order.

    Cases follow the q-adic casework: I q in {2,4,16}: N = ell = q+1;
    II other powers of 2: N = q+2; III q = 3: N = ell = 5; IV other powers
    of 3: N = q+1; V p >= 5: N = q-2. Where several ell qualify the
    smallest is taken (ell >= 5 in II and IV).
    """
    p, a = prime_power(q)
    case = claim_case(q)
    if case == "I":
        N = ell = q + 1
    elif case == "II":
        N = q + 2
        ell = min(r for r in prime_factors(N) if r >= 5)
    elif case == "III":
        N = ell = 5
    elif case == "IV":
        N = q + 1
        ell = min(r for r in prime_factors(N) if r >= 5)
    else:
        N = q - 2
        ell = prime_factors(N)[0]
    if not (is_prime(ell) and math.gcd(ell, q * (q - 1)) == 1 and N % ell == 0 and admissible_order(q, N)):
        raise InternalContradiction(f"find_ell({q}) produced invalid ({N}, {ell})")
    return EllChoice(N, ell)


# --- model enumeration ------------------------------------------------------

def normal_form_models(F: FiniteField) -> Iterator[CurveModel]:
    """Every isomorphism class over F appears among these models.

    char >= 5: y^2 = x^3 + a4 x + a6, (a4, a6) row-major.
    char 3:    y^2 = x^3 + a2 x^2 + a6 (a2, a6 != 0), then y^2 = x^3 + a4 x + a6 (a4 != 0).
    char 2:    y^2 + xy = x^3 + a2 x^2 + a6 (a6 != 0), then y^2 + a3 y = x^3 + a4 x + a6 (a3 != 0).
    """
    q = F.q
    if F.p >= 5:
        for a4 in range(q):
            for a6 in range(q):
                try:
                    yield CurveModel(F, 0, 0, 0, a4, a6)
                except ValueError:
                    continue
    elif F.p == 3:
        for a2 in range(1, q):
            for a6 in range(1, q):
                yield CurveModel(F, 0, a2, 0, 0, a6)
        for a4 in range(1, q):
            for a6 in range(q):
                yield CurveModel(F, 0, 0, 0, a4, a6)
    else:
        for a2 in range(q):
            for a6 in range(1, q):
                yield CurveModel(F, 1, a2, 0, 0, a6)
        for a3 in range(1, q):
            for a4 in range(q):
                for a6 in range(q):
                    yield CurveModel(F, 0, 0, a3, a4, a6)


def search_curve_with_order(
    field: int | FiniteField, target: int | Callable[[int], bool]
) -> CurveModel:
    """First model (in :func:`normal_form_models` order) whose order meets ``target``.

    ``target`` is an exact order or a predicate on the order. For prime
    p >= 5 the scan is over short models (a4, a6) in row-major order.
    """
    F = field if isinstance(field, FiniteField) else field_of_order(field)
    pred = target if callable(target) else (lambda N, want=target: N == want)
    if not callable(target):
        if (F.q + 1 - target) ** 2 > 4 * F.q:
            raise NotFoundError(f"{target} lies outside the Hasse interval for q = {F.q}")
    for E in normal_form_models(F):
        if pred(count_points(E)):
            return E
    raise NotFoundError(f"no curve over F_{F.q} satisfies the target")


# --- text format ------------------------------------------------------------

_MONO = re.compile(r"^(?:(\d+)\*?)?((?:[xy](?:\^\d+)?\*?)*)$")


def _parse_side(text: str) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = {}
    s = text.replace(" ", "").replace("−", "-")
    if s and s[0] not in "+-":
        s = "+" + s
    for sign, body in re.findall(r"([+-])([^+-]+)", s):
        m = _MONO.match(body)
        if not m:
            raise ValueError(f"cannot parse monomial {body!r}")
        coef = int(m.group(1)) if m.group(1) else 1
        ex = ey = 0
        for var, e in re.findall(r"([xy])(?:\^(\d+))?", m.group(2)):
            if var == "x":
                ex += int(e or 1)
            else:
                ey += int(e or 1)
        key = (ex, ey)
        out[key] = out.get(key, 0) + (coef if sign == "+" else -coef)
    return out


def parse_curve(text: str) -> CurveModel:
    """Parse ``"y^2 = x^3 + A*x + B over F_q"`` or the long form."""
    m = re.match(r"^\s*(.*?)=(.*?)\bover\s+F_?\{?(\d+)\}?\s*$", text)
    if not m:
        raise ValueError(f"cannot parse curve {text!r}")
    lhs, rhs, q = _parse_side(m.group(1)), _parse_side(m.group(2)), int(m.group(3))
    F = field_of_order(q)
    if lhs.pop((0, 2), 0) != 1 or rhs.pop((3, 0), 0) != 1:
        raise ValueError("expected monic y^2 and x^3 terms")
    a1, a3 = lhs.pop((1, 1), 0), lhs.pop((0, 1), 0)
    a2, a4, a6 = rhs.pop((2, 0), 0), rhs.pop((1, 0), 0), rhs.pop((0, 0), 0)
    if lhs or rhs:
        raise ValueError(f"unexpected terms {sorted(lhs) + sorted(rhs)}")
    if not F.is_prime_field and min(a1, a2, a3, a4, a6) < 0:
        raise ValueError("extension-field coefficients must be nonnegative encodings")
    return CurveModel(F, a1, a2, a3, a4, a6)


def format_curve(E: CurveModel) -> str:
    a1, a2, a3, a4, a6 = E.coeffs

    def term(c, mono):
        if c == 0:
            return ""
        if mono == "":
            return f" + {c}"
        return f" + {mono}" if c == 1 else f" + {c}*{mono}"

    lhs = "y^2" + term(a1, "x*y") + term(a3, "y")
    rhs = "x^3" + term(a2, "x^2") + term(a4, "x") + term(a6, "")
    return f"{lhs} = {rhs} over F_{E.q}"


def curve_to_dict(E: CurveModel) -> dict:
    return {"q": E.q, "modulus": list(E.field.modulus), "a": list(E.coeffs), "text": format_curve(E)}
