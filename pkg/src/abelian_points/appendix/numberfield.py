"""Number fields Q[x]/(f) with exact rational arithmetic."""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property

from ..intpoly import is_irreducible_over_q, trim
from ..polytext import format_poly, parse_poly


# --- Q[x] on constant-first Fraction lists --------------------------------

def q_trim(f):
    f = [Fraction(c) for c in f]
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    return f or [Fraction(0)]


def q_mul(f, g):
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return q_trim(out)


def q_sub(f, g):
    n = max(len(f), len(g))
    return q_trim([(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)])


def q_divmod(f, g):
    f, g = q_trim(f), q_trim(g)
    if g == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    q = [Fraction(0)] * max(1, len(f) - len(g) + 1)
    while len(r) >= len(g) and r != [0]:
        c = r[-1] / g[-1]
        k = len(r) - len(g)
        q[k] = c
        for i, b in enumerate(g):
            r[k + i] -= c * b
        r = q_trim(r[:-1]) if len(r) > 1 else [Fraction(0)]
    return q_trim(q), q_trim(r)


def q_gcd(f, g):
    f, g = q_trim(f), q_trim(g)
    while g != [0]:
        f, g = g, q_divmod(f, g)[1]
    return [c / f[-1] for c in f]


def q_deriv(f):
    return q_trim([i * c for i, c in enumerate(f)][1:] or [0])


def q_egcd(f, g):
    """(d, s, t) with s f + t g = d = gcd (monic)."""
    r0, r1 = q_trim(f), q_trim(g)
    s0, s1 = [Fraction(1)], [Fraction(0)]
    t0, t1 = [Fraction(0)], [Fraction(1)]
    while r1 != [0]:
        q, r = q_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, q_sub(s0, q_mul(q, s1))
        t0, t1 = t1, q_sub(t0, q_mul(q, t1))
    lc = r0[-1]
    return [c / lc for c in r0], [c / lc for c in s0], [c / lc for c in t0]


def charpoly_of_matrix(m) -> list[Fraction]:
    """Characteristic polynomial det(xI - M) by Faddeev-LeVerrier, constant first."""
    n = len(m)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = M (M_{k-1} + c_{n-k+1} I)
        prev = [row[:] for row in mk]
        for i in range(n):
            prev[i][i] += coeffs[n - k + 1]
        mk = [[sum(m[i][l] * prev[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        coeffs[n - k] = -sum(mk[i][i] for i in range(n)) / k
    return coeffs


class NumberField:
    """K = Q[a]/(f) for a monic irreducible integer polynomial f."""

    def __init__(self, f, name: str = "a", check: bool = True):
        f = trim(parse_poly(f))
        if f[-1] != 1 or len(f) < 2:
            raise ValueError("defining polynomial must be monic of degree >= 1")
        if check and not is_irreducible_over_q(f):
            raise ValueError(f"{format_poly(f)} is reducible over Q")
        self.f = tuple(f)
        self.degree = len(f) - 1
        self.name = name

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.f == other.f

    def __hash__(self):
        return hash(("NumberField", self.f))

    def __repr__(self):
        return f"NumberField({format_poly(self.f)})"

    def __call__(self, coeffs) -> "NumberFieldElement":
        if isinstance(coeffs, NumberFieldElement):
            return coeffs
        if isinstance(coeffs, (int, Fraction)):
            coeffs = [coeffs]
        return NumberFieldElement(self, coeffs)

    def gen(self) -> "NumberFieldElement":
        return self([0, 1]) if self.degree > 1 else self([-self.f[0]])

    def zero(self):
        return self([0])

    def one(self):
        return self([1])

    @cached_property
    def _reduction(self):
        """Rows x^k mod f for k < 2d - 1."""
        d = self.degree
        rows = []
        cur = [Fraction(0)] * d
        cur[0] = Fraction(1)
        for _ in range(2 * d - 1):
            rows.append(cur[:])
            # multiply by x and reduce with x^d = -sum f_i x^i
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            for i in range(d):
                cur[i] -= top * self.f[i]
        return rows


class NumberFieldElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs):
        d = field.degree
        c = q_trim(coeffs)
        if len(c) > d:
            c = q_divmod(c, [Fraction(x) for x in field.f])[1]
        c = list(c) + [Fraction(0)] * (d - len(c))
        self.field = field
        self.coeffs = tuple(c[:d])

    def _coerce(self, other):
        if isinstance(other, NumberFieldElement):
            if other.field != self.field:
                raise ValueError("elements of different number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NumberFieldElement(self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return NumberFieldElement(self.field, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        red = self.field._reduction
        out = [Fraction(0)] * d
        for k, c in enumerate(prod):
            if c:
                for i in range(d):
                    out[i] += c * red[k][i]
        return NumberFieldElement(self.field, out)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a number field")
        g, s, _ = q_egcd(list(self.coeffs), [Fraction(x) for x in self.field.f])
        assert g == [1]
        return NumberFieldElement(self.field, s)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = self.field.one(), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def multiplication_matrix(self):
        """Columns are the images of the power basis under multiplication."""
        d = self.field.degree
        cols = [(self * self.field([0] * i + [1])).coeffs for i in range(d)]
        return [[cols[j][i] for j in range(d)] for i in range(d)]

    def charpoly(self):
        return charpoly_of_matrix(self.multiplication_matrix())

    def minpoly(self):
        """Minimal polynomial over Q (monic, constant first)."""
        cp = self.charpoly()
        g = q_gcd(cp, q_deriv(cp))
        return q_divmod(cp, g)[0]

    def norm(self) -> Fraction:
        cp = self.charpoly()
        return cp[0] * (-1) ** self.field.degree

    def trace(self) -> Fraction:
        return -self.charpoly()[-2]

    def __str__(self):
        d = self.field.degree
        terms = []
        for i in range(d - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else (self.field.name if i == 1 else f"{self.field.name}^{i}")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"<{self} in {self.field!r}>"


def integer_minpoly(u: NumberFieldElement) -> list[int]:
    """Minimal polynomial scaled to a primitive integer polynomial with positive leading coefficient."""
    from math import gcd, lcm

    mp = u.minpoly()
    den = 1
    for c in mp:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in mp]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints]
