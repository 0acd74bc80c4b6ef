"""p-adic (in)solubility of diagonal forms sum c_i X_i^d.

The certificate logic is the valuation staircase: over a discretely valued
extension with ramification index e, the term c_i x_i^d has valuation
congruent to e * v_p(c_i) mod d. When those residues are pairwise distinct
one term strictly dominates and no nonzero tuple is a zero. Combined with
gcd(d, p(p-1)) = 1, which makes every ramification index inside Q_p^ab
prime to d, this rules out points over Q_p^ab and therefore over Q^ab.

Two independent finite checks back this up: :func:`brute_force_primitive`
(no primitive zero modulo p^m) and :func:`local_solve_diagonal`
(Hensel-liftable zeros as a positive control).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .arith import abelian_ramification_obstruction, is_prime, primes_up_to, valuation
from .certificate import Certificate, Condition
from .errors import HypothesisError, ResourceLimitError
from .polytext import parse_diagonal

DEFAULT_BUDGET = 50_000_000
DEFAULT_PRECISIONS = (1, 3, 5)
_VARS = "xyzwuv"


@dataclass(frozen=True)
class DiagonalForm:
    degree: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))
        if self.degree < 2:
            raise ValueError("degree must be >= 2")
        if len(self.coefficients) < 2:
            raise ValueError("need at least two variables")
        if any(c == 0 for c in self.coefficients):
            raise ValueError("coefficients must be nonzero")

    @property
    def nvars(self):
        return len(self.coefficients)

    @classmethod
    def parse(cls, text: str) -> "DiagonalForm":
        d, coeffs = parse_diagonal(text)
        return cls(d, tuple(coeffs))

    def variables(self):
        if self.nvars <= len(_VARS):
            return list(_VARS[: self.nvars])
        return [f"x{i}" for i in range(self.nvars)]

    def __str__(self):
        out = ""
        for c, v in zip(self.coefficients, self.variables()):
            mono = f"{v}^{self.degree}"
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __call__(self, xs) -> int:
        return sum(c * x**self.degree for c, x in zip(self.coefficients, xs))

    def partial(self, j: int, xs) -> int:
        return self.degree * self.coefficients[j] * xs[j] ** (self.degree - 1)

    def to_dict(self):
        return {"degree": self.degree, "coefficients": list(self.coefficients), "text": str(self)}

    @classmethod
    def from_dict(cls, d):
        return cls(d["degree"], tuple(d["coefficients"]))


@dataclass(frozen=True)
class ValuationProfile:
    prime: int
    valuations: tuple[int, ...]
    units: tuple[int, ...]

    def to_dict(self):
        return {"prime": self.prime, "valuations": list(self.valuations), "units": list(self.units)}


def valuation_profile(form: DiagonalForm, p: int) -> ValuationProfile:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    vals = tuple(valuation(c, p) for c in form.coefficients)
    units = tuple(c // p**v for c, v in zip(form.coefficients, vals))
    return ValuationProfile(p, vals, units)


def staircase_check(profile, d: int, e: int = 1) -> bool:
    """True iff the residues e * a_i mod d are pairwise distinct."""
    if e < 1:
        raise ValueError("ramification index must be >= 1")
    vals = profile.valuations if isinstance(profile, ValuationProfile) else tuple(profile)
    residues = [e * a % d for a in vals]
    return len(set(residues)) == len(residues)


def _good_residues(vals, d):
    return [e for e in range(1, d + 1) if staircase_check(vals, d, e)]


def _family_note(form: DiagonalForm, profile: ValuationProfile) -> str:
    d, vals = form.degree, profile.valuations
    if vals == tuple(range(d)):
        if d == 3:
            return "instance of the cubic family a X^3 + b p Y^3 + c p^2 Z^3 with a, b, c prime to p"
        return f"instance of the staircase family sum_i u_i p^i X_i^{d}"
    return (
        "valuations form a permutation of 0..d-1 rather than the ordered staircase; "
        "the argument is insensitive to the order of the variables"
    )


def certify_no_abelian_points(form: DiagonalForm, p: int) -> Certificate | None:
    """NoAbelianPoints certificate at p, or None.

    None means only that this method does not apply at p. It never
    asserts that the form has solutions.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    d = form.degree
    prof = valuation_profile(form, p)
    permutation = sorted(prof.valuations) == list(range(d))
    coprime = abelian_ramification_obstruction(d, p)
    if not (permutation and coprime):
        return None
    units = [e for e in range(1, d) if math.gcd(e, d) == 1]
    every_e = all(staircase_check(prof, d, e) for e in units)
    conditions = [
        Condition("prime", f"{p} is prime", True),
        Condition(
            "staircase_profile",
            f"v_{p} of the coefficients {list(prof.valuations)} is a permutation of 0..{d - 1}",
            permutation,
        ),
        Condition(
            "ramification_coprime",
            f"gcd({d}, {p}*({p}-1)) = {math.gcd(d, p * (p - 1))}",
            coprime,
        ),
        Condition(
            "residues_distinct_for_every_unit_e",
            f"for every e mod {d} prime to {d}, the residues e*a_i mod {d} are pairwise distinct",
            every_e,
        ),
    ]
    chain = [
        "Kronecker-Weber (cited): a point over Q^ab is defined over some Q(mu_N); completing at a "
        f"prime above {p} puts it in a finite extension K of Q_{p} inside Q_{p}(mu_N).",
        f"Ramification (computed): e(K/Q_{p}) divides phi({p}^i) = {p}^(i-1)*({p}-1) with i = v_{p}(N).",
        f"Since gcd({d}, {p}*({p}-1)) = 1, every such e is prime to {d}.",
        f"Staircase: over K the term c_i x_i^{d} has valuation congruent to e*a_i mod {d}; the residues "
        "are pairwise distinct, so exactly one term has minimal valuation and the sum of a nonzero "
        "tuple cannot vanish.",
        f"Hence no nonzero solution over any finite subextension of Q_{p}^ab, so none over Q_{p}^ab "
        "and none over Q^ab.",
        _family_note(form, prof),
    ]
    return Certificate(
        kind="NoAbelianPoints",
        conditions=conditions,
        lemma_chain=chain,
        form=form.to_dict(),
        prime=p,
        profile=prof.to_dict(),
    )


def certify_staircase_local(form: DiagonalForm, p: int) -> Certificate | None:
    """StaircaseLocal certificate: no Q_p-point (and none over extensions with good e).

    Weaker than :func:`certify_no_abelian_points`; issued whenever the
    residues are distinct for e = 1.
    """
    prof = valuation_profile(form, p)
    if not staircase_check(prof, form.degree, 1):
        return None
    d = form.degree
    good = _good_residues(prof.valuations, d)
    return Certificate(
        kind="StaircaseLocal",
        conditions=[
            Condition("prime", f"{p} is prime", True),
            Condition(
                "residues_distinct_e1",
                f"the valuations {list(prof.valuations)} are pairwise distinct mod {d}",
                True,
            ),
        ],
        lemma_chain=[
            f"Over any extension of Q_{p} whose ramification index is congruent mod {d} to one of "
            f"{good}, one term of a nonzero tuple has strictly minimal valuation, so the form has "
            "no nonzero zero there; in particular none over Q_p.",
        ],
        form=form.to_dict(),
        prime=p,
        profile=prof.to_dict(),
        parameters={"good_ramification_residues": good},
    )


def scan_primes_for_certificate(form: DiagonalForm, p_max: int) -> list[Certificate]:
    """All NoAbelianPoints certificates at primes p <= p_max, sorted by p."""
    if p_max < 2:
        raise ValueError("p_max must be >= 2")
    out = []
    for p in primes_up_to(p_max):
        cert = certify_no_abelian_points(form, p)
        if cert is not None:
            out.append(cert)
    return out


# --- constructions -------------------------------------------------------

def build_theorem1_form(a: int, b: int, c: int, p: int) -> DiagonalForm:
    """a X^3 + b p Y^3 + c p^2 Z^3 with p = 2 mod 3 and p prime to abc."""
    if not is_prime(p):
        raise HypothesisError("p is prime", f"p = {p}")
    if p % 3 != 2:
        raise HypothesisError("p = -1 mod 3", f"{p} = {p % 3} mod 3")
    if (a * b * c) % p == 0:
        raise HypothesisError("p does not divide abc", f"{p} | {a * b * c}")
    return DiagonalForm(3, (a, b * p, c * p * p))


def build_cy_form(ell: int, p: int) -> DiagonalForm:
    """sum_{i<ell} p^i X_i^ell for an odd prime ell not dividing p(p-1)."""
    if not (is_prime(ell) and ell % 2 == 1):
        raise HypothesisError("ell is an odd prime", f"ell = {ell}")
    if not is_prime(p):
        raise HypothesisError("p is prime", f"p = {p}")
    if (p * (p - 1)) % ell == 0:
        raise HypothesisError("ell does not divide p(p-1)", f"{ell} | {p * (p - 1)}")
    return DiagonalForm(ell, tuple(p**i for i in range(ell)))


# --- finite oracles ------------------------------------------------------

def _term_tables(form: DiagonalForm, P: int) -> np.ndarray:
    x = np.arange(P, dtype=np.int64)
    xd = np.ones(P, dtype=np.int64)
    for _ in range(form.degree):
        xd = xd * x % P
    return np.stack([(c % P) * xd % P for c in form.coefficients])


def _sumset(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Boolean sumset of two subsets of Z/P via cyclic convolution."""
    if not a.any() or not b.any():
        return np.zeros_like(a)
    n = a.size
    conv = np.fft.irfft(np.fft.rfft(a.astype(np.float64)) * np.fft.rfft(b.astype(np.float64)), n)
    # counts are integers <= n; float error is far below 1/2
    return conv > 0.5


def _primitive_zero_by_sumsets(form: DiagonalForm, p: int, m: int) -> bool:
    P = p**m
    terms = _term_tables(form, P)
    unit = np.arange(P) % p != 0
    any_sum = np.zeros(P, dtype=np.bool_)
    any_sum[0] = True
    prim_sum = np.zeros(P, dtype=np.bool_)
    for t in terms:
        all_vals = np.zeros(P, dtype=np.bool_)
        all_vals[t] = True
        unit_vals = np.zeros(P, dtype=np.bool_)
        unit_vals[t[unit]] = True
        prim_sum = _sumset(prim_sum, all_vals) | _sumset(any_sum, unit_vals)
        any_sum = _sumset(any_sum, all_vals)
    return bool(prim_sum[0])


def brute_force_primitive(
    form: DiagonalForm, p: int, m: int, mode: str = "auto", budget: int = DEFAULT_BUDGET
) -> bool:
    """Does some primitive tuple satisfy F = 0 mod p^m?

    ``exhaustive`` enumerates the first k-1 coordinates (the last one by
    residue lookup). ``cascade`` climbs precisions p, p^2, ..., p^m and
    stops at the first level with no primitive zero (a primitive zero mod
    p^m reduces to one mod every p^j); each level is decided exactly from
    the sets of values each term can take. ``auto`` picks exhaustive when
    it fits the budget.
    """
    if m < 1:
        raise ValueError("precision m must be >= 1")
    P = p**m
    k = form.nvars
    if mode == "auto":
        mode = "exhaustive" if P ** (k - 1) <= budget else "cascade"
    if mode == "exhaustive":
        if P ** (k - 1) > budget:
            raise ResourceLimitError(f"{P}^{k - 1} tuples exceed budget {budget}")
        terms = _term_tables(form, P)
        last = terms[-1]
        unit = np.arange(P) % p != 0
        last_any = np.zeros(P, dtype=np.bool_)
        last_any[last] = True
        last_unit = np.zeros(P, dtype=np.bool_)
        last_unit[last[unit]] = True
        return bool(kernels.primitive_zero_exists(terms[:-1].copy(), last_any, last_unit, P, p))
    if mode == "cascade":
        if P > budget:
            raise ResourceLimitError(f"modulus {P} exceeds budget {budget}")
        for j in range(1, m + 1):
            if not _primitive_zero_by_sumsets(form, p, j):
                return False
        return True
    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class LocalWitness:
    """A primitive zero mod p^m that Hensel's lemma lifts to a Z_p-point."""

    prime: int
    precision: int
    point: tuple[int, ...]
    coordinate: int
    derivative_valuation: int

    def to_dict(self):
        return {
            "prime": self.prime,
            "precision": self.precision,
            "point": list(self.point),
            "coordinate": self.coordinate,
            "derivative_valuation": self.derivative_valuation,
        }


def _liftable_table(form: DiagonalForm, p: int, m: int) -> np.ndarray:
    """liftable[j, x]: 2 v_p(d c_j x^(d-1)) + 1 <= m, x read as an integer in [0, p^m)."""
    P = p**m
    out = np.zeros((form.nvars, P), dtype=np.bool_)
    for j, c in enumerate(form.coefficients):
        base = valuation(form.degree * c, p)
        for x in range(1, P):
            w = base + (form.degree - 1) * valuation(x, p)
            out[j, x] = 2 * w + 1 <= m
    return out


def local_solve_diagonal(
    form: DiagonalForm, p: int, precision: int | None = None, budget: int = DEFAULT_BUDGET
) -> LocalWitness | None:
    """Search primitive tuples mod p^m for a Hensel-liftable zero.

    A zero a with F(a) = 0 mod p^(2w+1), where w = v_p(dF/dx_j(a)) for some
    j, lifts to a genuine zero in Z_p (Newton iteration in x_j). With
    ``precision=None`` the precisions 1, 3, 5 are tried in turn; tuples
    are scanned lexicographically and the first hit is returned.
    """
    if precision is not None and precision < 1:
        raise ValueError("precision must be >= 1")
    ladder = DEFAULT_PRECISIONS if precision is None else (precision,)
    for m in ladder:
        P = p**m
        if P**form.nvars > budget:
            raise ResourceLimitError(f"{P}^{form.nvars} tuples exceed budget {budget}")
        terms = _term_tables(form, P)
        idx = int(kernels.first_hensel_zero(terms, _liftable_table(form, p, m), P, p))
        if idx < 0:
            continue
        point = []
        for _ in range(form.nvars):
            idx, r = divmod(idx, P)
            point.append(r)
        point = tuple(reversed(point))
        for j in range(form.nvars):
            if point[j] % P == 0:
                continue
            w = valuation(form.partial(j, point), p)
            if 2 * w + 1 <= m:
                return LocalWitness(p, m, point, j, w)
    return None


def hensel_lift(form: DiagonalForm, witness: LocalWitness, target: int) -> tuple[int, ...]:
    """Newton-lift ``witness`` in its liftable coordinate until F = 0 mod p^target."""
    p, j, w = witness.prime, witness.coordinate, witness.derivative_valuation
    xs = list(witness.point)
    mod = p ** (target + 2 * w + 2)
    for _ in range(4 * target + 8):
        val = form(xs)
        if val % p**target == 0:
            return tuple(xs)
        deriv = form.partial(j, xs)
        if valuation(deriv, p) != w:
            raise ArithmeticError("derivative valuation drifted; witness was not liftable")
        u = deriv // p**w
        # F / p^w is integral because v_p(F) >= 2w + 1
        step = (val // p**w) * pow(u, -1, mod) % mod
        xs[j] = (xs[j] - step) % mod
    raise ArithmeticError("Newton iteration failed to converge")


def local_witness_certificate(
    form: DiagonalForm, p: int, precision: int | None = None, budget: int = DEFAULT_BUDGET
) -> Certificate | None:
    """LocalWitness document: a Hensel-liftable zero, with an explicit lift as a check."""
    w = local_solve_diagonal(form, p, precision, budget)
    if w is None:
        return None
    m, j, dv = w.precision, w.coordinate, w.derivative_valuation
    target = m + 10
    lifted = hensel_lift(form, w, target)
    val = form(w.point)
    vf = valuation(val, p) if val else None
    conditions = [
        Condition("primitive", f"{list(w.point)} has a coordinate prime to {p}", any(x % p for x in w.point)),
        Condition(
            "zero_mod_p^m",
            f"F{tuple(w.point)} = {val} is divisible by {p}^{m}",
            val % p**m == 0,
        ),
        Condition(
            "hensel_inequality",
            f"v_{p}(dF/dx_{j}) = {dv} and 2*{dv} + 1 <= {m}",
            2 * dv + 1 <= m,
        ),
        Condition(
            "explicit_lift",
            f"Newton iteration in x_{j} gives a zero mod {p}^{target}",
            form(lifted) % p**target == 0,
        ),
    ]
    return Certificate(
        kind="LocalWitness",
        conditions=conditions,
        lemma_chain=[
            f"Hensel: a zero mod p^(2w+1) with w the valuation of a partial derivative lifts to a zero in Z_{p}.",
            f"The lifted zero is primitive, so the form has a nonzero Q_{p}-point.",
        ],
        form=form.to_dict(),
        prime=p,
        parameters={
            "witness": w.to_dict(),
            "valuation_of_value": vf,
            "precision_ladder": list(DEFAULT_PRECISIONS) if precision is None else [precision],
            "budget": budget,
        },
    )
