"""Galois groups from Frobenius cycle types and the quartic resolvent.

Cycle types modulo good primes are exact facts about Frobenius elements,
so they can only ever prove that certain permutation shapes occur. The
symmetric-group certificate is therefore one-sided; the quartic
classifier is exact and is cross-checked against those shapes.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..arith import is_prime, primes_up_to
from ..errors import InternalContradiction, NotSquarefreeError, UnsupportedError
from ..ffield import cycle_type
from ..intpoly import discriminant, integer_roots, is_irreducible_over_q, is_rational_square, trim
from ..polytext import format_poly

CERTIFIED = "CertifiedSymmetric"
QUARTIC = "ClassifiedQuartic"
INCONCLUSIVE = "Inconclusive"

DEFAULT_SCAN_BOUND = 1000
CROSS_CHECK_PRIMES = 100

QUARTIC_TYPES = {
    "V4": {(1, 1, 1, 1), (2, 2)},
    "C4": {(1, 1, 1, 1), (2, 2), (4,)},
    "D4": {(1, 1, 1, 1), (2, 2), (4,), (1, 1, 2)},
    "A4": {(1, 1, 1, 1), (1, 3), (2, 2)},
    "S4": {(1, 1, 1, 1), (1, 3), (2, 2), (4,), (1, 1, 2)},
}


@dataclass(frozen=True)
class GaloisVerdict:
    f: tuple[int, ...]
    verdict: str
    group: str | None
    evidence: tuple[tuple[int, tuple[int, ...]], ...]
    scan_bound: int

    @property
    def certified_symmetric(self):
        return self.verdict == CERTIFIED

    def to_dict(self):
        return {
            "f": format_poly(self.f),
            "verdict": self.verdict,
            "group": self.group,
            "evidence": [{"prime": p, "cycle_type": list(ct)} for p, ct in self.evidence],
            "scan_bound": self.scan_bound,
        }


def good_cycle_types(f, bound: int):
    """(p, cycle type) for primes p <= bound not dividing disc(f)."""
    f = trim(f)
    disc = discriminant(f)
    for p in primes_up_to(bound):
        if disc % p == 0:
            continue
        try:
            yield p, tuple(sorted(cycle_type(f, p)))
        except NotSquarefreeError as e:
            raise InternalContradiction(f"squarefree failure at good prime {p}") from e


def _is_full_cycle(ct, d):
    return ct == (d,)


def _is_large_prime_cycle(ct, d):
    big = [c for c in ct if c != 1]
    return len(big) == 1 and is_prime(big[0]) and 2 * big[0] > d


def _gives_transposition(ct):
    return ct.count(2) == 1 and all(c == 2 or c % 2 == 1 for c in ct)


SN_CRITERIA = (
    ("full_cycle", _is_full_cycle),
    ("large_prime_cycle", _is_large_prime_cycle),
    ("transposition_power", lambda ct, d: _gives_transposition(ct)),
)


def sn_certificate(f, prime_scan_bound: int = DEFAULT_SCAN_BOUND) -> GaloisVerdict:
    """CertifiedSymmetric when good-prime cycle types force Gal(f) = S_d.

    A type (d) gives transitivity (and irreducibility), a prime cycle of
    length q > d/2 then gives primitivity, and a type with a single 2 and
    odd other parts powers to a transposition; primitive plus a
    transposition is S_d. Otherwise the verdict is Inconclusive.
    """
    f = tuple(trim(f))
    d = len(f) - 1
    if d < 1 or f[-1] != 1:
        raise ValueError("expected a monic polynomial of degree >= 1")
    if d == 1:
        return GaloisVerdict(f, CERTIFIED, "S1", (), prime_scan_bound)
    found: dict[str, tuple[int, tuple[int, ...]]] = {}
    for p, ct in good_cycle_types(f, prime_scan_bound):
        for name, test in SN_CRITERIA:
            if name not in found and test(ct, d):
                found[name] = (p, ct)
        if len(found) == len(SN_CRITERIA):
            ev = tuple(found[name] for name, _ in SN_CRITERIA)
            return GaloisVerdict(f, CERTIFIED, f"S{d}", ev, prime_scan_bound)
    ev = tuple(found[name] for name, _ in SN_CRITERIA if name in found)
    return GaloisVerdict(f, INCONCLUSIVE, None, ev, prime_scan_bound)


def resolvent_cubic(f) -> list[int]:
    """Resolvent cubic of x^4 + a x^3 + b x^2 + c x + d, with roots r1 r2 + r3 r4 etc."""
    d, c, b, a, one = trim(f)
    assert one == 1
    return [-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, 1]


def _splits_over(delta: int, disc: int) -> bool:
    """Does a quadratic with discriminant delta split over Q(sqrt(disc))?"""
    return delta == 0 or is_rational_square(delta) or is_rational_square(delta * disc)


def _classify(f) -> str:
    d0, c, b, a, _ = f
    disc = discriminant(f)
    roots = integer_roots(resolvent_cubic(f))
    if not roots:
        return "A4" if is_rational_square(disc) else "S4"
    if len(roots) == 3:
        return "V4"
    if len(roots) != 1:
        raise InternalContradiction("resolvent cubic of a separable quartic has a double root")
    r = roots[0]
    # C4 iff (x^2 - r x + d)(x^2 + a x + (b - r)) splits over Q(sqrt(disc))
    if _splits_over(r * r - 4 * d0, disc) and _splits_over(a * a - 4 * (b - r), disc):
        return "C4"
    return "D4"


def quartic_galois_group(f, cross_check_primes: int = CROSS_CHECK_PRIMES) -> str:
    """One of S4, A4, D4, C4, V4 for a monic irreducible integer quartic.

    The verdict is checked against the cycle types of the first
    ``cross_check_primes`` good primes; an impossible type is a hard error.
    """
    f = tuple(trim(f))
    if len(f) != 5 or f[-1] != 1:
        raise ValueError("expected a monic quartic")
    if not is_irreducible_over_q(f):
        raise ValueError(f"{format_poly(f)} is reducible over Q")
    group = _classify(f)
    allowed = QUARTIC_TYPES[group]
    seen = 0
    for p, ct in good_cycle_types(f, 10**6):
        if ct not in allowed:
            raise InternalContradiction(f"{group} verdict contradicted by cycle type {ct} mod {p}")
        seen += 1
        if seen >= cross_check_primes:
            break
    return group


def quartic_verdict(f, cross_check_primes: int = CROSS_CHECK_PRIMES) -> GaloisVerdict:
    group = quartic_galois_group(f, cross_check_primes)
    f = tuple(trim(f))
    ev = {}
    for p, ct in good_cycle_types(f, 10**6):
        ev.setdefault(ct, p)
        if len(ev) == len(QUARTIC_TYPES[group]) or p > 10_000:
            break
    evidence = tuple(sorted((p, ct) for ct, p in ev.items()))
    return GaloisVerdict(f, QUARTIC, group, evidence, cross_check_primes)


def is_abelian_extension(f) -> bool:
    """Is Q[x]/(f) Galois with abelian group? Degree <= 4, f monic irreducible."""
    f = tuple(trim(f))
    n = len(f) - 1
    if n > 4:
        raise UnsupportedError(f"degree {n} > 4 is not supported")
    if f[-1] != 1 or n < 1:
        raise ValueError("expected a monic polynomial of degree >= 1")
    if not is_irreducible_over_q(f):
        raise ValueError(f"{format_poly(f)} is reducible over Q")
    if n <= 2:
        return True
    if n == 3:
        return is_rational_square(discriminant(f))
    return quartic_galois_group(f) in ("C4", "V4")
