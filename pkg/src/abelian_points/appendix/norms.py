"""Norm forms of number fields and the valuation obstruction over Q^ab((t^(1/2)))."""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from ..certificate import Certificate, Condition
from ..intpoly import trim
from ..polytext import format_poly, parse_poly
from .galois import DEFAULT_SCAN_BOUND, sn_certificate
from .numberfield import NumberField

# v(t) in the normalization where t^(1/2) is a uniformizer
V_T = 2


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_det(m):
    """Determinant over any commutative ring whose elements support + and *."""
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        term = None
        for i in range(n):
            e = m[i][perm[i]]
            if isinstance(e, (int, Fraction)) and e == 0:
                term = 0
                break
            term = e if term is None else term * e
        if isinstance(term, int) and term == 0:
            continue
        total = total + term if _perm_sign(perm) > 0 else total - term
    return total


def basis_matrices(f):
    """Multiplication matrices of 1, a, ..., a^(d-1) in the power basis of Q[a]/(f)."""
    K = NumberField(f, check=False)
    return [K([0] * i + [1]).multiplication_matrix() for i in range(K.degree)]


def norm_form_eval(f, xs):
    """N(sum_i x_i a^(i-1)) as the determinant of multiplication by that element.

    Coordinates may be rationals or Laurent series; the result has the same type.
    """
    f = trim(parse_poly(f))
    d = len(f) - 1
    if len(xs) != d:
        raise ValueError(f"need {d} coordinates, got {len(xs)}")
    mats = basis_matrices(f)
    m = []
    for r in range(d):
        row = []
        for c in range(d):
            entry = 0
            for x, M in zip(xs, mats):
                if M[r][c]:
                    entry = entry + M[r][c] * x
            row.append(entry)
        m.append(row)
    return leibniz_det(m)


def norm_equation_certificate(f, m: int = V_T, scan_bound: int = DEFAULT_SCAN_BOUND) -> Certificate | None:
    """Certificate that N(X_1..X_d) = t Z^d has no point over Q^ab((t^(1/2))).

    ``m`` is v(t) in the valuation normalized on that field (2 for t itself).
    Issued iff d >= 3, cycle types certify Gal = S_d, and d does not divide m.
    """
    f = tuple(trim(parse_poly(f)))
    d = len(f) - 1
    verdict = sn_certificate(f, scan_bound)
    ev = ", ".join(f"{list(ct)} mod {p}" for p, ct in verdict.evidence)
    conditions = [
        Condition("degree_at_least_3", f"d = {d} >= 3", d >= 3),
        Condition(
            "galois_symmetric",
            f"cycle types certify Gal(f) = S_{d}: {ev}" if verdict.certified_symmetric
            else f"cycle types up to {scan_bound} do not certify S_{d}",
            verdict.certified_symmetric,
        ),
        Condition("valuation_obstruction", f"{d} does not divide v(t) = {m}", m % d != 0),
    ]
    if not all(c.verified for c in conditions):
        return None
    chain = [
        f"Gal(K/Q) = S_{d} for K = Q[x]/({format_poly(f)}) (computed cycle types: full cycle, large prime "
        "cycle, transposition power).",
        f"S_{d - 1} is a maximal non-normal subgroup of S_{d}, so K has no intermediate fields and is not Galois; "
        "thus K meets Q^ab only in Q and K (x) Q^ab is a field.",
        "Hence K (x) F^ab is a field over F^ab = Q^ab((t^(1/2))), the norm form is anisotropic there, and there is "
        "no point with Z = 0.",
        f"K (x) F^ab over F^ab is unramified of degree {d}, so every nonzero norm has valuation divisible by {d}, "
        f"while v(t Z^{d}) = {m} + {d} v(Z) is not; there is no point with Z != 0.",
    ]
    if d == 3:
        chain.append("With d = 3 the equation defines a geometrically integral cubic surface.")
    if d == 4:
        chain.append("With d = 4 a general plane section is a smooth plane quartic: a genus 3 curve.")
    return Certificate(
        kind="NormEquation",
        conditions=conditions,
        lemma_chain=chain,
        parameters={
            "f": format_poly(f),
            "degree": d,
            "rhs_valuation": m,
            "z_exponent": d,
            "scan_bound": scan_bound,
            "galois": verdict.to_dict(),
        },
    )
