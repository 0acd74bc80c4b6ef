"""Tame symbols of quaternion algebras over Laurent series fields."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from ..certificate import Certificate, Condition
from ..errors import UnsupportedError
from ..intpoly import integer_roots, is_irreducible_over_q, is_rational_square
from ..polytext import format_poly
from .galois import is_abelian_extension, quartic_galois_group
from .laurent import LaurentSeries
from .numberfield import NumberFieldElement, q_trim

RESIDUE_Q = "Q"
RESIDUE_QAB = "Q^ab"


@dataclass(frozen=True)
class TameSymbol:
    representative: str
    residue_field: str
    trivial: bool
    sqrt_minpoly: str | None
    group: str | None
    valuations: tuple[int, int]

    def certificate(self, a: str, b: str) -> Certificate:
        va, vb = self.valuations
        state = "trivial" if self.trivial else "nontrivial"
        conds = [
            Condition("valuations", f"v(a) = {va}, v(b) = {vb}", True),
            Condition(
                "representative",
                f"(-1)^(v(a) v(b)) a^v(b) / b^v(a) has residue {self.representative}",
                True,
            ),
        ]
        if self.sqrt_minpoly is not None:
            detail = f"square root has minimal polynomial {self.sqrt_minpoly}"
            if self.group:
                detail += f" with Galois group {self.group}"
            conds.append(Condition("square_test", detail, True))
        chain = [
            f"In a complete discretely valued field with residue field of characteristic 0, the quaternion "
            f"algebra (a, b) splits iff its tame symbol is a square in the residue field {self.residue_field}.",
        ]
        if self.residue_field == RESIDUE_QAB:
            chain.append(
                "An algebraic number u is a square in Q^ab iff Q(sqrt(u)) is an abelian extension of Q."
            )
        chain.append(f"The residue {self.representative} is {'a' if self.trivial else 'not a'} square, so the "
                     f"algebra is {state}.")
        if not self.trivial and self.residue_field == RESIDUE_QAB:
            chain.append(
                "Weil restriction of the associated conic from F(sqrt(2), t^(1/2)) to F gives a geometrically "
                "rational fourfold with no F^ab-point (recorded, not computed)."
            )
        return Certificate(
            kind="TameSymbol",
            conditions=conds,
            lemma_chain=chain,
            parameters={
                "a": a,
                "b": b,
                "residue_field": self.residue_field,
                "representative": self.representative,
                "trivial": self.trivial,
                "sqrt_minpoly": self.sqrt_minpoly,
                "group": self.group,
            },
        )


def _monic_integer(poly) -> list[int]:
    """Monic integer polynomial whose roots are s times the roots of the monic rational ``poly``."""
    poly = q_trim(poly)
    n = len(poly) - 1
    s = 1
    for c in poly:
        s = lcm(s, Fraction(c).denominator)
    out = [poly[i] * s ** (n - i) for i in range(n + 1)]
    assert all(c.denominator == 1 for c in out)
    return [int(c) for c in out]


def is_square_in_qab(u) -> tuple[bool, str, str | None]:
    """(is square, minimal polynomial of a square root, Galois group if a quartic)."""
    if isinstance(u, NumberFieldElement):
        mp = u.minpoly()
    else:
        mp = [-Fraction(u), Fraction(1)]
    k = len(mp) - 1
    if k > 2:
        raise UnsupportedError("square test over Q^ab needs an element of degree <= 2")
    h = [Fraction(0)] * (2 * k + 1)
    for i, c in enumerate(mp):
        h[2 * i] = c
    hz = _monic_integer(h)
    text = format_poly(hz)
    if k == 1:
        # every quadratic field is abelian
        return True, text, None
    if integer_roots(hz):
        return True, text, None
    if not is_irreducible_over_q(hz):
        # the square root has degree <= 2, hence lies in an abelian field
        return True, text, None
    group = quartic_galois_group(hz)
    return is_abelian_extension(hz), text, group


def tame_symbol(a: LaurentSeries, b: LaurentSeries, residue_field: str = RESIDUE_QAB) -> TameSymbol:
    """Tame symbol of (a, b) and whether the quaternion algebra (a, b) is split.

    Only valuations and leading coefficients enter, so truncation depth is
    irrelevant. ``residue_field`` is "Q" (exact rational square test) or
    "Q^ab" (squareness decided through the abelianness of Q(sqrt(u))).
    """
    if a.is_known_zero() or b.is_known_zero():
        raise ValueError("tame symbol of zero")
    va, vb = a.valuation(), b.valuation()
    rep = (-1) ** (va * vb) * a.leading_coefficient() ** vb
    lb = b.leading_coefficient()
    rep = rep / lb**va if va >= 0 else rep * lb ** (-va)
    minpoly = group = None
    if residue_field == RESIDUE_Q:
        if isinstance(rep, NumberFieldElement):
            if not rep.is_rational():
                raise ValueError("residue is irrational; use residue field Q^ab")
            rep = rep.coeffs[0]
        trivial = is_rational_square(rep)
    elif residue_field == RESIDUE_QAB:
        trivial, minpoly, group = is_square_in_qab(rep)
    else:
        raise ValueError(f"unknown residue field {residue_field!r}")
    return TameSymbol(str(rep), residue_field, trivial, minpoly, group, (va, vb))
