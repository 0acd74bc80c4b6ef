"""Certificates and searches for varieties without points over abelian extensions.

Local side: valuation-staircase certificates for diagonal forms, with
brute-force and Hensel oracles. Global side: split-prime and elliptic
curve witness searches. Appendix: Laurent series, norm forms, Galois
group certificates, tame symbols and the S4 action on K4.
"""
from ._backend import BACKEND, HAS_NUMBA
from .arith import (
    abelian_ramification_obstruction,
    catalan_solutions,
    crt,
    crt_search,
    cyclotomic_ramification,
    euler_phi,
    factorize,
    is_prime,
    multiplicative_order,
    valuation,
)
from .certificate import Certificate, Condition
from .elliptic import (
    CurveModel,
    GroupStructure,
    count_points,
    find_ell,
    group_structure,
    search_curve_with_order,
    selmer_jacobian,
)
from .errors import (
    AbelianPointsError,
    HypothesisError,
    InternalContradiction,
    NotFoundError,
    NotSquarefreeError,
    ResourceLimitError,
    UnsupportedError,
)
from .ffield import GF, FiniteField, cycle_type, splits_completely
from .global_constructions import (
    corollary2_prime,
    decompose_genus,
    genus_construction_plan,
    riemann_hurwitz_double_cover,
    theorem3_search,
    theorem_ell_search,
)
from .local_certificates import (
    DiagonalForm,
    brute_force_primitive,
    build_cy_form,
    build_theorem1_form,
    certify_no_abelian_points,
    local_solve_diagonal,
    scan_primes_for_certificate,
    staircase_check,
    valuation_profile,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianPointsError",
    "BACKEND",
    "Certificate",
    "Condition",
    "CurveModel",
    "DiagonalForm",
    "FiniteField",
    "GF",
    "GroupStructure",
    "HAS_NUMBA",
    "HypothesisError",
    "InternalContradiction",
    "NotFoundError",
    "NotSquarefreeError",
    "ResourceLimitError",
    "UnsupportedError",
    "abelian_ramification_obstruction",
    "brute_force_primitive",
    "build_cy_form",
    "build_theorem1_form",
    "catalan_solutions",
    "certify_no_abelian_points",
    "corollary2_prime",
    "count_points",
    "crt",
    "crt_search",
    "cycle_type",
    "cyclotomic_ramification",
    "decompose_genus",
    "euler_phi",
    "factorize",
    "find_ell",
    "genus_construction_plan",
    "group_structure",
    "is_prime",
    "local_solve_diagonal",
    "multiplicative_order",
    "riemann_hurwitz_double_cover",
    "scan_primes_for_certificate",
    "search_curve_with_order",
    "selmer_jacobian",
    "splits_completely",
    "staircase_check",
    "theorem3_search",
    "theorem_ell_search",
    "valuation",
    "valuation_profile",
]
