"""Varieties over Q((t)): Laurent series, norm forms, Galois certificates, tame symbols, K4."""
from .galois import (
    GaloisVerdict,
    is_abelian_extension,
    quartic_galois_group,
    quartic_verdict,
    resolvent_cubic,
    sn_certificate,
)
from .k4 import K4Report, k4_s4_report
from .laurent import LaurentSeries, TruncationError
from .norms import norm_equation_certificate, norm_form_eval
from .numberfield import NumberField, NumberFieldElement
from .tame import TameSymbol, tame_symbol

__all__ = [
    "GaloisVerdict",
    "K4Report",
    "LaurentSeries",
    "NumberField",
    "NumberFieldElement",
    "TameSymbol",
    "TruncationError",
    "is_abelian_extension",
    "k4_s4_report",
    "norm_equation_certificate",
    "norm_form_eval",
    "quartic_galois_group",
    "quartic_verdict",
    "resolvent_cubic",
    "sn_certificate",
    "tame_symbol",
]
