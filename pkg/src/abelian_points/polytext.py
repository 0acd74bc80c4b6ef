"""Text formats shared repo-wide: integer polynomials and diagonal forms.

Polynomials are dense coefficient lists, constant term first. Both
``"x^4 - 2"`` and ``"[-2, 0, 0, 0, 1]"`` parse to ``[-2, 0, 0, 0, 1]``.
"""
from __future__ import annotations

import json
import re

_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?P<coef>\d+)?\s*\*?\s*
        (?:(?P<var>[a-zA-Z]\w*)(?:\s*(?:\^|\*\*)\s*(?P<exp>\d+))?)?\s*""",
    re.VERBOSE,
)


def _normalize(text: str) -> str:
    return text.replace("−", "-").replace("–", "-").strip()


def _terms(text: str):
    """Yield (coefficient, variable or None, exponent) triples."""
    text = _normalize(text)
    if not text:
        raise ValueError("empty expression")
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (m.group("coef") is None and m.group("var") is None):
            raise ValueError(f"cannot parse term at {text[pos:]!r}")
        if pos > 0 and m.group("sign") is None:
            raise ValueError(f"missing operator before {text[pos:]!r}")
        coef = int(m.group("coef") or 1)
        if m.group("sign") == "-":
            coef = -coef
        var = m.group("var")
        exp = int(m.group("exp") or 1) if var else 0
        yield coef, var, exp
        pos = m.end()


def parse_poly(text: str | list | tuple) -> list[int]:
    """Parse a univariate integer polynomial; returns constant-first coefficients."""
    if isinstance(text, (list, tuple)):
        coeffs = [int(c) for c in text]
    else:
        s = _normalize(text)
        if s.startswith("["):
            coeffs = [int(c) for c in json.loads(s)]
        else:
            acc: dict[int, int] = {}
            name = None
            for coef, var, exp in _terms(s):
                if var is not None:
                    if name is None:
                        name = var
                    elif var != name:
                        raise ValueError(f"mixed variables {name!r} and {var!r}")
                acc[exp] = acc.get(exp, 0) + coef
            coeffs = [0] * (max(acc) + 1)
            for e, c in acc.items():
                coeffs[e] = c
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        coeffs = [0]
    return coeffs


def format_poly(coeffs, var: str = "x") -> str:
    """Inverse of :func:`parse_poly` (descending powers)."""
    parts = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def parse_diagonal(text: str) -> tuple[int, list[int]]:
    """Parse ``"2x^3 + 4y^3 + 5z^3"`` into (degree, coefficients).

    Variables are ordered by first appearance; every term must carry the
    same exponent and each variable may appear once.
    """
    seen: dict[str, int] = {}
    degree = None
    for coef, var, exp in _terms(text):
        if var is None:
            raise ValueError("constant term in a diagonal form")
        if var in seen:
            raise ValueError(f"variable {var!r} repeated")
        if degree is None:
            degree = exp
        elif exp != degree:
            raise ValueError(f"mixed degrees {degree} and {exp}")
        seen[var] = coef
    return degree, list(seen.values())
