"""Truncated Laurent series over Q or a number field.

A series is stored as (v, coefficients, prec): the value is
sum_i c_i t^(v+i) + O(t^prec) with c_0 != 0, so the valuation is exact.
A series with no known nonzero coefficient is "zero up to O(t^prec)"; its
valuation is not defined and inverting it fails.
"""
from __future__ import annotations

import re
from fractions import Fraction

from ..polytext import parse_poly
from .numberfield import NumberField, NumberFieldElement

DEFAULT_TERMS = 40


class TruncationError(ArithmeticError):
    """The requested quantity lies beyond the known precision."""


class LaurentSeries:
    __slots__ = ("v", "coeffs", "prec", "field")

    def __init__(self, coeffs, v: int = 0, prec: int | None = None, field: NumberField | None = None):
        cs = list(coeffs)
        if field is not None:
            cs = [field(c) for c in cs]
        else:
            cs = [c if isinstance(c, NumberFieldElement) else Fraction(c) for c in cs]
            field = next((c.field for c in cs if isinstance(c, NumberFieldElement)), None)
            if field is not None:
                cs = [field(c) for c in cs]
        if prec is None:
            prec = v + DEFAULT_TERMS
        k = 0
        while k < len(cs) and not cs[k]:
            k += 1
        cs = cs[k:]
        v += k
        cs = cs[: max(0, prec - v)]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.prec = prec
        if cs:
            self.v = v
            self.coeffs = tuple(cs)
        else:
            self.v = prec
            self.coeffs = ()

    # --- constructors ---
    @classmethod
    def uniformizer(cls, field=None, prec: int | None = None):
        return cls([1], 1, prec, field)

    @classmethod
    def constant(cls, c, prec: int | None = None):
        field = c.field if isinstance(c, NumberFieldElement) else None
        return cls([c], 0, prec, field)

    def _zero(self):
        return self.field.zero() if self.field else Fraction(0)

    def _coerce(self, other):
        if isinstance(other, LaurentSeries):
            return other
        if isinstance(other, (int, Fraction, NumberFieldElement)):
            c = self.field(other) if self.field else other
            # scalars are exact; give them enough precision never to be the bottleneck
            return LaurentSeries([c], 0, abs(self.prec) + abs(self.v) + DEFAULT_TERMS, self.field)
        return NotImplemented

    # --- queries ---
    def is_known_zero(self) -> bool:
        return not self.coeffs

    def valuation(self) -> int:
        if not self.coeffs:
            raise TruncationError(f"series is zero up to O(t^{self.prec}); valuation unknown")
        return self.v

    def leading_coefficient(self):
        if not self.coeffs:
            raise TruncationError(f"series is zero up to O(t^{self.prec})")
        return self.coeffs[0]

    def coefficient(self, n: int):
        if n >= self.prec:
            raise TruncationError(f"coefficient of t^{n} is beyond O(t^{self.prec})")
        i = n - self.v
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self._zero()

    # --- arithmetic ---
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        field = self.field or other.field
        prec = min(self.prec, other.prec)
        lo = min(self.v, other.v)
        zero = field.zero() if field else Fraction(0)
        out = [zero] * max(0, prec - lo)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                k = s.v + i - lo
                if k < len(out):
                    out[k] = out[k] + c
        return LaurentSeries(out, lo, prec, field)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries([-c for c in self.coeffs], self.v, self.prec, self.field)

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
        field = self.field or other.field
        prec = min(self.v + other.prec, other.v + self.prec)
        if not self.coeffs or not other.coeffs:
            return LaurentSeries([], 0, prec, field)
        v = self.v + other.v
        n = prec - v
        zero = field.zero() if field else Fraction(0)
        out = [zero] * n
        for i, a in enumerate(self.coeffs[:n]):
            for j, b in enumerate(other.coeffs[: n - i]):
                out[i + j] = out[i + j] + a * b
        return LaurentSeries(out, v, prec, field)

    __rmul__ = __mul__

    def inverse(self):
        if not self.coeffs:
            raise ZeroDivisionError(f"cannot invert a series that is zero up to O(t^{self.prec})")
        v = self.v
        n = self.prec - v  # relative precision is preserved
        a = list(self.coeffs) + [self._zero()] * (n - len(self.coeffs))
        inv0 = 1 / a[0] if not isinstance(a[0], NumberFieldElement) else a[0].inverse()
        b = [inv0]
        for k in range(1, n):
            s = self._zero()
            for i in range(1, k + 1):
                s = s + a[i] * b[k - i]
            b.append(-(s * inv0))
        return LaurentSeries(b, -v, -v + n, self.field)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        one = self.field.one() if self.field else 1
        out = LaurentSeries([one], 0, max(self.prec - self.v, 1), self.field)
        base = self
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
        return (self - other).is_known_zero()

    __hash__ = None

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            e = self.v + i
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            cs = str(c)
            neg = False
            if isinstance(c, Fraction):
                neg = c < 0
                cs = str(abs(c))
            elif " " in cs:
                cs = f"({cs})"
            elif cs.startswith("-"):
                neg, cs = True, cs[1:]
            if mono:
                body = mono if cs == "1" else f"{cs}*{mono}"
            else:
                body = cs
            parts.append(("-" if neg else "+", body))
        out = ""
        for k, (sign, body) in enumerate(parts):
            if k == 0:
                out = ("-" if sign == "-" else "") + body
            else:
                out += f" {sign} {body}"
        tail = f"O(t^{self.prec})"
        return f"{out} + {tail}" if out else tail

    def __repr__(self):
        return f"LaurentSeries({self})"

    @classmethod
    def parse(cls, text: str, field: NumberField | None = None) -> "LaurentSeries":
        """Parse series text such as ``t^-1 + 2 + 3*t + 1/2*t^5 + O(t^40)``.

        With ``field`` given, a coefficient may be a parenthesized integer
        polynomial in the generator, e.g. ``(a + 1)*t^2``.
        """
        s = text.replace(" ", "").replace("\u2212", "-")
        m = re.search(r"\+?O\(t(?:\^(-?\d+))?\)$", s)
        prec = None
        if m:
            prec = int(m.group(1)) if m.group(1) is not None else 1
            s = s[: m.start()]
        terms: dict[int, object] = {}
        for sign, body in _split_terms(s):
            mt = re.fullmatch(r"(?:(\d+(?:/\d+)?|\([^()]*\))\*?)?(t(?:\^(-?\d+))?)?", body)
            if not mt or (mt.group(1) is None and mt.group(2) is None):
                raise ValueError(f"cannot parse term {body!r}")
            raw = mt.group(1)
            if raw is None:
                c = Fraction(1)
            elif raw.startswith("("):
                if field is None:
                    raise ValueError("parenthesized coefficient needs a number field")
                c = field(parse_poly(raw[1:-1]))
            else:
                c = Fraction(raw)
            if sign == "-":
                c = -c
            e = 0 if mt.group(2) is None else (int(mt.group(3)) if mt.group(3) else 1)
            terms[e] = terms[e] + c if e in terms else c
        if not terms:
            return cls([], 0, prec if prec is not None else DEFAULT_TERMS, field)
        lo, hi = min(terms), max(terms)
        if prec is None:
            prec = lo + DEFAULT_TERMS
        zero = field.zero() if field else Fraction(0)
        return cls([terms.get(e, zero) for e in range(lo, hi + 1)], lo, prec, field)


def _split_terms(s: str):
    """Split at top-level signs, skipping signs inside parentheses or after '^'."""
    out, depth, start = [], 0, 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0 and s[i - 1] != "^":
            out.append(s[start:i])
            start = i
    out.append(s[start:])
    for chunk in out:
        if not chunk:
            continue
        if chunk[0] in "+-":
            yield chunk[0], chunk[1:]
        else:
            yield "+", chunk
