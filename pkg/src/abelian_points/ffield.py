"""Finite fields F_p and F_q = F_p[x]/(m), plus polynomial arithmetic over F_p.

Field elements are plain ints. In F_q an element encodes the residue
polynomial c_0 + c_1 x + ... + c_{a-1} x^{a-1} as the base-p integer
c_0 + c_1 p + ... ; prime-field constants therefore encode themselves.

Polynomials over F_p are lists of ints in [0, p), constant term first,
with no trailing zeros (``[]`` is the zero polynomial).
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .arith import factorize, is_prime
from .errors import NotSquarefreeError

TABLE_LIMIT = 1024


# --- polynomials over F_p -------------------------------------------------

def poly_trim(f, p):
    f = [c % p for c in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_deg(f):
    return len(f) - 1


def poly_add(f, g, p):
    n = max(len(f), len(g))
    return poly_trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)], p)


def poly_sub(f, g, p):
    return poly_add(f, [-c for c in g], p)


def poly_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return poly_trim(out, p)


def poly_divmod(f, g, p):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = poly_trim(f, p)
    inv = pow(g[-1], -1, p)
    q = [0] * max(len(f) - len(g) + 1, 0)
    r = list(f)
    for i in range(len(r) - len(g), -1, -1):
        c = r[i + len(g) - 1] * inv % p
        q[i] = c
        if c:
            for j, b in enumerate(g):
                r[i + j] = (r[i + j] - c * b) % p
    return poly_trim(q, p), poly_trim(r[: len(g) - 1], p)


def poly_mod(f, g, p):
    return poly_divmod(f, g, p)[1]


def poly_monic(f, p):
    if not f:
        return []
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def poly_gcd(f, g, p):
    f, g = poly_trim(f, p), poly_trim(g, p)
    while g:
        f, g = g, poly_mod(f, g, p)
    return poly_monic(f, p)


def poly_powmod(f, e, m, p):
    result = [1]
    base = poly_mod(f, m, p)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base, p), m, p)
        base = poly_mod(poly_mul(base, base, p), m, p)
        e >>= 1
    return poly_trim(result, p)


def poly_deriv(f, p):
    return poly_trim([i * f[i] for i in range(1, len(f))], p)


def poly_eval(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def poly_from_int(n, p):
    """Decode a base-p integer into a polynomial (the element encoding)."""
    out = []
    while n:
        n, r = divmod(n, p)
        out.append(r)
    return out


def poly_to_int(f, p):
    return sum(c * p**i for i, c in enumerate(f))


def is_irreducible(f, p) -> bool:
    """Rabin's test for a polynomial over F_p."""
    f = poly_monic(poly_trim(f, p), p)
    n = poly_deg(f)
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    for r, _ in factorize(n):
        h = poly_sub(poly_powmod(x, p ** (n // r), f, p), x, p)
        if poly_deg(poly_gcd(f, h, p)) > 0:
            return False
    return not poly_sub(poly_powmod(x, p**n, f, p), x, p)


@functools.lru_cache(maxsize=None)
def find_irreducible(p: int, a: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree a over F_p (by base-p encoding)."""
    if a < 1:
        raise ValueError("degree must be >= 1")
    for n in range(p**a, 2 * p**a):
        f = poly_from_int(n, p)
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("unreachable: irreducibles exist in every degree")


def is_squarefree_mod_p(f, p) -> bool:
    f = poly_trim(f, p)
    if not f:
        raise ValueError("zero polynomial mod p")
    return poly_deg(poly_gcd(f, poly_deriv(f, p), p)) == 0


def count_distinct_roots(f, p) -> int:
    """Number of distinct roots in F_p, as deg gcd(f, x^p - x)."""
    f = poly_trim(f, p)
    if not f:
        raise ValueError("zero polynomial mod p")
    if poly_deg(f) == 0:
        return 0
    xp = poly_sub(poly_powmod([0, 1], p, f, p), [0, 1], p)
    return poly_deg(poly_gcd(f, xp, p))


def distinct_degree_factorization(f, p):
    """Return the list of irreducible-factor degrees of a squarefree f."""
    f = poly_monic(poly_trim(f, p), p)
    degs = []
    h = [0, 1]
    i = 0
    while poly_deg(f) >= 2 * (i + 1):
        i += 1
        h = poly_powmod(h, p, f, p)
        g = poly_gcd(f, poly_sub(h, [0, 1], p), p)
        if poly_deg(g) > 0:
            degs += [i] * (poly_deg(g) // i)
            f = poly_divmod(f, g, p)[0]
            h = poly_mod(h, f, p)
    if poly_deg(f) > 0:
        degs.append(poly_deg(f))
    return sorted(degs)


def cycle_type(f, p) -> tuple[int, ...]:
    """Sorted degrees of the irreducible factors of an integer polynomial f mod p.

    Raises :class:`NotSquarefreeError` when f mod p has a repeated factor;
    Dedekind's theorem says nothing there, so no type is guessed.
    """
    g = poly_trim(f, p)
    if len(g) != len(f):
        raise ValueError("leading coefficient vanishes mod p")
    if not is_squarefree_mod_p(g, p):
        raise NotSquarefreeError(f"reduction mod {p} is not squarefree")
    return tuple(distinct_degree_factorization(g, p))


def splits_completely(f, p) -> bool:
    g = poly_trim(f, p)
    if len(g) != len(f) or not is_squarefree_mod_p(g, p):
        return False
    return count_distinct_roots(g, p) == poly_deg(g)


# --- fields ----------------------------------------------------------------

@dataclass(frozen=True)
class FieldTables:
    """Lookup tables consumed by the point-counting kernels."""

    add: np.ndarray
    mul: np.ndarray
    inv: np.ndarray
    nsqrt: np.ndarray
    trace: np.ndarray


class FiniteField:
    """F_q for q = p^a with an explicit monic irreducible modulus."""

    def __init__(self, p: int, degree: int = 1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if degree < 1:
            raise ValueError("degree must be >= 1")
        if modulus is None:
            modulus = find_irreducible(p, degree) if degree > 1 else (0, 1)
        modulus = tuple(poly_monic(poly_trim(list(modulus), p), p))
        if poly_deg(modulus) != degree or not is_irreducible(list(modulus), p):
            raise ValueError(f"modulus {modulus} is not irreducible of degree {degree}")
        self.p = p
        self.degree = degree
        self.modulus = modulus
        self.q = p**degree
        self._tables = None
        self._log = None
        self._exp = None

    def __repr__(self):
        return f"GF({self.q})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    @property
    def is_prime_field(self):
        return self.degree == 1

    def elements(self):
        return range(self.q)

    def __call__(self, n: int) -> int:
        """Image of an integer in the prime subfield."""
        return n % self.p

    def to_coeffs(self, a: int) -> list[int]:
        c = poly_from_int(a, self.p)
        return c + [0] * (self.degree - len(c))

    def from_coeffs(self, coeffs) -> int:
        return poly_to_int(poly_mod(list(coeffs), list(self.modulus), self.p), self.p)

    # arithmetic
    def add(self, a, b):
        if self.degree == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return poly_to_int(poly_add(poly_from_int(a, self.p), poly_from_int(b, self.p), self.p), self.p)

    def neg(self, a):
        if self.degree == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return poly_to_int(poly_trim([-c for c in poly_from_int(a, self.p)], self.p), self.p)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.degree == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        log, exp = self._logexp()
        return int(exp[(log[a] + log[b]) % (self.q - 1)])

    def _polymul(self, a, b):
        prod = poly_mul(poly_from_int(a, self.p), poly_from_int(b, self.p), self.p)
        return poly_to_int(poly_mod(prod, list(self.modulus), self.p), self.p)

    def inv(self, a):
        if a % self.q == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.degree == 1:
            return pow(a, -1, self.p)
        log, exp = self._logexp()
        return int(exp[(-log[a]) % (self.q - 1)])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        if self.degree == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 0 if e else 1
        log, exp = self._logexp()
        return int(exp[(log[a] * e) % (self.q - 1)])

    def is_square(self, a):
        if a == 0 or self.p == 2:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1

    def _logexp(self):
        if self._log is None:
            q = self.q
            order_factors = [r for r, _ in factorize(q - 1)]
            for g in range(2, q):
                # g generates F_q^* iff g^((q-1)/r) != 1 for each prime r | q-1
                exp = np.zeros(q - 1, dtype=np.int64)
                exp[0] = 1
                cur = 1
                for k in range(1, q - 1):
                    cur = self._polymul(cur, g)
                    exp[k] = cur
                if all(exp[(q - 1) // r] != 1 for r in order_factors):
                    break
            else:
                raise AssertionError("no primitive element found")
            log = np.zeros(q, dtype=np.int64)
            log[exp] = np.arange(q - 1)
            self._exp, self._log = exp, log
        return self._log, self._exp

    def tables(self) -> FieldTables:
        """Full add/mul tables; only for q <= TABLE_LIMIT."""
        if self._tables is None:
            q, p = self.q, self.p
            if q > TABLE_LIMIT:
                raise ValueError(f"tables only built for q <= {TABLE_LIMIT}")
            e = np.arange(q, dtype=np.int64)
            digits = np.stack([(e // p**i) % p for i in range(self.degree)])
            weights = (p ** np.arange(self.degree, dtype=np.int64))[:, None, None]
            add = (((digits[:, :, None] + digits[:, None, :]) % p) * weights).sum(axis=0)
            if self.degree == 1:
                mul = (e[:, None] * e[None, :]) % p
            else:
                log, exp = self._logexp()
                mul = exp[(log[:, None] + log[None, :]) % (q - 1)]
                mul[0, :] = 0
                mul[:, 0] = 0
            inv = np.zeros(q, dtype=np.int64)
            for a in range(1, q):
                inv[a] = self.inv(a)
            nsqrt = np.bincount(mul[e, e], minlength=q).astype(np.int64)
            # absolute trace to F_p; only its vanishing is used (char 2 kernel)
            tr = e.copy()
            z = e.copy()
            for _ in range(self.degree - 1):
                z = mul[z, z] if p == 2 else _frob(mul, z, p)
                tr = add[tr, z]
            self._tables = FieldTables(
                add.astype(np.int64), mul.astype(np.int64), inv, nsqrt, tr.astype(np.int64)
            )
        return self._tables


def _frob(mul, z, p):
    out = z
    for _ in range(p - 1):
        out = mul[out, z]
    return out


@functools.lru_cache(maxsize=None)
def GF(p: int, a: int = 1) -> FiniteField:
    """Cached field with the canonical (smallest) modulus."""
    return FiniteField(p, a)


def field_of_order(q: int) -> FiniteField:
    from .arith import prime_power

    p, a = prime_power(q)
    return GF(p, a)
