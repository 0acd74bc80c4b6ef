"""Exact arithmetic on integer polynomials (constant-first coefficient lists)."""
from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .arith import factorize, primes_up_to
from .errors import NotSquarefreeError, UnsupportedError
from .ffield import cycle_type


def trim(f):
    f = list(f)
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    return f


def degree(f) -> int:
    f = trim(f)
    return -1 if f == [0] else len(f) - 1


def evaluate(f, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def derivative(f):
    return [i * c for i, c in enumerate(f)][1:] or [0]


def bareiss_det(m) -> int:
    """Fraction-free determinant of a square integer matrix."""
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def resultant(f, g) -> int:
    f, g = trim(f), trim(g)
    m, n = len(f) - 1, len(g) - 1
    if m < 0 or n < 0:
        return 0
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    size = m + n
    rows = []
    for i in range(n):
        row = [0] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [0] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return bareiss_det(rows)


def discriminant(f) -> int:
    f = trim(f)
    n = len(f) - 1
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    r = resultant(f, derivative(f))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    q, rem = divmod(sign * r, f[-1])
    assert rem == 0
    return q


def is_rational_square(x) -> bool:
    x = Fraction(x)
    if x < 0:
        return False
    n, d = x.numerator, x.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        raise ValueError("0 has infinitely many divisors")
    out = [1]
    for p, e in factorize(n):
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)


def integer_roots(f) -> list[int]:
    """Rational roots of a monic integer polynomial (they are integers)."""
    f = trim(f)
    if f[-1] != 1:
        raise ValueError("integer_roots expects a monic polynomial")
    roots = set()
    if f[0] == 0:
        roots.add(0)
        k = next(i for i, c in enumerate(f) if c != 0)
        f = f[k:]
    if len(f) > 1:
        for d in divisors(f[0]):
            for r in (d, -d):
                if evaluate(f, r) == 0:
                    roots.add(r)
    return sorted(roots)


def _monic_quadratic_factor(f):
    """A monic integer quadratic dividing the monic quartic f, or None."""
    f0, f1, f2, f3 = f[0], f[1], f[2], f[3]
    if f0 == 0:
        return None
    for b in divisors(f0):
        for bb in (b, -b):
            d = f0 // bb
            if d != bb:
                num = f1 - bb * f3
                if num % (d - bb):
                    continue
                cands = [num // (d - bb)]
            else:
                if f1 != bb * f3:
                    continue
                # a + c = f3, a c = f2 - 2b
                disc = f3 * f3 - 4 * (f2 - 2 * bb)
                if disc < 0 or isqrt(disc) ** 2 != disc:
                    continue
                s = isqrt(disc)
                cands = [a for a in {(f3 + s) // 2, (f3 - s) // 2} if (f3 + s) % 2 == 0]
            for a in cands:
                c = f3 - a
                if bb + d + a * c == f2 and a * d + bb * c == f1:
                    return [bb, a, 1]
    return None


def is_irreducible_over_q(f, prime_bound: int = 2000) -> bool:
    """Irreducibility of a monic integer polynomial over Q.

    Exact for degree <= 4. Above that, linear factors are ruled out
    directly and reductions modulo good primes are combined: the achievable degrees of a rational factor must be subset
    sums of every observed cycle type; if only 0 and n survive, f is
    irreducible. Inconclusive evidence raises UnsupportedError.
    """
    f = trim(f)
    if f[-1] != 1:
        raise ValueError("expected a monic polynomial")
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if n <= 3:
        return not integer_roots(f)
    if n == 4:
        return not integer_roots(f) and _monic_quadratic_factor(f) is None
    disc = discriminant(f)
    if disc == 0 or integer_roots(f):
        return False
    possible = set(range(1, n))
    for p in primes_up_to(prime_bound):
        if disc % p == 0:
            continue
        try:
            ct = cycle_type(f, p)
        except NotSquarefreeError:
            continue
        sums = {0}
        for part in ct:
            sums |= {s + part for s in sums}
        possible &= sums
        if not possible:
            return True
    raise UnsupportedError(f"irreducibility of degree {n} polynomial not decided by cycle types")

