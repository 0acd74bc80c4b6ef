"""Exact integer arithmetic and elementary number theory.

Python ints are already arbitrary precision, so "Integer" is just ``int``
here. Everything in this module is a pure function.
"""
from __future__ import annotations

import math
import random
from typing import Callable, Iterable

from .errors import NotFoundError, ResourceLimitError

# Deterministic Miller-Rabin: these bases are correct for n < 3.3 * 10^24.
_DET_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_DET_LIMIT = 3317044064679887385961981
# Random rounds above the deterministic range: error < 4^-64 = 2^-128.
_EXTRA_ROUNDS = 64

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

DEFAULT_FACTOR_EFFORT = 2_000_000


def _mr_round(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality test.

    Deterministic (fixed witness set) for n < 3.3e24, which covers 2^64.
    Above that, 64 extra Miller-Rabin rounds with bases drawn from a PRNG
    seeded by ``n`` keep the answer reproducible with error below 2^-128.
    """
    if n < 2:
        return False
    for sp in _SMALL_PRIMES:
        if n == sp:
            return True
        if n % sp == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if not all(_mr_round(n, d, s, a) for a in _DET_BASES):
        return False
    if n < _DET_LIMIT:
        return True
    rng = random.Random(n)
    return all(_mr_round(n, d, s, rng.randrange(2, n - 1)) for _ in range(_EXTRA_ROUNDS))


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    c = max(n + 1, 2)
    while not is_prime(c):
        c += 1
    return c


def primes_up_to(n: int) -> list[int]:
    """All primes <= n (sieve of Eratosthenes)."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def _pollard_brent(n: int, seed: int, budget: int) -> tuple[int, int]:
    """Return (factor or 0, iterations used)."""
    rng = random.Random(seed)
    y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
    g = r = q = 1
    used = 0
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        used += r
        r *= 2
        if used > budget:
            return 0, used
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            used += 1
    return (g if g != n else 0), used


def factorize(n: int, effort: int = DEFAULT_FACTOR_EFFORT) -> list[tuple[int, int]]:
    """Complete prime factorization as ``[(prime, exponent), ...]``, primes increasing.

    Trial division by small primes, then Pollard-Brent rho. ``effort`` bounds
    the total rho iterations; exceeding it raises :class:`ResourceLimitError`.
    """
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    counts: dict[int, int] = {}
    for sp in primes_up_to(1000):
        if sp * sp > n:
            break
        while n % sp == 0:
            counts[sp] = counts.get(sp, 0) + 1
            n //= sp
    stack = [n] if n > 1 else []
    spent = 0
    while stack:
        m = stack.pop()
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        seed = 0
        while True:
            f, used = _pollard_brent(m, seed, effort - spent)
            spent += used
            if f:
                break
            if spent > effort:
                raise ResourceLimitError(f"factor of {m} resisted effort bound {effort}")
            seed += 1
        stack += [f, m // f]
    return sorted(counts.items())


def factor_product(fac: Iterable[tuple[int, int]]) -> int:
    out = 1
    for p, e in fac:
        out *= p**e
    return out


def prime_factors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def valuation(n: int, p: int) -> int:
    """Largest e with p^e | n."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def unit_part(n: int, p: int) -> int:
    """n / p^valuation(n, p), sign kept."""
    return n // p ** valuation(n, p)


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"euler_phi needs n >= 1, got {n}")
    out = 1
    for p, e in factorize(n):
        out *= p ** (e - 1) * (p - 1)
    return out


def cyclotomic_ramification(p: int, N: int) -> int:
    """Ramification index at p of the completion of Q(mu_N): phi(p^v_p(N))."""
    i = valuation(N, p)
    return 1 if i == 0 else p ** (i - 1) * (p - 1)


def abelian_ramification_obstruction(d: int, p: int) -> bool:
    """True iff gcd(d, p(p-1)) = 1.

    Every finite subextension of Q_p^ab sits in some Q_p(mu_N), whose
    ramification index divides p^(i-1)(p-1); so this condition makes every
    such ramification index prime to d.
    """
    return math.gcd(d, p * (p - 1)) == 1


def multiplicative_order(a: int, m: int) -> int:
    """Least k >= 1 with a^k = 1 mod m."""
    if m < 2:
        raise ValueError("modulus must be >= 2")
    a %= m
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not invertible mod {m}")
    k = euler_phi(m)
    for q, _ in factorize(k):
        while k % q == 0 and pow(a, k // q, m) == 1:
            k //= q
    return k


def crt(congruences: Iterable[tuple[int, int]]) -> tuple[int, int]:
    """Combine pairwise-coprime congruences into a single ``(r, M)``."""
    r, M = 0, 1
    for res, mod in congruences:
        if mod < 1:
            raise ValueError(f"bad modulus {mod}")
        if math.gcd(M, mod) != 1:
            raise ValueError(f"moduli not pairwise coprime: {M} and {mod}")
        t = ((res - r) * pow(M, -1, mod)) % mod
        r += M * t
        M *= mod
    return r % M, M


def crt_search(
    congruences: Iterable[tuple[int, int]],
    predicate: Callable[[int], bool] = is_prime,
    limit: int = 10**7,
) -> int:
    """Smallest positive n <= limit meeting all congruences and ``predicate``.

    Scans the arithmetic progression r, r + M, r + 2M, ... in increasing
    order; raises :class:`ResourceLimitError` past ``limit``.
    """
    r, M = crt(congruences)
    n = r if r > 0 else M
    while n <= limit:
        if predicate(n):
            return n
        n += M
    raise ResourceLimitError(f"no solution below {limit}")


def catalan_solutions(s_max: int, t_max: int) -> set[tuple[int, int]]:
    """All (s, t) with 0 <= s <= s_max, 0 <= t <= t_max and |2^s - 3^t| = 1.

    Natural numbers include 0 here, so (1, 0) -- i.e. 2 - 1 -- is reported.
    """
    return {
        (s, t)
        for s in range(s_max + 1)
        for t in range(t_max + 1)
        if abs(2**s - 3**t) == 1
    }


def prime_power(q: int) -> tuple[int, int]:
    """Split a prime power q = p^a into (p, a); ValueError otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    fac = factorize(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    return fac[0]


def is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
    except ValueError:
        return False
    return True


def smallest_prime_factor(n: int, at_least: int = 2) -> int:
    """Smallest prime factor of n that is >= ``at_least``."""
    for p, _ in factorize(n):
        if p >= at_least:
            return p
    raise NotFoundError(f"{n} has no prime factor >= {at_least}")


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n
