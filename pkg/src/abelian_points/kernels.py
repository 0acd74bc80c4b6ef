"""Hot integer kernels, each in two variants.

``*_loop`` functions are written for numba (plain loops, early exit);
``*_np`` functions are vectorized numpy. The public names bind to the
numba-compiled loop when numba is available and not disabled through
``ABELIAN_POINTS_NO_NUMBA``, otherwise to the numpy variant. Both variants
return the same integers; ``tests/test_kernels.py`` checks this.
"""
from __future__ import annotations

import numpy as np

from ._backend import BACKEND, HAS_NUMBA, jit

_CHUNK = 1 << 20


# --- point counting over a prime field (odd p) -------------------------------

def count_points_modp_loop(a1, a2, a3, a4, a6, p, nsqrt):
    total = 1
    for x in range(p):
        b = (a1 * x + a3) % p
        c = (x + a2) % p * x % p
        c = (c + a4) % p * x % p
        c = (c + a6) % p
        total += nsqrt[(b * b + 4 * c) % p]
    return total


def count_points_modp_np(a1, a2, a3, a4, a6, p, nsqrt):
    x = np.arange(p, dtype=np.int64)
    b = (a1 * x + a3) % p
    c = (x + a2) % p * x % p
    c = (c + a4) % p * x % p
    c = (c + a6) % p
    return 1 + int(nsqrt[(b * b + 4 * c) % p].sum())


# --- point counting over a tabulated field F_q ----------------------------

def count_points_table_loop(a1, a2, a3, a4, a6, add, mul, inv, nsqrt, trace, four, char2):
    q = add.shape[0]
    total = 1
    for x in range(q):
        b = add[mul[a1, x], a3]
        x2 = mul[x, x]
        c = add[add[add[mul[x2, x], mul[a2, x2]], mul[a4, x]], a6]
        if char2:
            # y^2 + b y = c; for b != 0 substitute y = b z: z^2 + z = c / b^2
            if b == 0:
                total += 1
            else:
                ib = inv[b]
                if trace[mul[c, mul[ib, ib]]] == 0:
                    total += 2
        else:
            total += nsqrt[add[mul[b, b], mul[four, c]]]
    return total


def count_points_table_np(a1, a2, a3, a4, a6, add, mul, inv, nsqrt, trace, four, char2):
    x = np.arange(add.shape[0], dtype=np.int64)
    b = add[mul[a1, x], a3]
    x2 = mul[x, x]
    c = add[add[add[mul[x2, x], mul[a2, x2]], mul[a4, x]], a6]
    if char2:
        ib = inv[b]
        z = mul[c, mul[ib, ib]]
        zero_b = b == 0
        return 1 + int(zero_b.sum()) + 2 * int(((trace[z] == 0) & ~zero_b).sum())
    return 1 + int(nsqrt[add[mul[b, b], mul[four, c]]].sum())


# --- diagonal forms modulo P = p^m ----------------------------------------

def primitive_zero_exists_loop(terms, last_any, last_unit, P, p):
    """Is there a primitive tuple with sum of terms = 0 mod P?

    ``terms[i, x]`` holds c_i x^d mod P for the first k-1 coordinates; the
    last coordinate is resolved by lookup: ``last_any[r]`` says some x hits
    r, ``last_unit[r]`` says some x with p not dividing x hits r.
    """
    km1 = terms.shape[0]
    total = 1
    for _ in range(km1):
        total *= P
    for idx in range(total):
        rem = idx
        s = 0
        prim = False
        for i in range(km1 - 1, -1, -1):
            xi = rem % P
            rem //= P
            s += terms[i, xi]
            if xi % p != 0:
                prim = True
        r = (-s) % P
        if prim:
            if last_any[r]:
                return True
        elif last_unit[r]:
            return True
    return False


def primitive_zero_exists_np(terms, last_any, last_unit, P, p):
    km1 = terms.shape[0]
    total = P**km1
    for start in range(0, total, _CHUNK):
        rem = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        s = np.zeros_like(rem)
        prim = np.zeros(rem.shape, dtype=np.bool_)
        for i in range(km1 - 1, -1, -1):
            xi = rem % P
            rem //= P
            s += terms[i, xi]
            prim |= xi % p != 0
        r = (-s) % P
        if np.any(np.where(prim, last_any[r], last_unit[r])):
            return True
    return False


def first_hensel_zero_loop(terms, liftable, P, p):
    """Index of the first primitive zero mod P with a liftable coordinate, or -1.

    Tuples are enumerated lexicographically (coordinate 0 most significant);
    ``liftable[j, x]`` flags the Hensel condition for coordinate j at x.
    """
    k = terms.shape[0]
    total = 1
    for _ in range(k):
        total *= P
    for idx in range(total):
        rem = idx
        s = 0
        prim = False
        lift = False
        for i in range(k - 1, -1, -1):
            xi = rem % P
            rem //= P
            s += terms[i, xi]
            if xi % p != 0:
                prim = True
            if liftable[i, xi]:
                lift = True
        if prim and lift and s % P == 0:
            return idx
    return -1


def first_hensel_zero_np(terms, liftable, P, p):
    k = terms.shape[0]
    total = P**k
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        rem = idx.copy()
        s = np.zeros_like(rem)
        prim = np.zeros(rem.shape, dtype=np.bool_)
        lift = np.zeros(rem.shape, dtype=np.bool_)
        for i in range(k - 1, -1, -1):
            xi = rem % P
            rem //= P
            s += terms[i, xi]
            prim |= xi % p != 0
            lift |= liftable[i, xi]
        hit = np.flatnonzero(prim & lift & (s % P == 0))
        if hit.size:
            return int(idx[hit[0]])
    return -1


NUMPY = {
    "count_points_modp": count_points_modp_np,
    "count_points_table": count_points_table_np,
    "primitive_zero_exists": primitive_zero_exists_np,
    "first_hensel_zero": first_hensel_zero_np,
}

if HAS_NUMBA:
    NUMBA = {
        "count_points_modp": jit(count_points_modp_loop),
        "count_points_table": jit(count_points_table_loop),
        "primitive_zero_exists": jit(primitive_zero_exists_loop),
        "first_hensel_zero": jit(first_hensel_zero_loop),
    }
else:
    NUMBA = {}

ACTIVE = NUMBA if HAS_NUMBA else NUMPY

count_points_modp = ACTIVE["count_points_modp"]
count_points_table = ACTIVE["count_points_table"]
primitive_zero_exists = ACTIVE["primitive_zero_exists"]
first_hensel_zero = ACTIVE["first_hensel_zero"]

__all__ = [
    "BACKEND",
    "NUMBA",
    "NUMPY",
    "count_points_modp",
    "count_points_table",
    "primitive_zero_exists",
    "first_hensel_zero",
]
