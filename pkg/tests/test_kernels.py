"""Both kernel backends must return identical integers."""
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from abelian_points import kernels
from abelian_points.elliptic import _nsqrt_mod
from abelian_points.ffield import field_of_order

needs_numba = pytest.mark.skipif(not kernels.NUMBA, reason="numba unavailable")


@needs_numba
@settings(max_examples=50, deadline=None)
@given(st.sampled_from([3, 5, 7, 101, 997]), st.lists(st.integers(0, 10**6), min_size=5, max_size=5))
def test_modp_backends_agree(p, coeffs):
    a = [c % p for c in coeffs]
    ns = _nsqrt_mod(p)
    assert kernels.NUMBA["count_points_modp"](*a, p, ns) == kernels.NUMPY["count_points_modp"](*a, p, ns)


@needs_numba
@pytest.mark.parametrize("q", [4, 8, 9, 27, 32])
def test_table_backends_agree(q):
    F = field_of_order(q)
    t = F.tables()
    rng = np.random.default_rng(q)
    for _ in range(30):
        a = [int(x) for x in rng.integers(0, q, 5)]
        args = (*a, t.add, t.mul, t.inv, t.nsqrt, t.trace, F(4), F.p == 2)
        assert kernels.NUMBA["count_points_table"](*args) == kernels.NUMPY["count_points_table"](*args)


def _diag_inputs(p, m, coeffs, d):
    P = p**m
    x = np.arange(P, dtype=np.int64)
    terms = np.stack([c * pow_mod(x, d, P) % P for c in coeffs])
    unit = x % p != 0
    last_any = np.zeros(P, dtype=np.bool_)
    last_any[terms[-1]] = True
    last_unit = np.zeros(P, dtype=np.bool_)
    last_unit[terms[-1][unit]] = True
    return terms, last_any, last_unit, P


def pow_mod(x, d, P):
    out = np.ones_like(x)
    for _ in range(d):
        out = out * x % P
    return out


@needs_numba
@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from([2, 3, 5, 7]),
    st.integers(1, 2),
    st.lists(st.integers(1, 60), min_size=3, max_size=3),
    st.sampled_from([2, 3, 5]),
)
def test_diagonal_backends_agree(p, m, coeffs, d):
    terms, la, lu, P = _diag_inputs(p, m, coeffs, d)
    head = terms[:-1].copy()
    assert bool(kernels.NUMBA["primitive_zero_exists"](head, la, lu, P, p)) == bool(
        kernels.NUMPY["primitive_zero_exists"](head, la, lu, P, p)
    )
    lift = np.zeros(terms.shape, dtype=np.bool_)
    lift[:, 1::2] = True
    assert int(kernels.NUMBA["first_hensel_zero"](terms, lift, P, p)) == int(
        kernels.NUMPY["first_hensel_zero"](terms, lift, P, p)
    )


def test_env_flag_selects_numpy():
    env = dict(os.environ, ABELIAN_POINTS_NO_NUMBA="1")
    out = subprocess.run(
        [sys.executable, "-c", "import abelian_points as a; print(a.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "numpy"
