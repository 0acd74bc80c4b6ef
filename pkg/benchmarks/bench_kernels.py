"""Time the numba kernels against the pure-numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each kernel runs on the same inputs under both backends; results must
agree, and the median wall time of each is printed.
"""
import argparse
import statistics
import time

import numpy as np

from abelian_points import kernels
from abelian_points.elliptic import _nsqrt_mod, selmer_jacobian
from abelian_points.ffield import field_of_order
from abelian_points.local_certificates import DiagonalForm, _liftable_table, _term_tables


def _cases():
    E = selmer_jacobian().reduce(100003)
    p = 100003
    yield "count_points_modp p=100003", "count_points_modp", (*[c % p for c in E.coeffs], p, _nsqrt_mod(p))

    F = field_of_order(1024)
    t = F.tables()
    yield "count_points_table q=1024", "count_points_table", (
        1, 0, 0, 0, 7, t.add, t.mul, t.inv, t.nsqrt, t.trace, F(4), True,
    )

    form = DiagonalForm(3, (1, 2 * 11, 3 * 121))
    p, P = 11, 11**3
    terms = _term_tables(form, P)
    unit = np.arange(P) % p != 0
    last_any = np.zeros(P, dtype=np.bool_)
    last_any[terms[-1]] = True
    last_unit = np.zeros(P, dtype=np.bool_)
    last_unit[terms[-1][unit]] = True
    yield "primitive_zero_exists 11^3", "primitive_zero_exists", (terms[:-1].copy(), last_any, last_unit, P, p)

    selmer = DiagonalForm(3, (3, 4, 5))
    p, m = 5, 3
    P = p**m
    yield "first_hensel_zero 5^3", "first_hensel_zero", (
        _term_tables(selmer, P), _liftable_table(selmer, p, m), P, p,
    )


def _time(fn, args, repeat):
    out = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        out.append(time.perf_counter() - t0)
    return statistics.median(out), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not kernels.NUMBA:
        print("numba is not available (or ABELIAN_POINTS_NO_NUMBA is set); timing numpy only")
    print(f"{'kernel':32} {'numpy (s)':>10} {'numba (s)':>10} {'speedup':>8}")
    for label, name, call in _cases():
        t_np, r_np = _time(kernels.NUMPY[name], call, args.repeat)
        if kernels.NUMBA:
            kernels.NUMBA[name](*call)  # compile outside the timed runs
            t_nb, r_nb = _time(kernels.NUMBA[name], call, args.repeat)
            if int(r_nb) != int(r_np):
                raise SystemExit(f"{name}: backends disagree ({r_nb} vs {r_np})")
            print(f"{label:32} {t_np:10.4f} {t_nb:10.4f} {t_np / t_nb:7.1f}x")
        else:
            print(f"{label:32} {t_np:10.4f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
