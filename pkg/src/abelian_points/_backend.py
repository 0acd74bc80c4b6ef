"""Backend selection for the numeric kernels.

Set ``ABELIAN_POINTS_NO_NUMBA=1`` to force the pure-numpy kernels even when
numba is importable. Both backends return identical integers.
"""
import os

_flag = os.environ.get("ABELIAN_POINTS_NO_NUMBA", "").strip().lower()
DISABLED_BY_ENV = _flag not in ("", "0", "false", "no")

try:
    if DISABLED_BY_ENV:
        raise ImportError("numba disabled by ABELIAN_POINTS_NO_NUMBA")
    from numba import njit as _njit
    HAS_NUMBA = True
except ImportError:
    _njit = None
    HAS_NUMBA = False

BACKEND = "numba" if HAS_NUMBA else "numpy"


def jit(fn):
    """Compile ``fn`` with numba when available; otherwise return None."""
    if _njit is None:
        return None
    return _njit(cache=True, nogil=True)(fn)
