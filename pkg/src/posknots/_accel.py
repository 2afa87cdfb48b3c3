"""Optional numba acceleration.

Set ``POSKNOTS_DISABLE_NUMBA=1`` to force the pure-numpy kernels even when
numba is importable.
"""

import os

DISABLED = os.environ.get("POSKNOTS_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if DISABLED:
        raise ImportError("disabled by POSKNOTS_DISABLE_NUMBA")
    import numba

    HAVE_NUMBA = True
except ImportError:
    numba = None
    HAVE_NUMBA = False


def njit(func):
    """``numba.njit(cache=True)`` when available, otherwise the plain function."""
    if HAVE_NUMBA:
        return numba.njit(cache=True)(func)
    return func
