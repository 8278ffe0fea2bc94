"""Backend selection for the batch kernels.

Set ``POLYSPHERE_DISABLE_NUMBA=1`` to force the pure-numpy path. The flag
is read once at import time. When numba is not installed the numpy path is
used regardless.
"""
import os

_DISABLED = os.environ.get("POLYSPHERE_DISABLE_NUMBA", "").strip().lower() not in (
    "",
    "0",
    "false",
    "no",
)

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not _DISABLED
BACKEND = "numba" if USE_NUMBA else "numpy"


def njit(func):
    """Compile ``func`` in nopython mode when numba is importable.

    The decorated kernels are always compiled when numba exists so that the
    benchmark can compare both paths; ``USE_NUMBA`` only decides which path
    the public batch functions dispatch to.
    """
    if not HAVE_NUMBA:
        return func
    return numba.njit(cache=True)(func)
