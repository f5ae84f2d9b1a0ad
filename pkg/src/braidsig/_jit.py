"""Optional numba acceleration.

Set ``BRAIDSIG_NO_NUMBA=1`` to run every kernel as plain Python over numpy
arrays. The same source is used on both paths, so results are identical.
"""
import os

USING_NUMBA = False

if os.environ.get("BRAIDSIG_NO_NUMBA", "").strip().lower() not in ("1", "true", "yes"):
    try:
        import numba

        USING_NUMBA = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        pass


def njit(func):
    """``numba.njit(cache=True)`` when enabled, identity otherwise."""
    if USING_NUMBA:
        return numba.njit(cache=True)(func)
    return func
