"""Optional numba acceleration with a pure-Python/numpy fallback.

Hot inner loops (particle dynamics, word insertion, Monte Carlo counting)
are written in nopython-compatible style and compiled with ``@njit`` when
numba is importable.  Setting the environment variable ``SSPKIT_NO_NUMBA=1``
(or any nonempty value other than ``0``) forces the interpreted fallback;
both paths run the same source, so results are identical.
"""

import os

_disabled = os.environ.get("SSPKIT_NO_NUMBA", "").strip() not in ("", "0")

try:
    if _disabled:
        raise ImportError
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

    def _njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(f):
            return f

        return wrap

maybe_njit = _njit


def jit_status():
    """Return a short human-readable description of the active mode."""
    if HAVE_NUMBA:
        return "numba"
    if _disabled:
        return "fallback (disabled via SSPKIT_NO_NUMBA)"
    return "fallback (numba not importable)"
