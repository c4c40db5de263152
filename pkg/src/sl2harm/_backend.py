"""Numba/numpy backend selection.

The hot scalar kernels in :mod:`sl2harm._kernels` are compiled with numba
when it is importable, unless the environment variable ``SL2HARM_NUMBA``
says otherwise:

* ``SL2HARM_NUMBA=1``    require numba (ImportError if missing),
* ``SL2HARM_NUMBA=0``    pure-numpy fallback paths everywhere,
* unset or ``auto``      use numba when available.

Grid-level operations dispatch on :data:`NUMBA_ENABLED`; the numpy fallback
is a genuinely vectorized implementation, not a slow interpreted loop over
points.  ``benchmarks/bench_backends.py`` times the two paths side by side.
"""

from __future__ import annotations

import os

_flag = os.environ.get("SL2HARM_NUMBA", "auto").strip().lower()

if _flag in ("0", "false", "off", "no"):
    NUMBA_ENABLED = False
    HAVE_NUMBA = False
elif _flag in ("1", "true", "on", "yes"):
    import numba  # noqa: F401  (required explicitly)

    NUMBA_ENABLED = True
    HAVE_NUMBA = True
else:
    try:
        import numba  # noqa: F401

        NUMBA_ENABLED = True
        HAVE_NUMBA = True
    except ImportError:  # pragma: no cover - exercised only without numba
        NUMBA_ENABLED = False
        HAVE_NUMBA = False


def maybe_jit(func):
    """njit ``func`` when the numba backend is active, else return it as is."""
    if NUMBA_ENABLED:
        from numba import njit

        return njit(cache=True)(func)
    return func


def jit_always(func):
    """njit ``func`` whenever numba is importable (used by the benchmark)."""
    if HAVE_NUMBA:
        from numba import njit

        return njit(cache=True)(func)
    return None
