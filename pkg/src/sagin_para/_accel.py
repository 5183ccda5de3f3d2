"""Optional numba acceleration with a pure-Python fallback.

Every hot kernel in the package imports ``njit`` from here instead of from
numba directly.  Setting ``SAGIN_PARA_NUMBA=0`` (or running without numba
installed) turns the decorator into a no-op, so the exact same code runs as
ordinary Python over numpy scalars.  ``benchmarks/kernel_bench.py`` compares
the two paths.
"""

from __future__ import annotations

import os

_WANT_NUMBA = os.environ.get("SAGIN_PARA_NUMBA", "1") != "0"

if _WANT_NUMBA:
    try:
        from numba import njit  # noqa: F401

        USING_NUMBA = True
    except ImportError:  # pragma: no cover - numba is a hard dependency normally
        USING_NUMBA = False
else:
    USING_NUMBA = False

if not USING_NUMBA:

    def njit(*args, **kwargs):  # type: ignore[no-redef]
        """No-op stand-in for :func:`numba.njit`."""
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap
