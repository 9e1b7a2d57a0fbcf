"""Hot numeric kernels: compiled core with a pure-numpy fallback.

The Cython extension ``_core`` is preferred when importable; otherwise the
``_fallback`` module provides the same functions in numpy.  Setting the
environment variable ``SEEC_BACKEND=python`` forces the fallback,
``SEEC_BACKEND=compiled`` demands the extension (ImportError if missing).

Both backends implement identical arithmetic; weighted sums may differ in
the last few ulps because the fallback reduces with ``np.dot``.  Callers
pass C-contiguous float64 arrays.
"""

import os

from . import _fallback

_requested = os.environ.get("SEEC_BACKEND", "").strip().lower()

if _requested in ("python", "pure", "fallback"):
    _impl = _fallback
    BACKEND = "python"
elif _requested in ("compiled", "cython", "core"):
    from . import _core as _impl

    BACKEND = "compiled"
else:
    try:
        from . import _core as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = _fallback
        BACKEND = "python"

hermite_values = _impl.hermite_values
entropy_weighted_sum = _impl.entropy_weighted_sum


def backend():
    """Name of the active kernel backend: 'compiled' or 'python'."""
    return BACKEND
