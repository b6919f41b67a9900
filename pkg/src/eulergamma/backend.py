"""Select the node-loop implementation at import time.

The compiled extension is preferred when it imported cleanly; the pure-Python
twin is always available.  Set ``EULERGAMMA_BACKEND=python`` or
``EULERGAMMA_BACKEND=compiled`` to force one (forcing ``compiled`` when the
extension is absent raises, rather than silently falling back).
"""

import os

from . import _kernels_py

_FORCED = os.environ.get("EULERGAMMA_BACKEND", "").strip().lower()

if _FORCED not in ("", "python", "compiled"):
    raise ImportError(
        f"EULERGAMMA_BACKEND={_FORCED!r} not understood; use 'python' or 'compiled'"
    )

if _FORCED == "python":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl
        BACKEND = "compiled"
    except ImportError:
        if _FORCED == "compiled":
            raise ImportError(
                "EULERGAMMA_BACKEND=compiled but the extension is not built; "
                "reinstall with a C compiler and Cython available"
            )
        _impl = _kernels_py
        BACKEND = "python"

level_sum = _impl.level_sum
point_value = _impl.point_value

GENERIC = _kernels_py.GENERIC
GAMMA_TAIL = _kernels_py.GAMMA_TAIL
NEG_LOG_POW = _kernels_py.NEG_LOG_POW
BETA = _kernels_py.BETA
EULER_SYMBOL = _kernels_py.EULER_SYMBOL
ALGEBRAIC = _kernels_py.ALGEBRAIC
