"""Backend selection for the integer kernels.

The compiled ``_speedups`` module is used when it was built; otherwise the
pure-Python ``_purepy`` module.  Setting ``LELONG_PURE_PYTHON=1`` forces the
fallback.  Both backends return identical values.
"""

import os

from . import _purepy

if os.environ.get("LELONG_PURE_PYTHON", "") not in ("", "0"):
    _impl = _purepy
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = _purepy

BACKEND = "cython" if _impl is not _purepy else "python"

bareiss_det = _impl.bareiss_det
bareiss_solve = _impl.bareiss_solve
bareiss_rank = _impl.bareiss_rank
dd_extreme_rays = _impl.dd_extreme_rays


def backends():
    """Mapping of available backend name -> module, pure Python first."""
    found = {"python": _purepy}
    try:
        from . import _speedups
    except ImportError:
        pass
    else:
        found["cython"] = _speedups
    return found
