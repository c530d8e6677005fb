"""Pick the compiled sampler kernels when available.

Set ``PLBKIT_PURE_PYTHON=1`` to force the pure-Python fallback.
"""
import os

from . import _kernels_py

kernels = _kernels_py
BACKEND = "python"

if not os.environ.get("PLBKIT_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        pass
    else:
        kernels = _compiled
        BACKEND = "compiled"


def get_kernels(name=None):
    """Return the kernel module called ``name`` ("compiled" or "python"), or the active one."""
    if name is None:
        return kernels
    if name == "python":
        return _kernels_py
    if name == "compiled":
        from . import _kernels
        return _kernels
    raise ValueError(f"unknown backend {name!r}")
