"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; setting the
environment variable ``SFCAR_PURE_PYTHON=1`` before import forces the
NumPy fallback (used by the benchmark and for debugging).  Both backends
implement the identical ``rate_sums`` contract.
"""

import os

from sfcar import _specsum_py

if os.environ.get("SFCAR_PURE_PYTHON"):
    _impl = _specsum_py
    BACKEND = "python"
else:
    try:
        from sfcar import _specsum as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = _specsum_py
        BACKEND = "python"

rate_sums = _impl.rate_sums


def backend_name() -> str:
    """Name of the kernel backend selected at import: 'compiled' or 'python'."""
    return BACKEND
