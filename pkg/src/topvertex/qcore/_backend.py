"""Pick the polynomial kernel at import time.

The compiled kernel is used when it was built; setting
TOPVERTEX_PURE_PYTHON=1 forces the pure-Python fallback.
"""

import os

kernel = None
name = "python"

if os.environ.get("TOPVERTEX_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernel as kernel
        name = "cython"
    except ImportError:
        kernel = None

if kernel is None:
    from . import _pykernel as kernel
