"""Kernel backend selection.

Imports the Cython-compiled term kernels when the extension was built,
otherwise falls back to the pure-Python twin.  Set ``LCTPLANE_PURE=1``
to force the pure-Python backend (useful for benchmarking and debugging).
"""

import os

if os.environ.get("LCTPLANE_PURE") == "1":
    from ._kernel_py import BACKEND, add_terms, mul_terms, scale_terms
else:
    try:
        from ._kernel_c import BACKEND, add_terms, mul_terms, scale_terms
    except ImportError:  # extension not built
        from ._kernel_py import BACKEND, add_terms, mul_terms, scale_terms

__all__ = ["BACKEND", "add_terms", "mul_terms", "scale_terms"]
