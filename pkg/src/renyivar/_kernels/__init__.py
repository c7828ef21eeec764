"""Backend selection for the Jacobi eigensolver hot kernel.

The compiled Cython extension is preferred; the pure NumPy fallback is
used when the extension did not build.  ``BACKEND`` records which one
was picked at import time.
"""

from renyivar._kernels.jacobi_py import MAX_SWEEPS, OFFDIAG_RTOL
from renyivar._kernels.jacobi_py import jacobi_eigh as jacobi_eigh_py

try:
    from renyivar._kernels._jacobi_cy import jacobi_eigh as _impl

    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on build environment
    _impl = jacobi_eigh_py
    BACKEND = "python"

jacobi_eigh = _impl

__all__ = ["jacobi_eigh", "jacobi_eigh_py", "BACKEND", "MAX_SWEEPS", "OFFDIAG_RTOL"]
