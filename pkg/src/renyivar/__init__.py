"""Quantum Renyi relative entropies, sandwiched trace functionals with
variational representations, and property-based inequality verification
on randomized desk-scale instances."""

from renyivar._kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = ["KERNEL_BACKEND", "__version__"]
