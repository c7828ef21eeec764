"""Quantum Renyi relative entropy family and related scalar functionals.

All logarithms are natural, so the alpha -> 1 limit of the sandwiched
family matches the Umegaki relative entropy without conversion factors.
Inputs must be positive definite; callers needing boundary cases must
regularize explicitly.
"""

from __future__ import annotations

import numpy as np

from renyivar import errors, spectral
from renyivar.spectral import PositiveDefiniteMatrix


def _check_pair(a: PositiveDefiniteMatrix, b: PositiveDefiniteMatrix):
    if a.dim != b.dim:
        raise errors.DimensionMismatchError(f"dims {a.dim} and {b.dim} differ")


def _trace(m: np.ndarray) -> float:
    return float(np.trace(m).real)


def petz_renyi(a: PositiveDefiniteMatrix, b: PositiveDefiniteMatrix, alpha: float) -> float:
    """(alpha-1)^-1 log tr(A^alpha B^(1-alpha))."""
    _check_pair(a, b)
    if alpha == 1.0:
        raise errors.AlphaIsOneError("alpha = 1 is excluded; use umegaki")
    if alpha <= 0.0:
        raise errors.RegimeMismatchError("alpha must be positive")
    val = _trace(spectral.matrix_power(a, alpha).mat @ spectral.matrix_power(b, 1.0 - alpha).mat)
    return float(np.log(val) / (alpha - 1.0))


def sandwiched_quasi(a: PositiveDefiniteMatrix, b: PositiveDefiniteMatrix, alpha: float) -> float:
    """tr (B^((1-alpha)/(2 alpha)) A B^((1-alpha)/(2 alpha)))^alpha."""
    _check_pair(a, b)
    if alpha <= 0.0:
        raise errors.RegimeMismatchError("alpha must be positive")
    e = (1.0 - alpha) / (2.0 * alpha)
    core = spectral.pd_from(spectral.conjugate_form(a, spectral.matrix_power(b, e).mat))
    vals = spectral.decompose(core.base).eigenvalues
    return float(np.sum(vals ** alpha))


def sandwiched_renyi(a: PositiveDefiniteMatrix, b: PositiveDefiniteMatrix, alpha: float) -> float:
    if alpha == 1.0:
        raise errors.AlphaIsOneError("alpha = 1 is excluded; use umegaki")
    if alpha <= 0.0:
        raise errors.RegimeMismatchError("alpha must be positive")
    # Log-domain evaluation keeps large alpha (the Thompson-metric limit)
    # from overflowing in lambda^alpha.
    _check_pair(a, b)
    e = (1.0 - alpha) / (2.0 * alpha)
    core = spectral.pd_from(spectral.conjugate_form(a, spectral.matrix_power(b, e).mat))
    lw = alpha * np.log(spectral.decompose(core.base).eigenvalues)
    top = float(np.max(lw))
    log_f = top + float(np.log(np.sum(np.exp(lw - top))))
    return log_f / (alpha - 1.0)


def alpha_z(a: PositiveDefiniteMatrix, b: PositiveDefiniteMatrix, alpha: float, z: float) -> float:
    """Two-parameter family interpolating the Petz and sandwiched entropies."""
    _check_pair(a, b)
    if alpha == 1.0:
        raise errors.AlphaIsOneError("alpha = 1 is excluded")
    if alpha <= 0.0:
        raise errors.RegimeMismatchError("alpha must be positive")
    if z <= 0.0:
        raise errors.ZNotPositiveError("z must be positive")
    e = (1.0 - alpha) / (2.0 * z)
    core = spectral.pd_from(spectral.conjugate_form(
        spectral.matrix_power(a, alpha / z), spectral.matrix_power(b, e).mat))
    vals = spectral.decompose(core.base).eigenvalues
    return float(np.log(np.sum(vals ** z)) / (alpha - 1.0))


def fidelity(a: PositiveDefiniteMatrix, b: PositiveDefiniteMatrix) -> float:
    """tr (B^{1/2} A B^{1/2})^{1/2}; symmetric in its arguments."""
    _check_pair(a, b)
    core = spectral.pd_from(spectral.conjugate_form(a, spectral.matrix_power(b, 0.5).mat))
    vals = spectral.decompose(core.base).eigenvalues
    return float(np.sum(np.sqrt(vals)))


def umegaki(a: PositiveDefiniteMatrix, b: PositiveDefiniteMatrix) -> float:
    """(tr A)^-1 tr A (log A - log B)."""
    _check_pair(a, b)
    diff = spectral.matrix_log(a).mat - spectral.matrix_log(b).mat
    return _trace(a.mat @ diff) / _trace(a.mat)


def max_relative(a: PositiveDefiniteMatrix, b: PositiveDefiniteMatrix) -> float:
    """log lambda_1(A B^-1), computed on the Hermitian form B^-1/2 A B^-1/2."""
    _check_pair(a, b)
    core = spectral.pd_from(spectral.conjugate_form(a, spectral.matrix_power(b, -0.5).mat))
    vals = spectral.decompose(core.base).eigenvalues
    return float(np.log(vals[0]))


def thompson_metric(a: PositiveDefiniteMatrix, b: PositiveDefiniteMatrix) -> float:
    """max(log lambda_1(A B^-1), log lambda_1(B A^-1))."""
    return max(max_relative(a, b), max_relative(b, a))


def thompson_metric_lognorm(a: PositiveDefiniteMatrix, b: PositiveDefiniteMatrix) -> float:
    """Operator norm of log(B^-1/2 A B^-1/2); agrees with thompson_metric."""
    _check_pair(a, b)
    core = spectral.pd_from(spectral.conjugate_form(a, spectral.matrix_power(b, -0.5).mat))
    vals = spectral.decompose(core.base).eigenvalues
    return float(np.max(np.abs(np.log(vals))))
