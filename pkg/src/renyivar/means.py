"""Weighted operator geometric mean on the positive definite cone."""

from __future__ import annotations

from renyivar import errors, spectral
from renyivar.spectral import PositiveDefiniteMatrix


def geometric_mean(a: PositiveDefiniteMatrix, b: PositiveDefiniteMatrix,
                   alpha: float) -> PositiveDefiniteMatrix:
    """The weighted geometric mean A^{1/2} (A^{-1/2} B A^{-1/2})^alpha A^{1/2}.

    Any finite real weight is allowed; evaluation order is fixed as
    written so results are reproducible given the deterministic
    eigensolver.
    """
    if a.dim != b.dim:
        raise errors.DimensionMismatchError(f"dims {a.dim} and {b.dim} differ")
    a_half = spectral.matrix_power(a, 0.5)
    a_neg_half = spectral.matrix_power(a, -0.5)
    inner = spectral.pd_from(spectral.conjugate_form(b, a_neg_half.mat))
    inner_pow = spectral.matrix_power(inner, alpha)
    return spectral.pd_from(spectral.conjugate_form(inner_pow, a_half.mat))
