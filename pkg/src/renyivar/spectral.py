"""Hermitian/positive-definite matrix types and the spectral calculus.

All matrix functions (fractional powers, logs, singular values) route
through a deterministic cyclic Jacobi eigensolver, so identical inputs
always produce identical outputs.  Dimensions are desk scale (<= 64).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from renyivar import errors
from renyivar._kernels import MAX_SWEEPS, jacobi_eigh

# Relative tolerances; see the corresponding checks for how each scales.
PD_TOLERANCE = 1e-12          # times the largest |eigenvalue|
HERMITICITY_TOL = 1e-10       # times max |entry|
RECONSTRUCTION_TOL = 1e-9     # times the Frobenius norm


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues in descending order with a unitary eigenvector matrix."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]


class HermitianMatrix:
    """Immutable Hermitian matrix with a lazily cached eigendecomposition."""

    __slots__ = ("mat", "max_asymmetry", "_decomp")

    def __init__(self, mat: np.ndarray, max_asymmetry: float = 0.0,
                 _decomp: SpectralDecomposition | None = None):
        mat = np.ascontiguousarray(mat, dtype=np.complex128)
        mat.setflags(write=False)
        self.mat = mat
        self.max_asymmetry = max_asymmetry
        self._decomp = _decomp

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def __repr__(self):
        return f"HermitianMatrix(dim={self.dim})"


class PositiveDefiniteMatrix:
    """Hermitian matrix with a strictly positive, validated spectrum."""

    __slots__ = ("base", "min_eig")

    def __init__(self, base: HermitianMatrix, min_eig: float):
        self.base = base
        self.min_eig = min_eig

    @property
    def mat(self) -> np.ndarray:
        return self.base.mat

    @property
    def dim(self) -> int:
        return self.base.dim

    def __repr__(self):
        return f"PositiveDefiniteMatrix(dim={self.dim}, min_eig={self.min_eig:g})"


def _symmetrize(m: np.ndarray) -> np.ndarray:
    return 0.5 * (m + m.conj().T)


def general_from(entries) -> np.ndarray:
    """Validate a general complex matrix (finite entries) as an ndarray."""
    m = np.asarray(entries, dtype=np.complex128)
    if m.ndim != 2:
        raise errors.NonSquareError(f"expected a 2-d array, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise errors.NonFiniteError("matrix contains non-finite entries")
    return m


def hermitian_from(entries) -> HermitianMatrix:
    """Build a Hermitian matrix, symmetrizing drift within tolerance.

    Inputs whose asymmetry exceeds ``HERMITICITY_TOL * max|entry|`` are
    rejected rather than silently symmetrized.
    """
    m = general_from(entries)
    if m.shape[0] != m.shape[1]:
        raise errors.NonSquareError(f"expected square matrix, got {m.shape}")
    if m.shape[0] < 1:
        raise errors.NonSquareError("dimension must be >= 1")
    asym = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    scale = float(np.max(np.abs(m))) if m.size else 0.0
    if scale > 0.0 and asym > HERMITICITY_TOL * scale:
        raise errors.AsymmetryError(
            f"asymmetry {asym:g} exceeds tolerance {HERMITICITY_TOL * scale:g}")
    return HermitianMatrix(_symmetrize(m), max_asymmetry=asym)


def decompose(h: HermitianMatrix) -> SpectralDecomposition:
    """Eigendecomposition with descending eigenvalues (cached on ``h``)."""
    if h._decomp is not None:
        return h._decomp
    vals, vecs, sweeps = jacobi_eigh(h.mat)
    order = np.argsort(-vals, kind="stable")
    vals = np.ascontiguousarray(vals[order])
    vecs = np.ascontiguousarray(vecs[:, order])
    recon = (vecs * vals) @ vecs.conj().T
    fro = float(np.linalg.norm(h.mat))
    resid = float(np.linalg.norm(recon - h.mat))
    if resid > RECONSTRUCTION_TOL * max(fro, 1e-300) or sweeps >= MAX_SWEEPS:
        raise errors.ConvergenceError(
            f"Jacobi residual {resid:g} after {sweeps} sweeps (norm {fro:g})")
    vals.setflags(write=False)
    vecs.setflags(write=False)
    dec = SpectralDecomposition(vals, vecs)
    h._decomp = dec
    return dec


def _hermitian_from_eigh(vals: np.ndarray, vecs: np.ndarray) -> HermitianMatrix:
    """Assemble a Hermitian matrix from known eigendata (trusted path)."""
    order = np.argsort(-vals, kind="stable")
    vals = np.ascontiguousarray(np.asarray(vals, dtype=np.float64)[order])
    vecs = np.ascontiguousarray(vecs[:, order])
    mat = _symmetrize((vecs * vals) @ vecs.conj().T)
    vals.setflags(write=False)
    vecs.setflags(write=False)
    return HermitianMatrix(mat, _decomp=SpectralDecomposition(vals, vecs))


def _pd_from_eigh(vals: np.ndarray, vecs: np.ndarray) -> PositiveDefiniteMatrix:
    h = _hermitian_from_eigh(vals, vecs)
    w = h._decomp.eigenvalues
    return PositiveDefiniteMatrix(h, min_eig=float(w[-1]))


def pd_from(h: HermitianMatrix) -> PositiveDefiniteMatrix:
    """Validate positive definiteness (relative gate on the smallest eigenvalue)."""
    dec = decompose(h)
    w = dec.eigenvalues
    top = float(np.max(np.abs(w))) if w.size else 0.0
    if w[-1] <= PD_TOLERANCE * top:
        raise errors.NotPositiveDefiniteError(
            f"smallest eigenvalue {w[-1]:g} fails the PD gate (top {top:g})")
    return PositiveDefiniteMatrix(h, min_eig=float(w[-1]))


def matrix_power(p: PositiveDefiniteMatrix, t: float) -> PositiveDefiniteMatrix:
    """Fractional matrix power ``U diag(lambda_i^t) U*``."""
    dec = decompose(p.base)
    return _pd_from_eigh(dec.eigenvalues ** float(t), dec.eigenvectors)


def matrix_log(p: PositiveDefiniteMatrix) -> HermitianMatrix:
    dec = decompose(p.base)
    return _hermitian_from_eigh(np.log(dec.eigenvalues), dec.eigenvectors)


def singular_values(m: np.ndarray) -> np.ndarray:
    """Descending singular values via the eigenvalues of M*M."""
    m = general_from(m)
    gram = hermitian_from(m.conj().T @ m)
    w = decompose(gram).eigenvalues
    s = np.sqrt(np.clip(w, 0.0, None))
    s.setflags(write=False)
    return s


def conjugate_form(m, x: np.ndarray) -> HermitianMatrix:
    """The congruence X* M X, re-symmetrized."""
    mm = m.mat if isinstance(m, (HermitianMatrix, PositiveDefiniteMatrix)) else np.asarray(m)
    x = np.asarray(x, dtype=np.complex128)
    if mm.shape[1] != x.shape[0]:
        raise errors.DimensionMismatchError(
            f"cannot conjugate {mm.shape} by {x.shape}")
    return HermitianMatrix(_symmetrize(x.conj().T @ mm @ x))


def haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary via phase-fixed QR of a complex Ginibre matrix."""
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim)))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    ph = d / np.abs(d)
    return q * ph


def random_pd(dim: int, seed, condition_number: float | None = None,
              eigenvalues=None, trace_one: bool = False) -> PositiveDefiniteMatrix:
    """Seeded random positive definite matrix with a Haar-random eigenbasis.

    Either explicit ``eigenvalues`` or a ``condition_number`` bound (default
    100) controls the spectrum.  Deterministic per (dim, seed, spectrum).
    """
    if dim < 1:
        raise errors.NonSquareError("dimension must be >= 1")
    rng = np.random.default_rng(seed)
    if eigenvalues is not None:
        vals = np.asarray(eigenvalues, dtype=np.float64)
        if vals.shape != (dim,) or np.any(vals <= 0.0) or not np.all(np.isfinite(vals)):
            raise errors.InvalidSpectrumError("eigenvalues must be positive, finite, length dim")
    else:
        cond = 100.0 if condition_number is None else float(condition_number)
        if cond < 1.0 or not np.isfinite(cond):
            raise errors.InvalidSpectrumError("condition number must be >= 1")
        vals = cond ** (rng.uniform(size=dim) - 0.5)
    if trace_one:
        vals = vals / vals.sum()
    u = haar_unitary(dim, rng)
    return _pd_from_eigh(vals, u)


def random_density(dim: int, seed, condition_number: float | None = None) -> PositiveDefiniteMatrix:
    """Seeded random density matrix (PD, unit trace)."""
    return random_pd(dim, seed, condition_number=condition_number, trace_one=True)


def random_hermitian(dim: int, seed, scale: float = 1.0) -> HermitianMatrix:
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return HermitianMatrix(_symmetrize(scale * g))


def random_general(dim: int, seed, scale: float = 1.0) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return scale * (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim)))


def identity_pd(dim: int) -> PositiveDefiniteMatrix:
    return _pd_from_eigh(np.ones(dim), np.eye(dim, dtype=np.complex128))
