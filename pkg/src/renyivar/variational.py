"""Trace/norm functionals of sandwiched type and their variational structure.

The central object is the functional
``(A, B) -> ||| (B^{q/2} K* A^p K B^{q/2})^s |||``
(trace for the plain version).  Two families of variational
representations split it into a Z-dependent product or weighted sum of
two simpler norms; the closed-form optimizer is a weighted geometric
mean.  A seeded derivative-free search over the PD cone certifies the
min/max structure numerically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from renyivar import errors, spectral
from renyivar.gauge import GaugeSpec, gauge_value
from renyivar.means import geometric_mean
from renyivar.spectral import PositiveDefiniteMatrix

DEGENERATE_EPS = 1e-10   # |p+q| (or |1-sq|) below this is rejected
CORE_RTOL = 1e-12        # relative PD gate for K*A^pK
GAP_EPS = 1e-300         # guard for relative-gap division

MIN_31, MAX_31 = "min_31", "max_31"
MIN_32, MAX_32 = "min_32", "max_32"


@dataclass(frozen=True)
class PsiParams:
    p: float
    q: float
    s: float

    def __post_init__(self):
        if self.s == 0.0:
            raise errors.RegimeMismatchError("s must be nonzero")


@dataclass(frozen=True)
class RegimeTag:
    """Variational tags (which min/max representations apply) plus the
    joint convexity/concavity classification."""

    variational: frozenset
    convexity: str  # concave_42i | convex_42ii | convex_42iii | unknown

    def to_string(self) -> str:
        tags = sorted(self.variational)
        if self.convexity != "unknown":
            tags.append(self.convexity)
        return ",".join(tags) if tags else "none"


@dataclass(frozen=True)
class HolderExponents:
    r0: float
    r1: float
    r2: float

    def __post_init__(self):
        for r in (self.r0, self.r1, self.r2):
            if r == 0.0 or not np.isfinite(r):
                raise errors.BadExponentsError("exponents must be nonzero and finite")
        if abs(1.0 / self.r0 - 1.0 / self.r1 - 1.0 / self.r2) > 1e-14:
            raise errors.BadExponentsError(
                f"1/{self.r0} != 1/{self.r1} + 1/{self.r2}")


@dataclass
class VariationalResult:
    psi_value: float
    optimizer: PositiveDefiniteMatrix
    objective_at_optimizer: float
    relative_gap: float
    bound_direction: str  # "upper": objectives bound psi from above (min regime)


def classify(params: PsiParams) -> RegimeTag:
    """Deterministic regime tags; several variational tags may coexist."""
    p, q, s = params.p, params.q, params.s
    tags = set()
    nondegenerate = abs(p + q) >= DEGENERATE_EPS
    if s > 0 and nondegenerate:
        if (p > 0 and q > 0) or (p < 0 and q < 0):
            tags.add(MIN_31)
        if (p > 0 > q and p + q > 0) or (p < 0 < q and p + q < 0):
            tags.add(MAX_31)
    if s > 0 and q > 0 and s < 1.0 / q:
        tags.add(MIN_32)
    if s > 0 and q < 0:
        tags.add(MAX_32)

    convexity = "unknown"
    if 0 <= p <= 1 and 0 <= q <= 1 and p + q > 0 and 0 < s <= 1.0 / (p + q):
        convexity = "concave_42i"
    elif -1 <= p <= 0 and -1 <= q <= 0 and s > 0:
        convexity = "convex_42ii"
    elif (1 <= p <= 2 and -1 <= q <= 0 and (p, q) != (1.0, -1.0)
          and s >= 1.0 / (p + q)):
        convexity = "convex_42iii"
    return RegimeTag(frozenset(tags), convexity)


def upsilon_regimes(p: float, s: float) -> frozenset:
    """Concavity/convexity clauses that cover tr (K* A^p K)^s."""
    tags = set()
    if 0 <= p <= 1 and s > 0 and (p == 0 or s <= 1.0 / p):
        tags.add("concave_41i")
    if -1 <= p <= 0 and s > 0:
        tags.add("convex_41ii")
    if 1 <= p <= 2 and s >= 1.0 / p:
        tags.add("convex_41iii")
    return frozenset(tags)


def _as_k(k, dim: int) -> np.ndarray:
    if k is None:
        return np.eye(dim, dtype=np.complex128)
    return spectral.general_from(k)


def _core_eigs(p: float, a: PositiveDefiniteMatrix, k: np.ndarray,
               need_pd: bool):
    """Eigendata of K* A^p K with the singular-core gate applied."""
    ap = spectral.matrix_power(a, p)
    core = spectral.conjugate_form(ap, k)
    dec = spectral.decompose(core)
    w = dec.eigenvalues
    top = float(np.max(np.abs(w))) if w.size else 0.0
    if need_pd and w[-1] <= CORE_RTOL * top:
        raise errors.SingularCoreError(
            f"K*A^pK smallest eigenvalue {w[-1]:g} below gate (top {top:g})")
    return core, dec


def _core_pd(p: float, a: PositiveDefiniteMatrix, k: np.ndarray) -> PositiveDefiniteMatrix:
    core, dec = _core_eigs(p, a, k, need_pd=True)
    return PositiveDefiniteMatrix(core, min_eig=float(dec.eigenvalues[-1]))


def _is_positive_integer(s: float) -> bool:
    return s > 0 and float(s).is_integer()


def _norm_from_eigs(spec: GaugeSpec, vals: np.ndarray) -> float:
    """Evaluate a gauge spec on the (non-negative, descending) spectrum."""
    if spec.kind == "anti":
        return float(gauge_value(spec.base, vals ** (-spec.p)) ** (-1.0 / spec.p))
    return gauge_value(spec, vals)


def _sandwich_eigs(params: PsiParams, a, b, k) -> np.ndarray:
    """Spectrum of B^{q/2} K* A^p K B^{q/2}."""
    kk = _as_k(k, a.dim)
    if a.dim != b.dim or kk.shape != (a.dim, a.dim):
        raise errors.DimensionMismatchError("A, B, K must share one square dimension")
    need_pd = not _is_positive_integer(params.s)
    _core_mat, core_dec = _core_eigs(params.p, a, kk, need_pd=need_pd)
    bq2 = spectral.matrix_power(b, params.q / 2.0)
    core = (core_dec.eigenvectors * core_dec.eigenvalues) @ core_dec.eigenvectors.conj().T
    m = spectral.conjugate_form(core, bq2.mat)
    w = spectral.decompose(m).eigenvalues
    if need_pd:
        top = float(np.max(np.abs(w)))
        if w[-1] <= CORE_RTOL * top:
            raise errors.SingularCoreError("sandwiched core is numerically singular")
    return w


def psi(params: PsiParams, a: PositiveDefiniteMatrix, b: PositiveDefiniteMatrix,
        k=None) -> float:
    """tr (B^{q/2} K* A^p K B^{q/2})^s."""
    w = _sandwich_eigs(params, a, b, k)
    return float(np.sum(w ** params.s))


def psi_norm(params: PsiParams, spec: GaugeSpec, a: PositiveDefiniteMatrix,
             b: PositiveDefiniteMatrix, k=None) -> float:
    """||| (B^{q/2} K* A^p K B^{q/2})^s ||| under the given gauge spec."""
    w = _sandwich_eigs(params, a, b, k)
    return _norm_from_eigs(spec, w ** params.s)


def upsilon(p: float, s: float, a: PositiveDefiniteMatrix, k=None) -> float:
    """tr (K* A^p K)^s."""
    kk = _as_k(k, a.dim)
    _core, dec = _core_eigs(p, a, kk, need_pd=not _is_positive_integer(s))
    return float(np.sum(dec.eigenvalues ** s))


# -- variational objectives --------------------------------------------------

def _exponents_31(params: PsiParams):
    p, q, s = params.p, params.q, params.s
    if abs(p + q) < DEGENERATE_EPS:
        raise errors.RegimeMismatchError("p + q is degenerate for this representation")
    return s * (p + q) / p, s * (p + q) / q, p / (p + q), q / (p + q)


def _exponents_32(params: PsiParams):
    q, s = params.q, params.s
    if abs(1.0 - s * q) < DEGENERATE_EPS or q == 0.0:
        raise errors.RegimeMismatchError("exponents degenerate for this representation")
    return s / (1.0 - s * q), 1.0 / q, 1.0 - s * q, s * q


def holder_exponents_31(params: PsiParams) -> HolderExponents:
    """The exponent triple behind the first representation."""
    p, q, s = params.p, params.q, params.s
    return HolderExponents(2 * s, 2 * s * (p + q) / p, 2 * s * (p + q) / q)


def holder_exponents_32(params: PsiParams) -> HolderExponents:
    q, s = params.q, params.s
    return HolderExponents(2 * s, 2 * s / (1.0 - s * q), 2.0 / q)


def _require_tag(params: PsiParams, theorem: str) -> str:
    tags = classify(params).variational
    want = {t for t in tags if t.endswith(theorem)}
    if not want:
        raise errors.RegimeMismatchError(
            f"(p,q,s)=({params.p},{params.q},{params.s}) admits no "
            f"representation of family {theorem}; tags: {sorted(tags)}")
    return next(iter(want))


def _objective_terms(params: PsiParams, spec: GaugeSpec, a, b, k,
                     z: PositiveDefiniteMatrix, e1: float, e2: float):
    kk = _as_k(k, a.dim)
    core = _core_pd(params.p, a, kk)
    z_nh = spectral.matrix_power(z, -0.5)
    z_ph = spectral.matrix_power(z, 0.5)
    t1 = spectral.decompose(spectral.conjugate_form(core, z_nh.mat)).eigenvalues
    bq = spectral.matrix_power(b, params.q)
    t2 = spectral.decompose(spectral.conjugate_form(bq, z_ph.mat)).eigenvalues
    for t in (t1, t2):
        if t[-1] <= CORE_RTOL * max(float(t[0]), GAP_EPS):
            raise errors.SingularCoreError("objective term is numerically singular")
    n1 = _norm_from_eigs(spec, t1 ** e1)
    n2 = _norm_from_eigs(spec, t2 ** e2)
    return n1, n2


def _combine(n1: float, n2: float, w1: float, w2: float, form: str) -> float:
    if form == "product":
        return float(n1 ** w1 * n2 ** w2)
    if form == "sum":
        return float(w1 * n1 + w2 * n2)
    raise errors.RegimeMismatchError(f"unknown form {form!r}")


def objective_31(params: PsiParams, spec: GaugeSpec, a, b, k,
                 z: PositiveDefiniteMatrix, form: str = "product") -> float:
    """Z-dependent bound from the first representation (weights p/(p+q), q/(p+q))."""
    _require_tag(params, "31")
    e1, e2, w1, w2 = _exponents_31(params)
    n1, n2 = _objective_terms(params, spec, a, b, k, z, e1, e2)
    return _combine(n1, n2, w1, w2, form)


def objective_32(params: PsiParams, spec: GaugeSpec, a, b, k,
                 z: PositiveDefiniteMatrix, form: str = "product") -> float:
    """Z-dependent bound from the second representation (weights 1-sq, sq)."""
    _require_tag(params, "32")
    e1, e2, w1, w2 = _exponents_32(params)
    n1, n2 = _objective_terms(params, spec, a, b, k, z, e1, e2)
    return _combine(n1, n2, w1, w2, form)


def optimizer_31(params: PsiParams, a, b, k=None) -> PositiveDefiniteMatrix:
    """Closed-form critical point B^{-q} #_{q/(p+q)} (K* A^p K)."""
    _require_tag(params, "31")
    if abs(params.p + params.q) < DEGENERATE_EPS:
        raise errors.RegimeMismatchError("p + q is degenerate")
    kk = _as_k(k, a.dim)
    core = _core_pd(params.p, a, kk)
    b_negq = spectral.matrix_power(b, -params.q)
    return geometric_mean(b_negq, core, params.q / (params.p + params.q))


def optimizer_32(params: PsiParams, a, b, k=None) -> PositiveDefiniteMatrix:
    """Closed-form critical point B^{-q} #_{sq} (K* A^p K)."""
    _require_tag(params, "32")
    kk = _as_k(k, a.dim)
    core = _core_pd(params.p, a, kk)
    b_negq = spectral.matrix_power(b, -params.q)
    return geometric_mean(b_negq, core, params.s * params.q)


def _objective(params, theorem, form, spec, a, b, k, z):
    if theorem == "31":
        return objective_31(params, spec, a, b, k, z, form)
    return objective_32(params, spec, a, b, k, z, form)


def _optimizer(params, theorem, a, b, k):
    return optimizer_31(params, a, b, k) if theorem == "31" else optimizer_32(params, a, b, k)


def _pd_exp(h_mat: np.ndarray) -> PositiveDefiniteMatrix:
    h = spectral.HermitianMatrix(0.5 * (h_mat + h_mat.conj().T))
    dec = spectral.decompose(h)
    return spectral._pd_from_eigh(np.exp(dec.eigenvalues), dec.eigenvectors)


def _relative_gap(value: float, reference: float) -> float:
    return abs(value - reference) / max(abs(reference), GAP_EPS)


def numeric_search(params: PsiParams, theorem: str, form: str, spec: GaugeSpec,
                   a, b, k=None, budget: int = 1000, seed: int = 0) -> VariationalResult:
    """Seeded adaptive random search over Z = exp(H), H Hermitian.

    Starts at the closed-form optimizer; step size grows 1.3x on
    improvement and halves on rejection (floor 1e-10).  Returns the best
    Z found and its gap to the functional value.
    """
    theorem = str(theorem).replace("3.", "3").replace(".", "")
    if theorem not in ("31", "32"):
        raise errors.RegimeMismatchError(f"unknown theorem family {theorem!r}")
    tag = _require_tag(params, theorem)
    minimizing = tag.startswith("min")
    psi_val = psi_norm(params, spec, a, b, k)
    z_star = _optimizer(params, theorem, a, b, k)

    h = spectral.matrix_log(z_star).mat.copy()
    cur_z = _pd_exp(h)
    cur = _objective(params, theorem, form, spec, a, b, k, cur_z)
    best_z, best = cur_z, cur
    dim = a.dim
    step = 0.1
    rng = np.random.default_rng(seed)
    for _ in range(int(budget)):
        g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        g = 0.5 * (g + g.conj().T)
        g /= max(float(np.linalg.norm(g)), GAP_EPS)
        trial_z = _pd_exp(h + step * g)
        val = _objective(params, theorem, form, spec, a, b, k, trial_z)
        if (val < best) == minimizing and val != best:
            h = h + step * g
            best, best_z = val, trial_z
            step = min(step * 1.3, 10.0)
        else:
            step = max(step * 0.5, 1e-10)
    return VariationalResult(
        psi_value=psi_val,
        optimizer=best_z,
        objective_at_optimizer=best,
        relative_gap=_relative_gap(best, psi_val),
        bound_direction="upper" if minimizing else "lower",
    )


def fidelity_variational(a: PositiveDefiniteMatrix, b: PositiveDefiniteMatrix,
                         t: float, form: str = "product") -> VariationalResult:
    """Variational certificate for F_t via s=t, p=1, q=(1-t)/t, K=I.

    Minimum representation for 0 < t < 1, maximum for t > 1.
    """
    if t <= 0 or t == 1.0:
        raise errors.RegimeMismatchError("t must be positive and != 1")
    params = PsiParams(1.0, (1.0 - t) / t, t)
    spec = GaugeSpec.trace()
    psi_val = psi(params, a, b)
    z_star = optimizer_31(params, a, b)
    obj = objective_31(params, spec, a, b, None, z_star, form)
    return VariationalResult(
        psi_value=psi_val,
        optimizer=z_star,
        objective_at_optimizer=obj,
        relative_gap=_relative_gap(obj, psi_val),
        bound_direction="upper" if 0 < t < 1 else "lower",
    )
