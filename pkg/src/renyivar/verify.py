"""Seeded property-verification suites for the package's inequalities.

Every suite derives a per-trial RNG from (seed, trial_index), so runs
with identical parameters produce byte-identical reports.  Inequality
checks use relative tolerance scaled by max(|lhs|, |rhs|) unless stated
otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from renyivar import entropy, errors, spectral, variational
from renyivar.gauge import GaugeSpec, gauge_value
from renyivar.report import VerificationReport, merge_reports
from renyivar.spectral import PositiveDefiniteMatrix
from renyivar.variational import PsiParams, HolderExponents

DEFAULT_TOL = 1e-9
STATE_REG_EPS = 1e-12


# -- majorization ------------------------------------------------------------

@dataclass
class MajorizationVerdict:
    kind: str  # "weak" | "log"
    holds: bool
    worst_prefix_gap: float


def _check_sorted_desc(x: np.ndarray, name: str):
    if np.any(np.diff(x) > 0):
        raise errors.NotSortedError(f"{name} is not sorted descending")


def weak_majorization(x, y, tol: float = 1e-10) -> MajorizationVerdict:
    """Prefix-sum dominance of descending non-negative vectors."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape:
        raise errors.LengthMismatchError(f"lengths {x.shape} vs {y.shape}")
    _check_sorted_desc(x, "x")
    _check_sorted_desc(y, "y")
    if np.any(x < 0) or np.any(y < 0):
        raise errors.NonPositiveEntryError("weak majorization needs non-negative entries")
    cx = np.cumsum(x)
    cy = np.cumsum(y)
    scale = np.maximum(np.maximum(np.abs(cx), np.abs(cy)), 1e-300)
    gaps = (cx - cy) / scale
    worst = float(np.max(gaps))
    return MajorizationVerdict("weak", worst <= tol, worst)


def log_majorization(x, y, tol: float = 1e-10,
                     product_tol: float = 1e-8) -> MajorizationVerdict:
    """Prefix-product dominance with overall product equality.

    Checked in the log domain: partial sums of logs dominate within
    ``tol`` and the full sums agree within ``product_tol``.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape:
        raise errors.LengthMismatchError(f"lengths {x.shape} vs {y.shape}")
    if np.any(x <= 0) or np.any(y <= 0):
        raise errors.NonPositiveEntryError("log majorization needs positive entries")
    _check_sorted_desc(x, "x")
    _check_sorted_desc(y, "y")
    lx = np.cumsum(np.log(x))
    ly = np.cumsum(np.log(y))
    prefix_worst = float(np.max(lx[:-1] - ly[:-1])) if x.size > 1 else 0.0
    total_gap = float(abs(lx[-1] - ly[-1]))
    worst = max(prefix_worst, total_gap)
    holds = prefix_worst <= tol and total_gap <= product_tol
    return MajorizationVerdict("log", holds, worst)


# -- quantum channels --------------------------------------------------------

@dataclass
class QuantumChannel:
    """CPTP map given by a Kraus-operator list (square, same dimension)."""

    dim_in: int
    dim_out: int
    kraus: list

    def __post_init__(self):
        if not self.kraus:
            raise errors.MatrixValidationError("at least one Kraus operator required")
        acc = np.zeros((self.dim_in, self.dim_in), dtype=np.complex128)
        for k in self.kraus:
            if k.shape != (self.dim_out, self.dim_in):
                raise errors.DimensionMismatchError("Kraus operator shape mismatch")
            acc += k.conj().T @ k
        if float(np.max(np.abs(acc - np.eye(self.dim_in)))) > 1e-10:
            raise errors.MatrixValidationError("Kraus operators are not trace preserving")


def random_cptp(dim: int, kraus_count: int, seed) -> QuantumChannel:
    """Channel from a Haar-distributed isometry split into Kraus blocks."""
    if dim < 1 or kraus_count < 1:
        raise errors.MatrixValidationError("dim and kraus_count must be >= 1")
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((dim * kraus_count, dim))
         + 1j * rng.standard_normal((dim * kraus_count, dim)))
    q, r = np.linalg.qr(z)
    ph = np.diagonal(r) / np.abs(np.diagonal(r))
    v = q * ph
    kraus = [np.ascontiguousarray(v[i * dim:(i + 1) * dim, :]) for i in range(kraus_count)]
    return QuantumChannel(dim, dim, kraus)


def depolarizing(dim: int, lam: float) -> QuantumChannel:
    """(1-lam) rho + lam tr(rho) I/dim, via Weyl-operator Kraus list."""
    if not 0.0 <= lam <= 1.0:
        raise errors.LambdaOutOfRangeError("mixing weight must lie in [0, 1]")
    kraus = [np.sqrt(1.0 - lam) * np.eye(dim, dtype=np.complex128)]
    if lam > 0.0:
        omega = np.exp(2j * np.pi / dim)
        shift = np.roll(np.eye(dim, dtype=np.complex128), 1, axis=0)
        clock = np.diag(omega ** np.arange(dim))
        w = np.sqrt(lam) / dim
        for a in range(dim):
            for b in range(dim):
                kraus.append(w * (np.linalg.matrix_power(shift, a)
                                  @ np.linalg.matrix_power(clock, b)))
    return QuantumChannel(dim, dim, kraus)


def apply_channel(ch: QuantumChannel, rho: PositiveDefiniteMatrix) -> spectral.HermitianMatrix:
    """Sum_i K_i rho K_i*; trace preserved."""
    if rho.dim != ch.dim_in:
        raise errors.DimensionMismatchError(
            f"state dim {rho.dim} does not match channel input {ch.dim_in}")
    out = np.zeros((ch.dim_out, ch.dim_out), dtype=np.complex128)
    for k in ch.kraus:
        out += k @ rho.mat @ k.conj().T
    return spectral.HermitianMatrix(0.5 * (out + out.conj().T))


def regularize_state(h: spectral.HermitianMatrix) -> PositiveDefiniteMatrix:
    """Push a (possibly singular) channel output back into the PD cone.

    Adds eps * tr * I/dim with eps = 1e-12 and renormalizes the trace.
    """
    tr = float(np.trace(h.mat).real)
    dim = h.dim
    shift = STATE_REG_EPS * tr / dim
    dec = spectral.decompose(h)
    lo, top = float(dec.eigenvalues[-1]), float(np.max(np.abs(dec.eigenvalues)))
    # for exactly singular inputs the nominal shift sits right on the PD
    # gate; escalate just enough to clear it
    gate = spectral.PD_TOLERANCE * (top + shift)
    if lo + shift <= gate:
        shift = max(shift, 10.0 * gate - lo)
    m = h.mat + shift * np.eye(dim)
    m *= tr / float(np.trace(m).real)
    return spectral.pd_from(spectral.HermitianMatrix(m))


# -- shared sampling helpers -------------------------------------------------

def _trial_rng(seed, trial, salt=0):
    return np.random.default_rng([int(seed), int(trial), int(salt)])


def _random_general(rng, dim):
    return rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))


def _random_invertible(rng, dim, min_rel_sv=1e-6):
    for _ in range(64):
        m = _random_general(rng, dim)
        s = spectral.singular_values(m)
        if s[-1] > min_rel_sv * s[0]:
            return m
    raise errors.SingularInputError("could not sample an invertible matrix")


def _random_conditioned(rng, dim, cond_cap):
    """Matrix with log-uniform singular values, condition <= cond_cap."""
    cond = cond_cap ** rng.uniform()
    sv = cond ** -rng.uniform(size=dim)
    sv = np.sort(sv)[::-1]
    u = spectral.haar_unitary(dim, rng)
    v = spectral.haar_unitary(dim, rng)
    return (u * sv) @ v.conj().T


def _random_pd(rng, dim, cond=100.0, trace_one=False):
    vals = cond ** (rng.uniform(size=dim) - 0.5)
    if trace_one:
        vals = vals / vals.sum()
    u = spectral.haar_unitary(dim, rng)
    return spectral._pd_from_eigh(vals, u)


def _rel_gap(lhs: float, rhs: float) -> float:
    """Signed violation of lhs <= rhs, relative to max(|lhs|, |rhs|)."""
    return (lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300)


# -- inequality suites -------------------------------------------------------

def check_gelfand_naimark(dim: int, trials: int, seed: int,
                          tol: float = DEFAULT_TOL) -> VerificationReport:
    """(s_i(A) s_{n-i+1}(B)) log-majorized by s(AB) on random invertible pairs."""
    rep = VerificationReport("gelfand-naimark", {"dim": dim}, trials, seed, tol)
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        a = _random_invertible(rng, dim)
        b = _random_invertible(rng, dim)
        sa = spectral.singular_values(a)
        sb = spectral.singular_values(b)
        sab = spectral.singular_values(a @ b)
        x = np.sort(sa * sb[::-1])[::-1]
        verdict = log_majorization(x, sab, tol=tol, product_tol=1e-8)
        rep.note_gap(max(verdict.worst_prefix_gap, 0.0))
        if not verdict.holds:
            rep.record(trial, verdict.worst_prefix_gap, 0.0, verdict.worst_prefix_gap)
    return rep


def check_holder(spec: GaugeSpec, exponents: HolderExponents, dim: int,
                 trials: int, seed: int, tol: float = DEFAULT_TOL) -> VerificationReport:
    """Forward Hoelder (product) and Young (sum) bounds for symmetric norms."""
    r0, r1, r2 = exponents.r0, exponents.r1, exponents.r2
    if min(r0, r1, r2) <= 0:
        raise errors.BadExponentsError("forward Hoelder needs all-positive exponents")
    subs = [VerificationReport(name, {"spec": spec.to_string(), "dim": dim,
                                      "exponents": [r0, r1, r2]}, trials, seed, tol)
            for name in ("holder-product", "young-sum")]
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        s_mat = _random_general(rng, dim)
        t_mat = _random_general(rng, dim)
        u = gauge_value(spec, spectral.singular_values(s_mat @ t_mat) ** r0)
        v1 = gauge_value(spec, spectral.singular_values(s_mat) ** r1)
        v2 = gauge_value(spec, spectral.singular_values(t_mat) ** r2)
        prod = v1 ** (r0 / r1) * v2 ** (r0 / r2)
        summ = (r0 / r1) * v1 + (r0 / r2) * v2
        for sub, (lhs, rhs) in zip(subs, [(u, prod), (prod, summ)]):
            gap = _rel_gap(lhs, rhs)
            sub.note_gap(max(gap, 0.0))
            if gap > tol:
                sub.record(trial, lhs, rhs, gap)
    return merge_reports("holder", subs)


def check_reverse_holder(spec: GaugeSpec, r: float, p: float, q: float,
                         dim: int, trials: int, seed: int,
                         tol: float = DEFAULT_TOL,
                         cond_cap: float = 1e6) -> VerificationReport:
    """Reverse Hoelder/Young family (>= direction), five sub-inequalities.

    B is sampled invertible with condition number capped; gaps are
    relative to max(|lhs|, |rhs|).
    """
    if not (r > 0 and p > 0 and q < 0):
        raise errors.BadExponentsError("reverse family needs r, p > 0 and q < 0")
    HolderExponents(r, p, q)  # validates 1/r = 1/p + 1/q
    names = ["norm-product", "norm-sum", "trace-product",
             "trace-sum", "schatten-ordering"]
    meta = {"spec": spec.to_string(), "dim": dim, "exponents": [r, p, q],
            "cond_cap": cond_cap}
    subs = [VerificationReport(n, dict(meta), trials, seed, tol) for n in names]
    tr_spec = GaugeSpec.trace()
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        a = _random_general(rng, dim)
        b = _random_conditioned(rng, dim, cond_cap)
        sa = spectral.singular_values(a)
        sb = spectral.singular_values(b)
        sab = spectral.singular_values(a @ b)
        nr = gauge_value(spec, sab ** r)
        np_ = gauge_value(spec, sa ** p)
        nq = gauge_value(spec, sb ** q)
        t_r = gauge_value(tr_spec, sab ** r)
        t_p = gauge_value(tr_spec, sa ** p)
        t_q = gauge_value(tr_spec, sb ** q)
        checks = [
            (np_ ** (1.0 / p) * nq ** (1.0 / q), nr ** (1.0 / r)),
            ((1.0 / p) * np_ + (1.0 / q) * nq, (1.0 / r) * nr),
            (t_p ** (1.0 / p) * t_q ** (1.0 / q), t_r ** (1.0 / r)),
            ((1.0 / p) * t_p + (1.0 / q) * t_q, (1.0 / r) * t_r),
            (gauge_value(GaugeSpec("schatten", p=p), sa)
             * gauge_value(GaugeSpec("schatten", p=q), sb),
             gauge_value(GaugeSpec("schatten", p=r), sab)),
        ]
        for sub, (lhs, rhs) in zip(subs, checks):
            gap = _rel_gap(lhs, rhs)
            sub.note_gap(max(gap, 0.0))
            if gap > tol:
                sub.record(trial, lhs, rhs, gap)
    return merge_reports("reverse-holder", subs)


def check_scalar_reverse_young(trials: int, seed: int,
                               tol: float = DEFAULT_TOL) -> VerificationReport:
    """Scalar reverse Young plus the vector gauge version on random exponents."""
    gauges = [GaugeSpec.schatten(1), GaugeSpec.schatten(2), GaugeSpec.kyfan(2)]
    rep = VerificationReport(
        "scalar-young", {"gauges": [g.to_string() for g in gauges]}, trials, seed, tol)
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        p = rng.uniform(0.5, 3.0)
        q = -(p + rng.uniform(0.5, 3.0))
        r = 1.0 / (1.0 / p + 1.0 / q)
        x = rng.uniform(0.1, 3.0) * rng.choice([-1.0, 1.0])
        y = rng.uniform(0.1, 3.0) * rng.choice([-1.0, 1.0])
        lhs = abs(x) ** p / p + abs(y) ** q / q
        rhs = abs(x * y) ** r / r
        gap = _rel_gap(lhs, rhs)
        rep.note_gap(max(gap, 0.0))
        if gap > tol:
            rep.record(trial, lhs, rhs, gap)
        xv = rng.uniform(0.1, 3.0, size=4) * rng.choice([-1.0, 1.0], size=4)
        yv = rng.uniform(0.1, 3.0, size=4) * rng.choice([-1.0, 1.0], size=4)
        for g in gauges:
            glhs = (gauge_value(g, np.abs(xv) ** p) ** (1.0 / p)
                    * gauge_value(g, np.abs(yv) ** q) ** (1.0 / q))
            grhs = gauge_value(g, np.abs(xv * yv) ** r) ** (1.0 / r)
            gap = _rel_gap(glhs, grhs)
            rep.note_gap(max(gap, 0.0))
            if gap > tol:
                rep.record(trial, glhs, grhs, gap)
    return rep


# -- variational suites ------------------------------------------------------

def check_variational(params: PsiParams, theorem: str, spec: GaugeSpec,
                      dim: int, trials: int, seed: int,
                      tol: float = 1e-7, probes: int = 20,
                      probe_tol: float = DEFAULT_TOL) -> VerificationReport:
    """Closed-form optimizer attains the functional; random Z respect the bound."""
    theorem = str(theorem).replace(".", "")
    tag = variational._require_tag(params, theorem)
    minimizing = tag.startswith("min")
    rep = VerificationReport(
        "variational",
        {"p": params.p, "q": params.q, "s": params.s, "theorem": theorem,
         "spec": spec.to_string(), "dim": dim, "tag": tag, "probes": probes},
        trials, seed, tol)
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        a = _random_pd(rng, dim)
        b = _random_pd(rng, dim)
        k = _random_invertible(rng, dim, min_rel_sv=1e-3)
        psi_n = variational.psi_norm(params, spec, a, b, k)
        z_star = variational._optimizer(params, theorem, a, b, k)
        worst = 0.0
        for form in ("product", "sum"):
            obj = variational._objective(params, theorem, form, spec, a, b, k, z_star)
            worst = max(worst, abs(obj - psi_n) / max(abs(psi_n), 1e-300))
        rep.note_gap(worst)
        if worst > tol:
            rep.record(trial, worst, tol, worst)
            continue
        for j in range(probes):
            h = _random_general(rng, dim)
            h = 0.5 * (h + h.conj().T)
            z = variational._pd_exp(0.5 * h)
            obj = variational._objective(params, theorem, "product", spec, a, b, k, z)
            direction_gap = (psi_n - obj) if minimizing else (obj - psi_n)
            direction_gap /= max(abs(psi_n), 1e-300)
            if direction_gap > probe_tol:
                rep.record(trial, obj, psi_n, direction_gap)
                break
    return rep


def check_young_ordering(params: PsiParams, theorem: str, spec: GaugeSpec,
                         dim: int, trials: int, seed: int,
                         tol: float = 1e-10) -> VerificationReport:
    """Product form vs sum form respect the Young (AM-GM) direction at every Z."""
    theorem = str(theorem).replace(".", "")
    tag = variational._require_tag(params, theorem)
    minimizing = tag.startswith("min")
    rep = VerificationReport(
        "young-ordering",
        {"p": params.p, "q": params.q, "s": params.s, "theorem": theorem,
         "spec": spec.to_string(), "dim": dim, "tag": tag},
        trials, seed, tol)
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        a = _random_pd(rng, dim)
        b = _random_pd(rng, dim)
        k = _random_invertible(rng, dim, min_rel_sv=1e-3)
        h = _random_general(rng, dim)
        z = variational._pd_exp(0.25 * (h + h.conj().T))
        prod = variational._objective(params, theorem, "product", spec, a, b, k, z)
        summ = variational._objective(params, theorem, "sum", spec, a, b, k, z)
        lhs, rhs = (prod, summ) if minimizing else (summ, prod)
        gap = _rel_gap(lhs, rhs)
        rep.note_gap(max(gap, 0.0))
        if gap > tol:
            rep.record(trial, lhs, rhs, gap)
    return rep


# -- convexity suites --------------------------------------------------------

def _mix_pd(a1, a2, lam):
    return spectral.pd_from(spectral.HermitianMatrix(
        lam * a1.mat + (1.0 - lam) * a2.mat))


def check_joint_convexity(params: PsiParams, dim: int, trials: int, seed: int,
                          tol: float = DEFAULT_TOL,
                          direction_override: str | None = None) -> VerificationReport:
    """Midpoint and random-weight joint convexity/concavity of the trace functional."""
    regime = classify_convexity = variational.classify(params).convexity
    if direction_override is not None:
        direction = direction_override
    elif regime == "concave_42i":
        direction = "concave"
    elif regime in ("convex_42ii", "convex_42iii"):
        direction = "convex"
    else:
        raise errors.RegimeMismatchError(
            f"convexity unknown for (p,q,s)=({params.p},{params.q},{params.s})")
    rep = VerificationReport(
        "convexity",
        {"p": params.p, "q": params.q, "s": params.s, "dim": dim,
         "regime": classify_convexity, "direction": direction},
        trials, seed, tol)
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        a1, a2 = _random_pd(rng, dim), _random_pd(rng, dim)
        b1, b2 = _random_pd(rng, dim), _random_pd(rng, dim)
        k = _random_invertible(rng, dim, min_rel_sv=1e-3)
        for lam in (0.5, float(rng.uniform())):
            mixed = variational.psi(params, _mix_pd(a1, a2, lam),
                                    _mix_pd(b1, b2, lam), k)
            combo = (lam * variational.psi(params, a1, b1, k)
                     + (1.0 - lam) * variational.psi(params, a2, b2, k))
            lhs, rhs = (combo, mixed) if direction == "concave" else (mixed, combo)
            gap = _rel_gap(lhs, rhs)
            rep.note_gap(max(gap, 0.0))
            if gap > tol:
                rep.record(trial, lhs, rhs, gap)
    return rep


def check_upsilon_convexity(p: float, s: float, dim: int, trials: int, seed: int,
                            tol: float = DEFAULT_TOL,
                            direction_override: str | None = None) -> VerificationReport:
    """Single-variable convexity/concavity of tr (K* A^p K)^s."""
    tags = variational.upsilon_regimes(p, s)
    if direction_override is not None:
        direction = direction_override
    elif "concave_41i" in tags:
        direction = "concave"
    elif tags:
        direction = "convex"
    else:
        raise errors.RegimeMismatchError(f"convexity unknown for (p,s)=({p},{s})")
    rep = VerificationReport(
        "upsilon-convexity",
        {"p": p, "s": s, "dim": dim, "tags": sorted(tags), "direction": direction},
        trials, seed, tol)
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        a1, a2 = _random_pd(rng, dim), _random_pd(rng, dim)
        k = _random_invertible(rng, dim, min_rel_sv=1e-3)
        for lam in (0.5, float(rng.uniform())):
            mixed = variational.upsilon(p, s, _mix_pd(a1, a2, lam), k)
            combo = (lam * variational.upsilon(p, s, a1, k)
                     + (1.0 - lam) * variational.upsilon(p, s, a2, k))
            lhs, rhs = (combo, mixed) if direction == "concave" else (mixed, combo)
            gap = _rel_gap(lhs, rhs)
            rep.note_gap(max(gap, 0.0))
            if gap > tol:
                rep.record(trial, lhs, rhs, gap)
    return rep


def check_antinorm_concavity(spec: GaugeSpec, params: PsiParams, dim: int,
                             trials: int, seed: int,
                             tol: float = DEFAULT_TOL) -> VerificationReport:
    """Joint concavity of the anti-norm functional, plus a Hoelder precheck."""
    if not spec.supports_holder:
        raise errors.UnsupportedAntiNormError(
            f"{spec.to_string()!r} is not licensed to satisfy the Hoelder assumption")
    if variational.classify(params).convexity != "concave_42i":
        raise errors.RegimeMismatchError(
            "anti-norm concavity requires 0<=p,q<=1 with 0<s<=1/(p+q)")
    holder = VerificationReport(
        "antinorm-holder-precheck", {"spec": spec.to_string(), "dim": dim},
        min(trials, 200), seed, tol)
    for trial in range(holder.trials):
        rng = _trial_rng(seed, trial, salt=1)
        s_mat = _random_pd(rng, dim).mat
        t_mat = _random_pd(rng, dim).mat
        lhs = gauge_value(spec, spectral.singular_values(s_mat @ t_mat))
        rhs = (gauge_value(spec, spectral.singular_values(s_mat) ** 2.0) ** 0.5
               * gauge_value(spec, spectral.singular_values(t_mat) ** 2.0) ** 0.5)
        gap = _rel_gap(lhs, rhs)
        holder.note_gap(max(gap, 0.0))
        if gap > tol:
            holder.record(trial, lhs, rhs, gap)

    concave = VerificationReport(
        "antinorm-concavity",
        {"spec": spec.to_string(), "p": params.p, "q": params.q, "s": params.s,
         "dim": dim},
        trials, seed, tol)
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        a1, a2 = _random_pd(rng, dim), _random_pd(rng, dim)
        b1, b2 = _random_pd(rng, dim), _random_pd(rng, dim)
        k = _random_invertible(rng, dim, min_rel_sv=1e-3)
        for lam in (0.5, float(rng.uniform())):
            mixed = variational.psi_norm(params, spec, _mix_pd(a1, a2, lam),
                                         _mix_pd(b1, b2, lam), k)
            combo = (lam * variational.psi_norm(params, spec, a1, b1, k)
                     + (1.0 - lam) * variational.psi_norm(params, spec, a2, b2, k))
            gap = _rel_gap(combo, mixed)
            concave.note_gap(max(gap, 0.0))
            if gap > tol:
                concave.record(trial, combo, mixed, gap)
    return merge_reports("antinorm", [concave, holder])


# -- data processing inequality ----------------------------------------------

_DPI_CHANNELS = ["random-2", "random-3", "random-4", "depol-0", "depol-0.5", "depol-1"]


def _dpi_channel(label: str, dim: int, rng) -> QuantumChannel:
    kind, _, arg = label.partition("-")
    if kind == "random":
        z = (rng.standard_normal((dim * int(arg), dim))
             + 1j * rng.standard_normal((dim * int(arg), dim)))
        q, r = np.linalg.qr(z)
        ph = np.diagonal(r) / np.abs(np.diagonal(r))
        v = q * ph
        kraus = [np.ascontiguousarray(v[i * dim:(i + 1) * dim, :]) for i in range(int(arg))]
        return QuantumChannel(dim, dim, kraus)
    return depolarizing(dim, float(arg))


def _divergence(kind: str, a, b, alpha: float, z: float) -> float:
    if kind == "petz":
        return entropy.petz_renyi(a, b, alpha)
    if kind == "sandwiched":
        return entropy.sandwiched_renyi(a, b, alpha)
    if kind == "alpha_z":
        return entropy.alpha_z(a, b, alpha, z)
    raise errors.RegimeMismatchError(f"unknown divergence kind {kind!r}")


def dpi_asserted(kind: str, alpha: float) -> bool:
    """Parameter ranges where monotonicity is established; the rest run
    in exploratory mode (observations recorded, pass not asserted)."""
    return kind == "sandwiched" and (0.5 <= alpha < 1.0 or alpha > 1.0)


def check_dpi(kind: str, alpha: float, dim: int, trials: int, seed: int,
              z: float = 1.0, tol: float = 1e-8) -> VerificationReport:
    """Divergence monotonicity under random CPTP and depolarizing channels."""
    asserted = dpi_asserted(kind, alpha)
    rep = VerificationReport(
        "dpi",
        {"kind": kind, "alpha": alpha, "z": z, "dim": dim,
         "channels": _DPI_CHANNELS, "exploratory": not asserted},
        trials, seed, tol)
    observed = 0
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        rho = _random_pd(rng, dim, trace_one=True)
        sigma = _random_pd(rng, dim, trace_one=True)
        ch = _dpi_channel(_DPI_CHANNELS[trial % len(_DPI_CHANNELS)], dim, rng)
        before = _divergence(kind, rho, sigma, alpha, z)
        after = _divergence(kind,
                            regularize_state(apply_channel(ch, rho)),
                            regularize_state(apply_channel(ch, sigma)),
                            alpha, z)
        gap = after - before  # absolute tolerance per contract
        rep.note_gap(max(gap, 0.0))
        if gap > tol:
            if asserted:
                rep.record(trial, after, before, gap)
            else:
                observed += 1
    if not asserted:
        rep.params["observed_violations"] = observed
    return rep


# -- entropy limit suite -----------------------------------------------------

def check_entropy_limits(trials: int, seed: int, dims=(2, 3, 4),
                         ratio_range=(5.0, 20.0)) -> VerificationReport:
    """Sandwiched family limits: alpha -> 1 (Umegaki) and alpha -> inf (Thompson).

    Two merged sub-suites.  "alpha-to-one" checks linear-in-h convergence to
    the Umegaki relative entropy.  "alpha-to-infinity" checks the gap to the
    operator norm of log(B^{-1/2} A B^{-1/2}) against a 5/alpha envelope.
    The large-alpha entropy actually converges to the one-sided quantity
    log lambda_1(B^{-1/2} A B^{-1/2}); the norm adds the reversed branch
    |log lambda_min| and exceeds it for roughly half of random pairs, so
    this sub-suite fails for generic inputs.  Diagnostic gaps against the
    one-sided limit are reported in params["max_relative_gap_worst"].
    """
    one = VerificationReport(
        "alpha-to-one", {"dims": list(dims), "ratio_range": list(ratio_range)},
        trials, seed, ratio_range[1])
    inf = VerificationReport(
        "alpha-to-infinity", {"dims": list(dims)}, trials, seed, 0.01)
    dmax_worst = 0.0
    reversed_dominant = 0
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        dim = int(dims[trial % len(dims)])
        a = _random_pd(rng, dim, trace_one=True)
        b = _random_pd(rng, dim, trace_one=True)
        ume = entropy.umegaki(a, b)
        errs = []
        for h in (1e-3, 1e-4):
            errs.append(max(abs(entropy.sandwiched_renyi(a, b, 1.0 + h) - ume),
                            abs(entropy.sandwiched_renyi(a, b, 1.0 - h) - ume)))
        ratio = errs[0] / max(errs[1], 1e-300)
        one.note_gap(abs(ratio - 10.0))
        if not ratio_range[0] <= ratio <= ratio_range[1]:
            one.record(trial, ratio, ratio_range[1], ratio)

        thom = entropy.thompson_metric_lognorm(a, b)
        dvals = [entropy.sandwiched_renyi(a, b, al) for al in (1e3, 1e4)]
        gaps = [abs(d - thom) for d in dvals]
        inf.note_gap(gaps[1])
        dmax = entropy.max_relative(a, b)
        dmax_worst = max(dmax_worst, abs(dvals[1] - dmax))
        if thom > dmax + 1e-12:
            reversed_dominant += 1
        if (gaps[0] > 5.0 / 1e3 or gaps[1] > 5.0 / 1e4
                or gaps[1] > gaps[0] + 1e-12 or gaps[1] > 0.01):
            inf.record(trial, gaps[1], 5.0 / 1e4, gaps[1])
    merged = merge_reports("limits", [one, inf])
    merged.params["max_relative_gap_worst"] = dmax_worst
    merged.params["reversed_branch_dominant"] = reversed_dominant
    return merged
