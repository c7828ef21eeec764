"""Symmetric gauge functions and the matrix norms/anti-norms they induce.

A gauge spec describes one of: Schatten-p functional (norm for p >= 1,
quasi-norm for 0 < p < 1, anti-norm for p < 0 on invertible input),
Ky Fan k norm, operator norm, trace norm, or an anti-norm derived from
a base norm via |||A|||_! = |||A^{-p}|||^{-1/p}.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from renyivar import errors, spectral
from renyivar.report import VerificationReport

SYMMETRIC_NORM = "symmetric_norm"
QUASI_ANTI_NORM = "quasi_anti_norm"


@dataclass(frozen=True)
class GaugeSpec:
    kind: str                      # schatten | kyfan | op | trace | anti
    p: float | None = None
    k: int | None = None
    base: "GaugeSpec | None" = None

    # -- constructors --------------------------------------------------------

    @staticmethod
    def schatten(p: float) -> "GaugeSpec":
        if p == 0 or not np.isfinite(p):
            raise errors.SpecParseError("schatten exponent must be nonzero and finite")
        return GaugeSpec("schatten", p=float(p))

    @staticmethod
    def kyfan(k: int) -> "GaugeSpec":
        if int(k) < 1:
            raise errors.SpecParseError("ky fan order must be >= 1")
        return GaugeSpec("kyfan", k=int(k))

    @staticmethod
    def operator() -> "GaugeSpec":
        return GaugeSpec("op")

    @staticmethod
    def trace() -> "GaugeSpec":
        return GaugeSpec("trace")

    @staticmethod
    def anti(base: "GaugeSpec", p: float) -> "GaugeSpec":
        if not base.is_norm:
            raise errors.TypeClassMismatchError("anti-norm base must be a symmetric norm")
        if p <= 0:
            raise errors.SpecParseError("anti-norm exponent must be positive")
        return GaugeSpec("anti", p=float(p), base=base)

    # -- classification ------------------------------------------------------

    @property
    def is_norm(self) -> bool:
        if self.kind == "schatten":
            return self.p >= 1.0
        return self.kind in ("kyfan", "op", "trace")

    @property
    def norm_class(self) -> str:
        return SYMMETRIC_NORM if self.is_norm else QUASI_ANTI_NORM

    @property
    def supports_holder(self) -> bool:
        # Only the Schatten quasi-norms (0 < p < 1) are licensed to
        # satisfy the Hoelder inequality among the anti-norm specs.
        return self.kind == "schatten" and 0.0 < self.p < 1.0

    # -- string grammar ------------------------------------------------------

    def to_string(self) -> str:
        if self.kind == "schatten":
            return f"schatten:{self.p:g}"
        if self.kind == "kyfan":
            return f"kyfan:{self.k}"
        if self.kind == "anti":
            return f"anti:{self.base.to_string()}:{self.p:g}"
        return self.kind

    @staticmethod
    def parse(text: str) -> "GaugeSpec":
        text = text.strip()
        if text == "op":
            return GaugeSpec.operator()
        if text == "trace":
            return GaugeSpec.trace()
        if text.startswith("schatten:"):
            try:
                p = float(text.split(":", 1)[1])
            except ValueError as e:
                raise errors.SpecParseError(f"bad schatten exponent in {text!r}") from e
            return GaugeSpec.schatten(p)
        if text.startswith("kyfan:"):
            try:
                k = int(text.split(":", 1)[1])
            except ValueError as e:
                raise errors.SpecParseError(f"bad ky fan order in {text!r}") from e
            return GaugeSpec.kyfan(k)
        if text.startswith("anti:"):
            rest = text[len("anti:"):]
            base_str, sep, p_str = rest.rpartition(":")
            if not sep:
                raise errors.SpecParseError(f"anti spec needs a base and exponent: {text!r}")
            try:
                p = float(p_str)
            except ValueError as e:
                raise errors.SpecParseError(f"bad anti exponent in {text!r}") from e
            return GaugeSpec.anti(GaugeSpec.parse(base_str), p)
        raise errors.SpecParseError(f"unrecognized norm spec {text!r}")


def gauge_value(spec: GaugeSpec, x) -> float:
    """Evaluate the gauge function on a real vector."""
    a = np.abs(np.asarray(x, dtype=np.float64)).ravel()
    if a.size == 0:
        raise errors.EmptyVectorError("gauge of empty vector")
    if spec.kind == "schatten":
        p = spec.p
        if p < 0 and np.any(a == 0.0):
            raise errors.ZeroEntryError("zero entry with negative schatten exponent")
        return float(np.sum(a ** p) ** (1.0 / p))
    if spec.kind == "kyfan":
        k = min(spec.k, a.size)
        return float(np.sum(np.sort(a)[::-1][:k]))
    if spec.kind == "op":
        return float(np.max(a))
    if spec.kind == "trace":
        return float(np.sum(a))
    if spec.kind == "anti":
        if np.any(a == 0.0):
            raise errors.ZeroEntryError("derived anti-norm needs strictly positive entries")
        return float(gauge_value(spec.base, a ** (-spec.p)) ** (-1.0 / spec.p))
    raise errors.SpecParseError(f"unknown gauge kind {spec.kind!r}")


def sym_norm(spec: GaugeSpec, m) -> float:
    """The unitarily invariant functional Phi(s(M)).

    Accepts norm and quasi/negative Schatten specs; derived anti-norms
    must go through :func:`anti_norm` (they need a PD argument).
    """
    if spec.kind == "anti":
        raise errors.TypeClassMismatchError("use anti_norm for derived anti-norm specs")
    if isinstance(m, spectral.PositiveDefiniteMatrix):
        s = spectral.decompose(m.base).eigenvalues
    else:
        s = spectral.singular_values(np.asarray(m))
    if spec.kind == "schatten" and spec.p < 0:
        if s[-1] <= spectral.PD_TOLERANCE * max(s[0], 1e-300):
            raise errors.SingularInputError("singular input for negative schatten exponent")
    return gauge_value(spec, s)


def anti_norm(spec: GaugeSpec, a: spectral.PositiveDefiniteMatrix) -> float:
    """Evaluate an anti-norm on a positive definite matrix.

    Handles derived anti-norms |||A^{-p}|||^{-1/p}, Schatten quasi-norms
    (0 < p < 1) and negative Schatten functionals directly.
    """
    vals = spectral.decompose(a.base).eigenvalues
    if spec.kind == "anti":
        return float(gauge_value(spec.base, vals ** (-spec.p)) ** (-1.0 / spec.p))
    if spec.kind == "schatten" and (spec.p < 0 or 0 < spec.p < 1):
        return gauge_value(spec, vals)
    raise errors.TypeClassMismatchError(
        f"{spec.to_string()!r} is not an anti-norm spec")


def check_gauge_axioms(spec: GaugeSpec, dim: int, trials: int, seed: int,
                       tol: float = 1e-12) -> VerificationReport:
    """Property-check the gauge axioms on random vectors.

    For a norm-class spec the report fails on any axiom violation.  A
    Schatten quasi-norm spec runs in classification mode: the suite
    searches for a triangle-inequality counterexample and fails only if
    none is found (confirming the quasi/anti classification).
    """
    if spec.kind == "anti":
        raise errors.TypeClassMismatchError("axiom checks apply to vector gauges only")
    classify_quasi = not spec.is_norm
    rep = VerificationReport(
        suite="gauge-axioms",
        params={"spec": spec.to_string(), "dim": dim,
                "classified": spec.norm_class},
        trials=trials, seed=seed, tolerance=tol)

    e1 = np.zeros(dim)
    e1[0] = 1.0
    norm_one = gauge_value(spec, e1)
    if abs(norm_one - 1.0) > tol and not classify_quasi:
        rep.record(-1, norm_one, 1.0, abs(norm_one - 1.0))

    found_counterexample = False
    for trial in range(trials):
        rng = np.random.default_rng([seed, trial])
        x = rng.standard_normal(dim)
        y = rng.standard_normal(dim)
        fx = gauge_value(spec, x)
        fy = gauge_value(spec, y)
        fxy = gauge_value(spec, x + y)
        scale = max(fx + fy, 1.0)
        tri_gap = fxy - (fx + fy)
        perm = rng.permutation(dim)
        sgn = rng.integers(0, 2, size=dim) * 2.0 - 1.0
        perm_gap = abs(gauge_value(spec, x[perm]) - fx)
        sign_gap = abs(gauge_value(spec, sgn * x) - fx)
        if classify_quasi:
            if tri_gap > tol * scale:
                found_counterexample = True
            rep.note_gap(max(perm_gap, sign_gap))
            if perm_gap > tol * scale or sign_gap > tol * scale:
                rep.record(trial, fx, fx, max(perm_gap, sign_gap))
        else:
            gap = max(tri_gap, perm_gap, sign_gap)
            rep.note_gap(max(gap, 0.0))
            if gap > tol * scale:
                rep.record(trial, fxy, fx + fy, gap)

    if classify_quasi:
        # The dim-1 gauges all reduce to |.| and cannot violate triangle.
        if dim > 1 and not found_counterexample:
            rep.record(trials, 0.0, 0.0, 0.0)
        rep.params["triangle_counterexample"] = found_counterexample
    return rep
