"""Machine-readable outcome of a seeded property suite."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Seeded, reproducible record of a property-suite run.

    ``violations`` holds one entry per failed check:
    ``{"trial": int, "lhs": float, "rhs": float, "gap": float}``.
    ``passed`` is true iff there are no violations.
    """

    suite: str
    params: dict
    trials: int
    seed: int
    tolerance: float
    violations: list = field(default_factory=list)
    max_gap: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def record(self, trial: int, lhs: float, rhs: float, gap: float):
        self.violations.append(
            {"trial": int(trial), "lhs": float(lhs), "rhs": float(rhs), "gap": float(gap)})

    def note_gap(self, gap: float):
        if gap > self.max_gap:
            self.max_gap = float(gap)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "trials": self.trials,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "violations": sorted(self.violations, key=lambda v: v["trial"]),
            "max_gap": self.max_gap,
            "pass": self.passed,
        }

    def to_json(self) -> str:
        """Canonical form: UTF-8, key-sorted, shortest round-trip decimals."""
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def merge_reports(suite: str, reports: list[VerificationReport]) -> VerificationReport:
    """Combine sub-reports into one document.

    Violation trial indices are offset by ``sub_index * trials`` so the
    originating sub-report stays recoverable; ``params["sub_suites"]``
    lists the sub-report names in offset order.
    """
    trials = max((r.trials for r in reports), default=0)
    merged = VerificationReport(
        suite=suite,
        params={"sub_suites": [r.suite for r in reports]},
        trials=trials,
        seed=reports[0].seed if reports else 0,
        tolerance=max((r.tolerance for r in reports), default=0.0),
    )
    for i, rep in enumerate(reports):
        merged.note_gap(rep.max_gap)
        for v in rep.violations:
            merged.record(i * trials + v["trial"], v["lhs"], v["rhs"], v["gap"])
    return merged
