"""
Verification Reports
Trial plans, per-trial outcomes and the JSON report they aggregate into
"""

from dataclasses import dataclass, field as dc_field
from typing import Any, Dict, List, Optional

from src import __version__
from src.fields import FieldDescriptor
from src.serialization import field_choice_text
from src.utils.helpers import MASK64, JsonProcessor


@dataclass(frozen=True)
class TrialPlan:
    """Which suite to run, how often, from which seed and over which field"""

    suite: str
    trials: int
    seed: int
    field: FieldDescriptor

    def __post_init__(self):
        if int(self.trials) < 1:
            raise ValueError(f"A plan needs at least one trial, got {self.trials}")
        object.__setattr__(self, 'trials', int(self.trials))
        object.__setattr__(self, 'seed', int(self.seed) & MASK64)

    def for_suite(self, suite: str) -> "TrialPlan":
        return TrialPlan(suite, self.trials, self.seed, self.field)


@dataclass
class TrialOutcome:
    """Result of one trial: failed assertion names and the inputs that broke them"""

    trial: int
    failures: List[Dict[str, Any]] = dc_field(default_factory=list)
    indeterminate: int = 0
    transitions: Dict[str, int] = dc_field(default_factory=dict)

    def check(self, condition: bool, assertion: str, inputs: Optional[Dict[str, Any]] = None) -> bool:
        """Record the first failed assertion of the trial"""
        if not condition and not self.failures:
            self.failures.append({"trial": self.trial, "assertion": assertion, "input": inputs or {}})
        return condition

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class Report:
    suite: str
    seed: int
    trials: int
    field: str
    passed: int = 0
    failed: int = 0
    failures: List[Dict[str, Any]] = dc_field(default_factory=list)
    indeterminate: Optional[int] = None
    transitions: Optional[Dict[str, int]] = None
    suites: Optional[List["Report"]] = None

    @classmethod
    def from_outcomes(cls, plan: TrialPlan, outcomes: List[TrialOutcome], track_divisors: bool = False) -> "Report":
        report = cls(plan.suite, plan.seed, len(outcomes), field_choice_text(plan.field))
        for outcome in sorted(outcomes, key=lambda o: o.trial):
            if outcome.passed:
                report.passed += 1
            else:
                report.failed += 1
                report.failures.extend(outcome.failures)
        if track_divisors:
            report.indeterminate = sum(o.indeterminate for o in outcomes)
            report.transitions = {}
            for outcome in outcomes:
                for key, count in outcome.transitions.items():
                    report.transitions[key] = report.transitions.get(key, 0) + count
        return report

    @classmethod
    def aggregate(cls, plan: TrialPlan, reports: List["Report"]) -> "Report":
        report = cls(plan.suite, plan.seed, plan.trials, field_choice_text(plan.field), suites=reports)
        report.passed = sum(r.passed for r in reports)
        report.failed = sum(r.failed for r in reports)
        for r in reports:
            report.failures.extend(dict(f, suite=r.suite) for f in r.failures)
        return report

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "suite": self.suite,
            "seed": self.seed,
            "trials": self.trials,
            "field": self.field,
            "passed": self.passed,
            "failed": self.failed,
            "failures": self.failures,
            "version": __version__,
        }
        if self.indeterminate is not None:
            data["indeterminate"] = self.indeterminate
        if self.transitions is not None:
            data["transitions"] = dict(sorted(self.transitions.items()))
        if self.suites is not None:
            data["suites"] = [r.to_dict() for r in self.suites]
        return data

    def to_json(self, indent: int = 2) -> str:
        return JsonProcessor.dumps(self.to_dict(), indent=indent)
