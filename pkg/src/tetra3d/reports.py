"""Check reports shared by every verification routine."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


def _jsonable(x: Any) -> Any:
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass
class Report:
    """Outcome of a check: how many cases ran and the first failing case, if any."""

    id: str
    params: dict = field(default_factory=dict)
    cases: int = 0
    failures: int = 0
    first_failure: dict | None = None
    details: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, indices: Any = None, lhs: Any = None, rhs: Any = None) -> bool:
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = {"indices": _jsonable(indices), "lhs": _jsonable(lhs),
                                      "rhs": _jsonable(rhs)}
        return ok

    def merge(self, other: "Report") -> "Report":
        """Fold a sub-report in; keeps the earliest counterexample."""
        self.cases += other.cases
        self.failures += other.failures
        if self.first_failure is None and other.first_failure is not None:
            self.first_failure = dict(other.first_failure, check=other.id)
        self.details.append(other.summary())
        return self

    def summary(self) -> dict:
        return {"id": self.id, "pass": self.passed, "cases": self.cases, "failures": self.failures}

    def to_json(self) -> dict:
        out = {"id": self.id, "params": _jsonable(self.params), "pass": self.passed,
               "cases": self.cases, "failures": self.failures}
        if self.first_failure is not None:
            out["first_failure"] = self.first_failure
        if self.details:
            out["details"] = self.details
        return out

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.id}: {self.cases} cases, {self.failures} failures"
