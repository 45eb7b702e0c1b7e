"""
Verification reports.

A report is an ordered list of named cases with a pass flag and a small detail
dictionary, plus the parameters and seed of the run. Serialization is
deterministic (sorted keys, fixed indentation) so identical runs produce
byte-identical files.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional


@dataclass
class CaseResult:
    """One named outcome. Cases with ``asserted=False`` never fail a report."""

    name: str
    passed: bool
    detail: Dict[str, Any] = field(default_factory=dict)
    asserted: bool = True

    def to_dict(self) -> Dict[str, Any]:
        out = {"name": self.name, "pass": bool(self.passed), "detail": self.detail}
        if not self.asserted:
            out["asserted"] = False
        return out


@dataclass
class Report:
    """Outcome of one verification suite."""

    suite: str
    cases: List[CaseResult] = field(default_factory=list)
    params: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases if case.asserted)

    def add(self, name: str, passed: bool, **detail: Any) -> CaseResult:
        case = CaseResult(name, bool(passed), dict(detail))
        self.cases.append(case)
        return case

    def note(self, name: str, passed: bool, **detail: Any) -> CaseResult:
        """Record an outcome without asserting it."""
        case = CaseResult(name, bool(passed), dict(detail), asserted=False)
        self.cases.append(case)
        return case

    def extend(self, cases: Iterable[CaseResult]) -> None:
        self.cases.extend(cases)

    def case(self, name: str) -> Optional[CaseResult]:
        """First case with the given name, or None."""
        return next((c for c in self.cases if c.name == name), None)

    def failures(self) -> List[str]:
        return [c.name for c in self.cases if c.asserted and not c.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "pass": self.passed,
            "cases": [c.to_dict() for c in self.cases],
            "params": self.params,
        }

    def summary(self) -> str:
        good = sum(1 for c in self.cases if c.passed)
        return f"{self.suite}: {good}/{len(self.cases)} passed"


def dumps(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n"


def write_report(reports: List[Report], path: str, **params: Any) -> Path:
    """
    Write one or more reports as a single JSON document.

    Args:
        reports (List[Report]): Reports in the order they should appear.
        path (str): Destination file; parent directories are created.
        **params: Run-level parameters recorded next to the reports (seed, ...).

    Returns:
        Path: The written file.
    """
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    payload = {
        "pass": all(r.passed for r in reports),
        "params": params,
        "reports": [r.to_dict() for r in reports],
    }
    target.write_text(dumps(payload), encoding="utf-8")
    return target
