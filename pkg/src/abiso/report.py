"""Verification report data model with deterministic JSON and CSV output."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

SCHEMA_VERSION = 1


@dataclass
class CaseResult:
    """One checked case: a group (and optionally a subgroup) with both sides."""

    group: str
    expected: int | bool
    actual: int | bool
    passed: bool
    subgroup_generators: list[list[int]] | None = None
    label: str | None = None

    def to_json_dict(self) -> dict:
        out: dict = {"group": self.group}
        if self.subgroup_generators is not None:
            out["subgroup_generators"] = self.subgroup_generators
        if self.label is not None:
            out["label"] = self.label
        out["expected"] = self.expected
        out["actual"] = self.actual
        out["pass"] = self.passed
        return out


@dataclass
class VerificationReport:
    suite: str
    parameters: dict
    cases: list[CaseResult]
    runtime_ms: int = 0

    @property
    def summary(self) -> dict:
        passed = sum(1 for c in self.cases if c.passed)
        return {"total": len(self.cases), "passed": passed, "failed": len(self.cases) - passed}

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def failures(self) -> list[CaseResult]:
        return [c for c in self.cases if not c.passed]

    def to_json_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "suite": self.suite,
            "parameters": self.parameters,
            "cases": [c.to_json_dict() for c in self.cases],
            "summary": self.summary,
            "runtime_ms": self.runtime_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def write_report(report: VerificationReport, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(report.to_json() + "\n", encoding="utf-8")
    return path


def write_cases_csv(report: VerificationReport, path: str | Path) -> Path:
    """Flat delimited dump of the cases, one row per case."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["group", "subgroup_generators", "label", "expected", "actual", "pass"])
        for c in report.cases:
            gens = (
                ";".join("(" + ",".join(map(str, g)) + ")" for g in c.subgroup_generators)
                if c.subgroup_generators is not None
                else ""
            )
            writer.writerow([c.group, gens, c.label or "", c.expected, c.actual, c.passed])
    return path
