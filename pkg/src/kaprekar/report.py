"""Shared report types for the verification layers.

Severities:
  info      - informational, including documented data repairs
  mismatch  - computed result contradicts an expected value
  gap       - something expected to be covered is not covered

A finding tagged "documented-repair" records a known transcription defect
in the bundled reference data together with the corrected value. Default
verification treats those as informational; strict mode counts them as
failures so the as-given data can be audited.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

INFO = "info"
MISMATCH = "mismatch"
GAP = "gap"

DOCUMENTED_REPAIR = "documented-repair"


@dataclass(frozen=True, slots=True)
class Finding:
    severity: str
    subject: str
    expected: Any
    computed: Any
    detail: str = ""
    tag: str = ""

    def to_json(self) -> dict[str, Any]:
        out = {
            "severity": self.severity,
            "subject": self.subject,
            "expected": _jsonable(self.expected),
            "computed": _jsonable(self.computed),
        }
        if self.detail:
            out["detail"] = self.detail
        if self.tag:
            out["tag"] = self.tag
        return out


def _jsonable(value: Any) -> Any:
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return str(value)


@dataclass(slots=True)
class DiscrepancyReport:
    """An ordered collection of findings plus derived counts."""

    findings: list[Finding] = field(default_factory=list)

    def add(self, severity: str, subject: str, expected: Any, computed: Any,
            detail: str = "", tag: str = "") -> None:
        self.findings.append(Finding(severity, subject, expected, computed, detail, tag))

    def extend(self, other: "DiscrepancyReport") -> None:
        self.findings.extend(other.findings)

    def count(self, severity: str, strict: bool = False) -> int:
        n = 0
        for f in self.findings:
            sev = f.severity
            if strict and sev == INFO and f.tag == DOCUMENTED_REPAIR:
                sev = MISMATCH
            if sev == severity:
                n += 1
        return n

    def ok(self, strict: bool = False) -> bool:
        return self.count(MISMATCH, strict) == 0 and self.count(GAP, strict) == 0

    def summary(self, strict: bool = False) -> dict[str, Any]:
        return {
            "info": self.count(INFO, strict),
            "mismatch": self.count(MISMATCH, strict),
            "gap": self.count(GAP, strict),
            "ok": self.ok(strict),
        }

    def to_json(self, strict: bool = False) -> dict[str, Any]:
        return {
            "findings": [f.to_json() for f in self.findings],
            "summary": self.summary(strict),
        }
