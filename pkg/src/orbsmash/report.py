"""Structured pass/fail reporting for axiom and equation checks."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    """One verified assertion. `locus` pinpoints the failure site when not ok."""

    name: str
    ok: bool
    locus: str = ""
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "locus": self.locus, "detail": self.detail}


class ValidationFailed(Exception):
    """Raised when a report that must pass does not."""

    def __init__(self, report: "VerificationReport"):
        self.report = report
        lines = [f"{report.subject}: {len(report.failures())} check(s) failed"]
        for c in report.failures()[:8]:
            lines.append(f"  {c.name} at [{c.locus}] {c.detail}".rstrip())
        super().__init__("\n".join(lines))


@dataclass
class VerificationReport:
    """Outcome of validating one structure or one claimed equation."""

    subject: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, locus: str = "", detail: str = "") -> None:
        self.checks.append(Check(name, bool(ok), locus, detail))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def extend(self, other: "VerificationReport", prefix: str = "") -> None:
        for c in other.checks:
            name = f"{prefix}{c.name}" if prefix else c.name
            self.checks.append(Check(name, c.ok, c.locus, c.detail))

    def require(self) -> "VerificationReport":
        if not self.passed:
            raise ValidationFailed(self)
        return self

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }
