"""Named pass/fail checks with witness points, shared by the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: float | None = None
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        msg = f"[{status}] {self.name}"
        if not self.passed and self.witness is not None:
            msg += f" (witness {self.witness:.6g})"
        if self.detail:
            msg += f": {self.detail}"
        return msg


@dataclass
class ValidationReport:
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: float | None = None, detail: str = ""):
        self.checks.append(CheckResult(name, bool(passed), witness, detail))

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def extend(self, other: "ValidationReport"):
        self.checks.extend(other.checks)

    def summary(self) -> str:
        return "\n".join(c.line() for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "all_passed": self.all_passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "witness": c.witness, "detail": c.detail}
                for c in self.checks
            ],
        }
