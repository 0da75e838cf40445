"""Machine-readable verification reports.

Every verifier returns a Report: a flat list of named checks with residuals
and optional witness locations.  Reports aggregate deterministically; the CLI
serialises them as JSON with fixed float formatting.
"""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
INCONCLUSIVE = "inconclusive"


@dataclass
class Check:
    name: str
    status: str
    residual: float | None = None
    witness: str | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.residual is not None:
            out["residual"] = float(self.residual)
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    title: str
    tolerance: float
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, residual: float, witness: str | None = None) -> Check:
        status = PASS if residual <= self.tolerance else FAIL
        check = Check(name, status, residual, witness)
        self.checks.append(check)
        return check

    def add_status(self, name: str, status: str, witness: str | None = None) -> Check:
        check = Check(name, status, None, witness)
        self.checks.append(check)
        return check

    def skip(self, name: str, witness: str | None = None) -> Check:
        return self.add_status(name, SKIPPED, witness)

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(
                Check(prefix + c.name, c.status, c.residual, c.witness)
            )

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    @property
    def inconclusive(self) -> bool:
        return any(c.status == INCONCLUSIVE for c in self.checks)

    @property
    def max_residual(self) -> float:
        vals = [c.residual for c in self.checks if c.residual is not None]
        return max(vals) if vals else 0.0

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "tolerance": self.tolerance,
            "overall": "pass" if self.passed else "fail",
            "checks": [c.to_json() for c in self.checks],
        }

    def require(self) -> "Report":
        """Raise if any check failed; convenience for pipelines."""
        if not self.passed:
            bad = self.failures()[0]
            raise AssertionError(f"{self.title}: check '{bad.name}' failed "
                                 f"(residual={bad.residual}, witness={bad.witness})")
        return self
