"""Verification reports shared by every verifier and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, asdict


@dataclass
class Check:
    name: str
    paper_label: str
    status: str
    lhs: str = ""
    rhs: str = ""
    residual: str = "0"

    @property
    def ok(self) -> bool:
        return self.status == "pass"


@dataclass
class Report:
    suite: str
    model: str = ""
    mode: str = ""
    order: int | None = None
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def compare(self, name: str, label: str, lhs, rhs) -> Check:
        """Record ``lhs == rhs`` with the exact residual ``lhs - rhs``."""
        residual = lhs - rhs
        status = "pass" if _is_zero(residual) else "fail"
        return self.add(Check(name, label, status, str(lhs), str(rhs), str(residual)))

    def assert_zero(self, name: str, label: str, residual, lhs="", rhs="0") -> Check:
        status = "pass" if _is_zero(residual) else "fail"
        return self.add(Check(name, label, status, str(lhs), str(rhs), str(residual)))

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        return self

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "model": self.model,
            "mode": self.mode,
            "order": self.order,
            "checks": [asdict(c) for c in sorted(self.checks, key=lambda c: (c.paper_label, c.name))],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def summary(self) -> str:
        bad = len(self.failures)
        return f"{self.suite} [{self.model} {self.mode}]: {len(self.checks) - bad}/{len(self.checks)} pass"


def _is_zero(x) -> bool:
    if hasattr(x, "is_zero"):
        return x.is_zero()
    return not x
