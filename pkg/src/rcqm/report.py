"""Verification reports shared by every check suite."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    id: str
    anchor: str
    residual: float
    tol: float
    passed: bool | None = None

    def __post_init__(self):
        self.residual = float(self.residual)
        if self.passed is None:
            self.passed = bool(self.residual < self.tol)

    def to_dict(self) -> dict:
        return {"id": self.id, "anchor": self.anchor, "residual": self.residual,
                "tol": self.tol, "pass": self.passed}


@dataclass
class VerificationReport:
    """Named list of residual checks plus free-form errata entries.

    ``passed`` is true iff every check passes; errata never affect it.
    """

    suite: str
    checks: list[Check] = field(default_factory=list)
    errata: list[dict[str, Any]] = field(default_factory=list)
    flags: dict[str, Any] = field(default_factory=dict)

    def add(self, id: str, residual: float, tol: float, anchor: str = "",
            passed: bool | None = None) -> Check:
        c = Check(id, anchor, residual, tol, passed)
        self.checks.append(c)
        return c

    def extend(self, other: "VerificationReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.id, c.anchor, c.residual, c.tol, c.passed))
        self.errata.extend(other.errata)
        self.flags.update(other.flags)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def max_residual(self) -> float:
        return max((c.residual for c in self.checks), default=0.0)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {"suite": self.suite, "checks": [c.to_dict() for c in self.checks],
                "errata": self.errata, "pass": self.passed}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{self.suite}: {status} ({len(self.checks)} checks, "
                f"max residual {self.max_residual:.3e}, {len(self.errata)} errata)")


def merge(suite: str, reports: list[VerificationReport]) -> VerificationReport:
    out = VerificationReport(suite)
    for r in reports:
        out.extend(r, prefix=f"{r.suite}/")
    return out
