"""Named inequality checks and JSON report documents."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Optional

SCHEMA = "hyperspec/1"

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


def _clean(v):
    if isinstance(v, float) and not math.isfinite(v):
        return str(v)
    if hasattr(v, "tolist"):
        return _clean(v.tolist())
    if isinstance(v, (list, tuple)):
        return [_clean(a) for a in v]
    if isinstance(v, dict):
        return {str(a): _clean(b) for a, b in v.items()}
    return v


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    lhs: Any = None
    rhs: Any = None
    tolerance: Optional[float] = None
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "status": self.status,
            "lhs": _clean(self.lhs),
            "rhs": _clean(self.rhs),
            "tolerance": self.tolerance,
        }
        if self.note:
            d["note"] = self.note
        return d

    def line(self) -> str:
        s = f"{self.status} {self.name}"
        if self.lhs is not None and self.rhs is not None:
            s += f": {self.lhs!r} vs {self.rhs!r}"
        if self.note:
            s += f" ({self.note})"
        return s


def check_le(name, lhs, rhs, tol=0.0, note="") -> Check:
    return Check(name, PASS if lhs <= rhs + tol else FAIL, float(lhs), float(rhs), tol, note)


def check_lt(name, lhs, rhs, slack=0.0, note="") -> Check:
    """``lhs < rhs - slack``."""
    return Check(name, PASS if lhs < rhs - slack else FAIL, float(lhs), float(rhs), slack, note)


def check_close(name, lhs, rhs, tol, note="") -> Check:
    return Check(name, PASS if abs(lhs - rhs) <= tol else FAIL, float(lhs), float(rhs), tol, note)


def check_true(name, cond, note="") -> Check:
    return Check(name, PASS if cond else FAIL, note=note)


def skipped(name, note) -> Check:
    return Check(name, SKIP, note=note)


@dataclass
class Report:
    """Result of one experiment: the checks plus raw data for plotting."""

    experiment: str
    instance: str = ""
    checks: list[Check] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, *checks: Check) -> None:
        self.checks.extend(checks)

    def to_dict(self) -> dict:
        return {
            "experiment": self.experiment,
            "instance_hgf": self.instance,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "data": _clean(self.data),
        }

    def summary_lines(self) -> list[str]:
        return [c.line() for c in self.checks]


def dumps(doc) -> str:
    return json.dumps(_clean(doc), indent=2, sort_keys=False) + "\n"
