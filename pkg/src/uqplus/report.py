"""Verification reports: one record per check, rendered as text or JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional


@dataclass
class Report:
    check: str
    n: int
    degree_bound: Optional[int] = None
    instances: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def record(self, passed: bool, message: str) -> None:
        self.instances += 1
        if not passed:
            self.failures.append(message)

    def merge(self, other: "Report") -> "Report":
        self.instances += other.instances
        self.failures.extend(other.failures)
        return self

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "n": self.n,
            "degree_bound": self.degree_bound,
            "instances": self.instances,
            "failures": list(self.failures),
        }


def render_table(reports: Iterable[Report]) -> str:
    reports = list(reports)
    rows = [("check", "n", "degree", "instances", "failures", "status")]
    for r in reports:
        rows.append(
            (
                r.check,
                str(r.n),
                "-" if r.degree_bound is None else str(r.degree_bound),
                str(r.instances),
                str(len(r.failures)),
                "PASS" if r.ok else "FAIL",
            )
        )
    widths = [max(len(row[k]) for row in rows) for k in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    for r in reports:
        for msg in r.failures:
            lines.append(f"  [{r.check}] {msg}")
    return "\n".join(lines)


def render_json(reports: Iterable[Report]) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True)
