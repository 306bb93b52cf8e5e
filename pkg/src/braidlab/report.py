from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    """Outcome of a verification sweep: one record per checked instance."""

    name: str
    records: list[dict] = field(default_factory=list)
    info: dict[str, Any] = field(default_factory=dict)

    def add(self, check: str, instance: Any, passed: bool) -> bool:
        self.records.append({"check": check, "instance": instance, "pass": bool(passed)})
        return bool(passed)

    def extend(self, other: "Report") -> None:
        self.records.extend(other.records)

    @property
    def ok(self) -> bool:
        return all(r["pass"] for r in self.records)

    @property
    def failures(self) -> list[dict]:
        return [r for r in self.records if not r["pass"]]

    def __len__(self) -> int:
        return len(self.records)

    def counts(self) -> dict[str, list[int]]:
        """``{check: [passed, total]}``."""
        out: dict[str, list[int]] = {}
        for r in self.records:
            c = out.setdefault(r["check"], [0, 0])
            c[0] += r["pass"]
            c[1] += 1
        return out

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "instances_checked": len(self.records),
            "failures": self.failures,
            "counts": self.counts(),
            "info": self.info,
        }
