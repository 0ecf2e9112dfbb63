"""Small result record shared by all verification routines."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    name: str
    failures: list = field(default_factory=list)
    detail: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, witness) -> None:
        self.failures.append(witness)

    def merge(self, other: "CheckReport", prefix: str = "") -> None:
        for w in other.failures:
            self.failures.append({"check": prefix or other.name, **w} if isinstance(w, dict) else w)

    def __bool__(self):
        return self.ok

    def as_dict(self):
        return {"name": self.name, "ok": self.ok, "failures": self.failures, "detail": self.detail}
