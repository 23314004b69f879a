"""Machine-readable certificates produced by the checkers."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

VERDICTS = ("pass", "fail", "report")


@dataclass
class CheckReport:
    check: str
    params: dict[str, Any]
    verdict: str
    witnesses: list[dict[str, Any]] = field(default_factory=list)
    narrative: str = ""

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"verdict must be one of {VERDICTS}, got {self.verdict!r}")

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    @property
    def failed(self) -> bool:
        return self.verdict == "fail"

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "params": self.params,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "narrative": self.narrative,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "CheckReport":
        return cls(d["check"], d["params"], d["verdict"], d["witnesses"], d["narrative"])


def witness(m=None, m_prime=None, subset=()) -> dict[str, Any]:
    return {"m": m, "m_prime": m_prime, "subset": list(subset)}
