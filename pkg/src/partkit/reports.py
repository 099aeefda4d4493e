"""The JSON report shared by every verification entry point."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

REPORT_KEYS = ("kind", "params", "range", "checked", "violations", "elapsed_ms")


@dataclass
class VerificationReport:
    kind: str
    params: dict[str, Any]
    range: tuple[int, int]
    checked: int = 0
    violations: list[dict[str, Any]] = field(default_factory=list)
    elapsed_ms: float = 0.0
    # subcommand payload (partitions, coefficients, per-n counts, grid cells)
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict[str, Any]:
        out = {
            "kind": self.kind,
            "params": self.params,
            "range": list(self.range),
            "checked": self.checked,
            "violations": self.violations,
            "elapsed_ms": self.elapsed_ms,
        }
        out.update(self.extra)
        return out

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "VerificationReport":
        extra = {k: v for k, v in data.items() if k not in REPORT_KEYS}
        return cls(
            kind=data["kind"],
            params=data["params"],
            range=tuple(data["range"]),
            checked=data["checked"],
            violations=data["violations"],
            elapsed_ms=data["elapsed_ms"],
            extra=extra,
        )

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))
