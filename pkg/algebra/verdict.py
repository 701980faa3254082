"""Результат проверки: да/нет, пояснение и свидетели."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Verdict:
    holds: bool
    detail: str = ""
    witnesses: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)

    def __bool__(self):
        return bool(self.holds)

    @classmethod
    def all_of(cls, checks: dict, detail: str = "") -> "Verdict":
        holds = all(bool(v) for v in checks.values())
        witnesses = []
        for name, check in checks.items():
            if isinstance(check, Verdict) and not check.holds:
                witnesses.extend(f"{name}: {w}" for w in check.witnesses)
        return cls(holds, detail, witnesses, dict(checks))

    def to_dict(self) -> dict:
        checks = {}
        for name, value in self.checks.items():
            checks[name] = value.to_dict() if isinstance(value, Verdict) else value
        return {
            "holds": bool(self.holds),
            "detail": self.detail,
            "witnesses": [str(w) for w in self.witnesses],
            "checks": checks,
        }
