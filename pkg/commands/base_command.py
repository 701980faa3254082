import json
import logging
from dataclasses import dataclass, field

from algebra.errors import SpecValidationError
from algebra.polynomials import WeightSystem
from algebra.verdict import Verdict
from config import ComputationOptions, config
from database.models import RingSpec

logger = logging.getLogger(__name__)

SCHEMA = 1


def _plain(value):
    """Приводит описание к чистому JSON: ключи-строки, списки вместо кортежей"""
    if isinstance(value, Verdict):
        return value.to_dict()
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value, key=str) if isinstance(value, (set, frozenset)) else value
        return [_plain(v) for v in items]
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)


@dataclass
class Report:
    command: str
    ring: str
    verdicts: dict = field(default_factory=dict)
    tables: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    budget: dict = field(default_factory=dict)
    timing: dict = field(default_factory=dict)

    def add_verdict(self, name: str, verdict: Verdict):
        self.verdicts[name] = verdict.to_dict()
        if verdict.witnesses:
            self.witnesses[name] = [str(w) for w in verdict.witnesses]

    def add_table(self, name: str, table):
        self.tables[name] = _plain(table)

    @property
    def all_hold(self) -> bool:
        return all(v["holds"] for v in self.verdicts.values())

    def to_dict(self) -> dict:
        document = {
            "schema": SCHEMA,
            "command": self.command,
            "ring": self.ring,
            "verdicts": _plain(self.verdicts),
            "tables": _plain(self.tables),
            "witnesses": _plain(self.witnesses),
            "budget": _plain(self.budget),
        }
        if config.REPORT_TIMING and self.timing:
            document["timing"] = _plain(self.timing)
        return document

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        document = json.loads(text)
        if document.get("schema") != SCHEMA:
            raise SpecValidationError(f"unsupported report schema {document.get('schema')!r}")
        return cls(document["command"], document["ring"], document.get("verdicts", {}),
                   document.get("tables", {}), document.get("witnesses", {}),
                   document.get("budget", {}), document.get("timing", {}))

    def to_text(self) -> str:
        lines = [f"qflop {self.command} {self.ring}"]
        for name, verdict in sorted(self.verdicts.items()):
            mark = "✓" if verdict["holds"] else "✗"
            lines.append(f"{mark} {name}: {verdict['detail']}")
            for witness in self.witnesses.get(name, []):
                lines.append(f"    witness: {witness}")
        for name, table in sorted(self.tables.items()):
            lines.append(f"{name}: {json.dumps(table, ensure_ascii=False, sort_keys=True)}")
        if self.budget:
            lines.append(f"budget: steps {self.budget.get('steps')}/{self.budget.get('max_steps')}, "
                         f"basis {self.budget.get('peak_basis')}/{self.budget.get('max_basis')}")
        if config.REPORT_TIMING and self.timing:
            lines.append(f"timing: {self.timing.get('seconds')} s")
        return "\n".join(lines)


def _window_option(value) -> tuple:
    lo, hi = value.split(":") if isinstance(value, str) else value
    lo, hi = int(lo), int(hi)
    if lo > hi:
        raise ValueError(f"empty window {lo}:{hi}")
    return lo, hi


def options_for(spec: RingSpec, base: ComputationOptions | None = None) -> ComputationOptions:
    """Опции документа поверх config; флаги CLI накладываются позже"""
    base = base or ComputationOptions()
    raw = dict(spec.options)
    try:
        window = _window_option(raw["degree_window"]) if "degree_window" in raw else None
    except (TypeError, ValueError):
        raise SpecValidationError(f"invalid degree_window {raw['degree_window']!r}") from None
    extra = {key: raw[key] for key in ("charts", "monoid") if key in raw}
    return base.override(
        tor_bound=raw.get("tor_bound"),
        homology_bound=raw.get("homology_bound"),
        degree_window=window,
        budget_steps=raw.get("budget_steps"),
        budget_size=raw.get("budget_size"),
        monomial_cap=raw.get("monomial_cap"),
        twist=raw.get("twist"),
        extra={**base.extra, **extra},
    )


class BaseCommand:
    """Одна команда CLI: имя, описание и запуск на спецификации кольца"""

    def __init__(self, name: str, description: str):
        self.name = name
        self.description = description

    def applicable(self, spec: RingSpec) -> bool:
        """Подходит ли спецификация для команды (для self-test)"""
        return self.is_graded_by_z(spec)

    def run(self, spec: RingSpec, options: ComputationOptions) -> Report:
        raise NotImplementedError

    def new_report(self, spec: RingSpec) -> Report:
        return Report(self.name, spec.name or "<unnamed>")

    @staticmethod
    def is_graded_by_z(spec: RingSpec) -> bool:
        return len(spec.variables[0][1]) == 1

    @staticmethod
    def has_both_signs(spec: RingSpec) -> bool:
        weights = [w[0] for _, w in spec.variables if len(w) == 1]
        return any(w > 0 for w in weights) and any(w < 0 for w in weights)

    def require_z_grading(self, spec: RingSpec):
        if not self.is_graded_by_z(spec):
            raise SpecValidationError(f"{self.name} needs integer weights, {spec.name} is graded by Z^n")

    def require_free(self, spec: RingSpec):
        self.require_z_grading(spec)
        if not spec.is_free:
            raise SpecValidationError(f"{self.name} works on polynomial rings without relations")

    @staticmethod
    def weights(spec: RingSpec) -> WeightSystem:
        return WeightSystem.of([w for _, w in spec.variables])
