"""Документ RingSpec: переменные с весами, соотношения, опции запуска."""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from algebra.errors import SpecValidationError
from algebra.rings import GradedRing

NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
RESERVED = {"u", "v", "t", "w"}
OPTIONS = {"tor_bound", "homology_bound", "degree_window", "budget_steps", "budget_size",
           "monomial_cap", "twist", "charts", "monoid"}


def _check_name(name) -> str:
    if not isinstance(name, str) or not NAME.match(name):
        raise SpecValidationError(f"invalid variable name {name!r}")
    if name in RESERVED or name.endswith("_inv"):
        raise SpecValidationError(f"variable name {name!r} is reserved")
    return name


def _weight(value) -> tuple:
    if isinstance(value, bool):
        raise SpecValidationError(f"invalid weight {value!r}")
    if isinstance(value, int):
        return (value,)
    if isinstance(value, (list, tuple)) and value and all(isinstance(c, int) and not isinstance(c, bool)
                                                           for c in value):
        return tuple(value)
    raise SpecValidationError(f"invalid weight {value!r}")


@dataclass
class RingSpec:
    name: str
    variables: list                 # [(имя, вес)]
    relations: list = field(default_factory=list)
    options: dict = field(default_factory=dict)
    description: str = ""

    @classmethod
    def from_dict(cls, document: dict) -> "RingSpec":
        if not isinstance(document, dict):
            raise SpecValidationError("a ring spec must be a JSON object")
        raw = document.get("variables")
        if not raw:
            raise SpecValidationError("a ring spec needs a nonempty 'variables' list")
        variables = []
        seen = set()
        for entry in raw:
            if not isinstance(entry, dict) or "name" not in entry or "weight" not in entry:
                raise SpecValidationError(f"variable entry {entry!r} needs 'name' and 'weight'")
            name = _check_name(entry["name"])
            if name in seen:
                raise SpecValidationError(f"duplicate variable {name!r}")
            seen.add(name)
            variables.append((name, _weight(entry["weight"])))
        if len({len(w) for _, w in variables}) != 1:
            raise SpecValidationError("all weights must have the same dimension")
        relations = document.get("relations", [])
        if not isinstance(relations, list) or not all(isinstance(r, str) for r in relations):
            raise SpecValidationError("'relations' must be a list of polynomial strings")
        options = dict(document.get("options", {}))
        unknown = sorted(set(options) - OPTIONS)
        if unknown:
            raise SpecValidationError(f"unknown options {unknown}")
        return cls(document.get("name", ""), variables, list(relations), options,
                   document.get("description", ""))

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "description": self.description,
            "variables": [{"name": n, "weight": w[0] if len(w) == 1 else list(w)} for n, w in self.variables],
            "relations": list(self.relations),
            "options": dict(self.options),
        }

    @property
    def is_free(self) -> bool:
        return not self.relations

    @property
    def monoid(self):
        return self.options.get("monoid")

    def build(self) -> GradedRing:
        names = [n for n, _ in self.variables]
        weights = [w for _, w in self.variables]
        return GradedRing(names, weights, self.relations, name=self.name)


def parse_ring_spec(document) -> GradedRing:
    spec = document if isinstance(document, RingSpec) else RingSpec.from_dict(document)
    return spec.build()
