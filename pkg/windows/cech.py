"""Тонко градуированные когомологии Чеха мономиальных модулей.

В тонкой степени e (вектор показателей, у обращённых переменных может быть
отрицательным) каждое слагаемое комплекса Чеха одномерно или нулевое, так что
когомологии считаются рангами небольших матриц над QQ.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from algebra.errors import BudgetExceededError, SpecValidationError
from algebra.polynomials import WeightSystem
from config import config

logger = logging.getLogger(__name__)

MAX_FINE_DEGREES = 2_000_000


@dataclass(frozen=True)
class FineGradedModule:
    """k[x_1..x_m] с уже обращёнными переменными localized и весами weights"""

    names: tuple
    weights: WeightSystem
    localized: frozenset = frozenset()

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise SpecValidationError(f"unknown variable {name!r}") from None

    def dim(self, exponents) -> int:
        return int(all(e >= 0 for name, e in zip(self.names, exponents) if name not in self.localized))

    def coarse(self, exponents) -> tuple:
        return self.weights.degree(exponents)

    def monomial(self, exponents) -> str:
        parts = []
        for name, e in zip(self.names, exponents):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts) or "1"


def _rank(rows: list, shape: tuple) -> int:
    if not rows or not shape[0] or not shape[1]:
        return 0
    matrix = DomainMatrix([[QQ(v) for v in row] for row in rows], shape, QQ)
    return matrix.rank()


@lru_cache(maxsize=4096)
def _local_dims(size: int, negative: frozenset) -> tuple:
    """Когомологии Чеха в одной тонкой степени.

    Слагаемые: непустые sigma из range(size), содержащие negative;
    d(sigma) = sum (-1)^pos(v) (sigma + v).
    """
    levels = []
    for k in range(size):
        levels.append([s for s in itertools.combinations(range(size), k + 1) if negative <= set(s)])
    ranks = []
    for k in range(size - 1):
        source, target = levels[k], levels[k + 1]
        index = {t: j for j, t in enumerate(target)}
        rows = [[0] * len(source) for _ in target]
        for col, sigma in enumerate(source):
            for v in range(size):
                if v in sigma:
                    continue
                tau = tuple(sorted(sigma + (v,)))
                if tau in index:
                    rows[index[tau]][col] = (-1) ** tau.index(v)
        ranks.append(_rank(rows, (len(target), len(source))))
    dims = []
    for k in range(size):
        incoming = ranks[k - 1] if k >= 1 else 0
        outgoing = ranks[k] if k < size - 1 else 0
        dims.append(len(levels[k]) - incoming - outgoing)
    return tuple(dims)


def fine_cech_dims(module: FineGradedModule, inverted: tuple, exponents) -> tuple:
    """Размерности H^0..H^{s-1} в тонкой степени exponents"""
    size = len(inverted)
    if not size:
        return (module.dim(exponents),)
    positions = [module.index(name) for name in inverted]
    for k, (name, e) in enumerate(zip(module.names, exponents)):
        if e < 0 and k not in positions and name not in module.localized:
            return (0,) * size
    negative = frozenset(j for j, p in enumerate(positions)
                         if exponents[p] < 0 and module.names[p] not in module.localized)
    return _local_dims(size, negative)


@dataclass
class CechTable:
    inverted: tuple
    rows: dict = field(default_factory=dict)  # coarse degree -> {k: [exponents]}
    cap: int = 0

    def dim(self, degree, k: int) -> int:
        return len(self.rows.get(tuple(degree), {}).get(k, []))

    def degrees(self) -> list:
        return sorted(self.rows)

    def vanishes_above(self, k: int) -> bool:
        return all(not basis for row in self.rows.values() for j, basis in row.items() if j > k)

    def describe(self, module: FineGradedModule | None = None, bases: bool = True) -> dict:
        table = {}
        for degree in self.degrees():
            row = {}
            for k, basis in sorted(self.rows[degree].items()):
                entry = {"dim": len(basis)}
                if bases and module is not None:
                    entry["basis"] = [module.monomial(e) for e in basis]
                row[f"H{k}"] = entry
            table[",".join(str(c) for c in degree)] = row
        return {"inverted": list(self.inverted), "box": self.cap, "table": table}


def fine_box(module: FineGradedModule, inverted, cap: int):
    """Тонкие степени с |e_v| <= cap, отрицательные только у обращённых"""
    ranges = []
    for name in module.names:
        if name in inverted or name in module.localized:
            ranges.append(range(-cap, cap + 1))
        else:
            ranges.append(range(cap + 1))
    total = 1
    for r in ranges:
        total *= len(r)
    if total > MAX_FINE_DEGREES:
        raise BudgetExceededError("fine degrees", total, MAX_FINE_DEGREES)
    return itertools.product(*ranges)


def cech_cohomology(module: FineGradedModule, inverted, window, cap: int | None = None) -> CechTable:
    """Когомологии Чеха покрытия D(x), x из inverted, по грубым степеням из window.

    window: по интервалу (lo, hi) на каждую координату грубой степени.
    """
    inverted = tuple(inverted)
    cap = cap if cap is not None else config.MONOMIAL_CAP
    window = [tuple(w) for w in window]
    if len(window) != module.weights.dim:
        raise SpecValidationError(f"window needs {module.weights.dim} intervals, got {len(window)}")
    table = CechTable(inverted, cap=cap)
    for exponents in fine_box(module, inverted, cap):
        degree = module.coarse(exponents)
        if any(not lo <= c <= hi for c, (lo, hi) in zip(degree, window)):
            continue
        dims = fine_cech_dims(module, inverted, exponents)
        row = table.rows.setdefault(degree, {k: [] for k in range(len(dims))})
        for k, d in enumerate(dims):
            row[k].extend([exponents] * d)
    logger.debug(f"Чех по {list(inverted)}: {len(table.rows)} грубых степеней")
    return table


def same_tables(first: CechTable, second: CechTable) -> bool:
    if first.degrees() != second.degrees():
        return False
    for degree in first.degrees():
        a, b = first.rows[degree], second.rows[degree]
        if {k: sorted(v) for k, v in a.items()} != {k: sorted(v) for k, v in b.items()}:
            return False
    return True
