"""Подмодули свободных модулей, сизигии, комплексы и свободные резольвенты.

Вектор это кортеж многочленов кольца ring.poly_ring; соотношения кольца
добавляются к каждому вычислению как h*e_i.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from algebra.errors import ConsistencyError, VariableMismatchError
from algebra.groebner import groebner_vectors, reduce_vector
from algebra.polynomials import ANY_DEGREE
from algebra.rings import GradedRing, RingMap

logger = logging.getLogger(__name__)


def _unit(ring: GradedRing, rank: int, k: int, value=None) -> tuple:
    value = ring.one if value is None else value
    return tuple(value if i == k else ring.zero for i in range(rank))


def _relation_vectors(ring: GradedRing, rank: int) -> list:
    vectors = []
    for h in ring.ideal.groebner_basis() if ring.relations else ():
        for i in range(rank):
            vectors.append(_unit(ring, rank, i, h))
    return vectors


def vector_degree(ring: GradedRing, vector, shifts):
    """Степень однородного вектора с учётом сдвигов базиса, иначе None"""
    degree = ANY_DEGREE
    for comp, shift in zip(vector, shifts):
        if not comp:
            continue
        d = ring.degree(comp)
        if d is None or shift is None:
            return None
        d = tuple(a + b for a, b in zip(d, shift))
        if degree is ANY_DEGREE:
            degree = d
        elif degree != d:
            return None
    return degree


class SubmodulePresentation:
    """Подмодуль A^rank, порождённый generators"""

    def __init__(self, ring: GradedRing, rank: int, generators: Sequence = (), shifts=None):
        self.ring = ring
        self.rank = rank
        gens = []
        for g in generators:
            g = tuple(ring.element(c) for c in g)
            if len(g) != rank:
                raise VariableMismatchError(f"vector of length {len(g)} in a free module of rank {rank}")
            if any(g):
                gens.append(g)
        self.generators = tuple(gens)
        zero = (0,) * ring.weights.dim
        self.shifts = tuple(shifts) if shifts is not None else tuple(zero for _ in range(rank))
        self._basis = None

    def __repr__(self):
        return f"SubmodulePresentation(rank={self.rank}, {self.format()})"

    def groebner_basis(self) -> list:
        if self._basis is None:
            self._basis = groebner_vectors(list(self.generators) + _relation_vectors(self.ring, self.rank),
                                           self.rank)
        return self._basis

    def reduce(self, vector) -> tuple:
        vector = tuple(self.ring.element(c) for c in vector)
        if not self.rank:
            return vector
        return reduce_vector(vector, self.groebner_basis())

    def contains(self, vector) -> bool:
        return not any(self.reduce(vector))

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(c) for g in self.generators for c in g)

    def format(self) -> list:
        return [[self.ring.format(c) for c in g] for g in self.generators]

    def degrees(self) -> list:
        return [vector_degree(self.ring, g, self.shifts) for g in self.generators]


def module_groebner(module: SubmodulePresentation) -> SubmodulePresentation:
    """Редуцированный базис (position over term); векторы из I*F отброшены"""
    basis = module.groebner_basis()
    kept = [v for v in basis if not all(module.ring.is_zero(c) for c in v)]
    result = SubmodulePresentation(module.ring, module.rank, kept, module.shifts)
    result._basis = basis
    return result


def minimize_generators(ring: GradedRing, rank: int, vectors: Sequence, shifts=None) -> list:
    """Жадно выбрасывает векторы, лежащие в подмодуле предыдущих"""
    def weight(v):
        return (max((sum(m) for c in v for m in c.itermonoms()), default=0), len([c for c in v if c]))

    kept = []
    for v in sorted((tuple(v) for v in vectors), key=weight):
        if all(ring.is_zero(c) for c in v):
            continue
        if kept and SubmodulePresentation(ring, rank, kept, shifts).contains(v):
            continue
        kept.append(v)
    return kept


def syzygies(ring: GradedRing, generators: Sequence, shifts=None) -> SubmodulePresentation:
    """Первый модуль сизигий: векторы (g_j | e_j) в порядке POT, g-часть впереди"""
    gens = [tuple(ring.element(c) for c in g) for g in generators]
    m = len(gens)
    if m == 0:
        return SubmodulePresentation(ring, 0)
    r = len(gens[0])
    vectors = [g + _unit(ring, m, j) for j, g in enumerate(gens)]
    vectors += _relation_vectors(ring, r + m)
    basis = groebner_vectors(vectors, r + m)
    candidates = []
    for v in basis:
        if any(v[:r]):
            continue
        s = tuple(ring.reduce(c) for c in v[r:])
        if any(s):
            candidates.append(s)
    if shifts is None:
        shifts = [(0,) * ring.weights.dim] * r
    gen_shifts = [vector_degree(ring, g, shifts) for g in gens]
    gen_shifts = [None if d is ANY_DEGREE else d for d in gen_shifts]
    minimal = minimize_generators(ring, m, candidates, gen_shifts)
    logger.debug(f"сизигии: {m} образующих, {len(candidates)} кандидатов, {len(minimal)} минимальных")
    for s in minimal:
        total = [ring.zero] * r
        for coeff, g in zip(s, gens):
            for i in range(r):
                total[i] += coeff * g[i]
        if not all(ring.is_zero(c) for c in total):
            raise ConsistencyError(f"syzygy {s} does not annihilate the generators")
    return SubmodulePresentation(ring, m, minimal, gen_shifts)


# ---------- Комплексы ----------

class ChainComplex:
    """F_hi -> ... -> F_lo над кольцом ring.

    differentials[i] это список столбцов: образы базисных векторов F_i в F_{i-1}.
    """

    def __init__(self, ring: GradedRing, ranks: dict, differentials: dict, shifts: dict | None = None,
                 name: str = ""):
        self.ring = ring
        self.name = name
        self.ranks = {i: r for i, r in ranks.items() if r}
        self.differentials = {i: [tuple(ring.element(c) for c in col) for col in cols]
                              for i, cols in differentials.items()}
        self.shifts = shifts or {}

    def __repr__(self):
        return f"ChainComplex({self.name}, ranks={self.ranks})"

    @property
    def lo(self) -> int:
        return min(self.ranks, default=0)

    @property
    def hi(self) -> int:
        return max(self.ranks, default=0)

    def rank(self, i: int) -> int:
        return self.ranks.get(i, 0)

    def columns(self, i: int) -> list:
        if not self.rank(i) or not self.rank(i - 1):
            return []
        return self.differentials.get(i, [])

    def apply(self, i: int, vector) -> tuple:
        total = [self.ring.zero] * self.rank(i - 1)
        for coeff, col in zip(vector, self.columns(i)):
            if coeff:
                for k, c in enumerate(col):
                    total[k] += coeff * c
        return tuple(total)

    def check_d_squared(self) -> None:
        for i in sorted(self.ranks):
            for col in self.columns(i):
                image = self.apply(i - 1, col)
                if not all(self.ring.is_zero(c) for c in image):
                    raise ConsistencyError(f"d∘d != 0 at {i} in complex {self.name}")

    def base_change(self, f: RingMap, name: str = "") -> "ChainComplex":
        """Применяет гомоморфизм ко всем элементам дифференциалов"""
        differentials = {i: [tuple(f(c) for c in col) for col in cols]
                         for i, cols in self.differentials.items()}
        return ChainComplex(f.target, dict(self.ranks), differentials, name=name or self.name)

    def describe(self) -> dict:
        return {"ranks": {str(i): r for i, r in sorted(self.ranks.items())}}


@dataclass
class HomologyModule:
    """ker d_i / im d_{i+1} внутри F_i"""

    index: int
    rank: int
    cycles: SubmodulePresentation
    boundaries: SubmodulePresentation
    survivors: list = field(default_factory=list)

    @property
    def is_zero(self) -> bool:
        return not self.survivors

    def describe(self) -> dict:
        ring = self.cycles.ring
        return {
            "vanishes": self.is_zero,
            "generators": len(self.survivors),
            "classes": [[ring.format(c) for c in v] for v in self.survivors],
            "relations": self.boundaries.format(),
        }


def homology(complex_: ChainComplex, i: int) -> HomologyModule:
    ring = complex_.ring
    rank = complex_.rank(i)
    if not rank:
        empty = SubmodulePresentation(ring, 0)
        return HomologyModule(i, 0, empty, empty)
    shifts = complex_.shifts.get(i)
    columns = complex_.columns(i)
    if columns:
        cycles = syzygies(ring, columns, complex_.shifts.get(i - 1))
    else:
        cycles = SubmodulePresentation(ring, rank, [_unit(ring, rank, k) for k in range(rank)], shifts)
    boundaries = SubmodulePresentation(ring, rank, complex_.columns(i + 1), shifts)
    survivors = []
    for z in cycles.generators:
        span = SubmodulePresentation(ring, rank, list(boundaries.generators) + survivors, shifts)
        if not span.contains(z):
            survivors.append(z)
    logger.debug(f"H_{i}({complex_.name}): {len(survivors)} классов")
    return HomologyModule(i, rank, cycles, boundaries, survivors)


def free_resolution(module: SubmodulePresentation, length: int) -> ChainComplex:
    """Резольвента коядра F_0/module до F_length"""
    ring = module.ring
    ranks = {0: module.rank}
    differentials = {}
    shifts = {0: list(module.shifts)}
    current = minimize_generators(ring, module.rank, module.generators, module.shifts)
    for i in range(1, length + 1):
        if not current:
            break
        ranks[i] = len(current)
        differentials[i] = current
        degrees = [vector_degree(ring, v, shifts[i - 1]) for v in current]
        shifts[i] = [None if d is ANY_DEGREE else d for d in degrees]
        if i < length:
            current = list(syzygies(ring, current, shifts[i - 1]).generators)
    resolution = ChainComplex(ring, ranks, differentials, shifts, name="resolution")
    logger.debug(f"резольвента: ранги {resolution.ranks}")
    return resolution
