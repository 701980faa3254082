"""Алгоритм Бухбергера для идеалов и подмодулей свободных модулей.

Элемент свободного модуля это кортеж многочленов одного sympy-кольца.
Порядок на термах модуля: position over term, меньший индекс позиции
старше. Идеалы считаются как подмодули ранга 1.
"""
from __future__ import annotations

import contextvars
import itertools
import logging
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from sympy.polys.monomials import monomial_div, monomial_divides, monomial_lcm

from algebra.errors import BudgetExceededError
from algebra.polynomials import MonomialOrder, PolynomialRing, block_order, transport
from config import config

logger = logging.getLogger(__name__)


@dataclass
class Budget:
    max_steps: int = config.BUDGET_STEPS
    max_size: int = config.BUDGET_SIZE
    steps: int = 0
    peak_size: int = 0

    def step(self, count: int = 1):
        self.steps += count
        if self.steps > self.max_steps:
            raise BudgetExceededError("reduction steps", self.steps, self.max_steps)

    def size(self, n: int):
        self.peak_size = max(self.peak_size, n)
        if n > self.max_size:
            raise BudgetExceededError("basis size", n, self.max_size)

    def usage(self) -> dict:
        return {"steps": self.steps, "max_steps": self.max_steps,
                "peak_basis": self.peak_size, "max_basis": self.max_size}


_current_budget: contextvars.ContextVar = contextvars.ContextVar("qflop_budget", default=None)


@contextmanager
def budget_scope(budget: Budget):
    """Все вычисления внутри блока расходуют один общий бюджет"""
    token = _current_budget.set(budget)
    try:
        yield budget
    finally:
        _current_budget.reset(token)


def current_budget() -> Budget:
    budget = _current_budget.get()
    return budget if budget is not None else Budget()


# ---------- Векторы ----------

def _lead(vector) -> tuple | None:
    for pos, comp in enumerate(vector):
        if comp:
            monom = comp.leading_expv()
            return pos, monom, comp[monom]
    return None


def _is_zero(vector) -> bool:
    return not any(vector)


def _scale_shift(vector, monom, coeff):
    return tuple(comp.mul_term((monom, coeff)) if comp else comp for comp in vector)


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _monic(vector):
    lead = _lead(vector)
    if lead is None:
        return vector
    c = lead[2]
    return tuple(comp.quo_ground(c) if comp else comp for comp in vector)


class _Basis:
    """Текущий базис с индексом по позициям старших термов"""

    def __init__(self):
        self.vectors = []
        self.leads = []

    def add(self, vector):
        self.vectors.append(vector)
        self.leads.append(_lead(vector))
        return len(self.vectors) - 1

    def divisor(self, pos, monom, skip=None):
        for k, (gpos, gm, _) in enumerate(self.leads):
            if k != skip and gpos == pos and monomial_divides(gm, monom):
                return k
        return None


def _reduce(vector, basis: _Basis, budget: Budget, skip=None):
    """Полная редукция: ни один терм остатка не делится на старшие термы"""
    ring = None
    for comp in vector:
        ring = comp.ring
        break
    remainder = [ring.zero for _ in vector]
    current = list(vector)
    while True:
        lead = _lead(current)
        if lead is None:
            break
        pos, monom, coeff = lead
        k = basis.divisor(pos, monom, skip)
        if k is None:
            term = ring.term_new(monom, coeff)
            current[pos] = current[pos] - term
            remainder[pos] = remainder[pos] + term
            continue
        _, gm, gc = basis.leads[k]
        factor = monomial_div(monom, gm)
        current = list(_sub(current, _scale_shift(basis.vectors[k], factor, coeff / gc)))
        budget.step()
    return tuple(remainder)


def _pair_key(basis: _Basis, pair):
    i, j = pair
    pos, mi, _ = basis.leads[i]
    _, mj, _ = basis.leads[j]
    lcm = monomial_lcm(mi, mj)
    return (pos, sum(lcm), lcm, i, j)


def groebner_vectors(vectors: Iterable, rank: int, budget: Budget | None = None) -> list:
    """Редуцированный базис Грёбнера подмодуля, порождённого vectors"""
    budget = budget or current_budget()
    vectors = [tuple(v) for v in vectors if not _is_zero(v)]
    if not vectors:
        return []
    ring = next(comp.ring for comp in vectors[0])
    is_ideal = rank == 1
    basis = _Basis()
    pairs = set()

    def insert(vector):
        k = basis.add(_monic(vector))
        pos = basis.leads[k][0]
        for i in range(k):
            if basis.leads[i][0] == pos:
                pairs.add((i, k))
        budget.size(len(basis.vectors))

    for vector in vectors:
        reduced = _reduce(vector, basis, budget)
        if not _is_zero(reduced):
            insert(reduced)

    while pairs:
        pair = min(pairs, key=lambda p: _pair_key(basis, p))
        pairs.discard(pair)
        i, j = pair
        pos, mi, _ = basis.leads[i]
        _, mj, _ = basis.leads[j]
        lcm = monomial_lcm(mi, mj)
        if is_ideal and all(not (a and b) for a, b in zip(mi, mj)):
            continue
        if _chain_criterion(basis, pairs, i, j, pos, lcm):
            continue
        spoly = _sub(_scale_shift(basis.vectors[i], monomial_div(lcm, mi), ring.domain.one),
                     _scale_shift(basis.vectors[j], monomial_div(lcm, mj), ring.domain.one))
        budget.step()
        reduced = _reduce(spoly, basis, budget)
        if not _is_zero(reduced):
            insert(reduced)

    return _interreduce(basis, ring, budget)


def _chain_criterion(basis, pairs, i, j, pos, lcm) -> bool:
    for k, (kpos, km, _) in enumerate(basis.leads):
        if k in (i, j) or kpos != pos or not monomial_divides(km, lcm):
            continue
        if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
            return True
    return False


def _interreduce(basis: _Basis, ring, budget: Budget) -> list:
    keep = []
    for k, (pos, monom, _) in enumerate(basis.leads):
        redundant = False
        for other, (opos, om, _) in enumerate(basis.leads):
            if other == k or opos != pos or not monomial_divides(om, monom):
                continue
            if om != monom or other < k:
                redundant = True
                break
        if not redundant:
            keep.append(basis.vectors[k])
    minimal = _Basis()
    for vector in keep:
        minimal.add(vector)
    reduced = []
    for k, vector in enumerate(minimal.vectors):
        rest = _reduce(_tail(vector, minimal.leads[k]), minimal, budget, skip=k)
        head = list(rest)
        pos, monom, coeff = minimal.leads[k]
        head[pos] = head[pos] + ring.term_new(monom, coeff)
        reduced.append(_monic(tuple(head)))
    order = ring.order
    reduced.sort(key=lambda v: _sort_key(v, order), reverse=True)
    return reduced


def _tail(vector, lead):
    pos, monom, coeff = lead
    head = list(vector)
    head[pos] = head[pos] - head[pos].ring.term_new(monom, coeff)
    return tuple(head)


def _sort_key(vector, order):
    pos, monom, _ = _lead(vector)
    return (-pos, order(monom))


def reduce_vector(vector, basis_vectors: Sequence, budget: Budget | None = None):
    basis = _Basis()
    for v in basis_vectors:
        basis.add(v)
    return _reduce(tuple(vector), basis, budget or current_budget())


# ---------- Идеалы ----------

class Ideal:
    """Идеал кольца многочленов; редуцированный базис кешируется"""

    def __init__(self, ring: PolynomialRing, generators: Iterable = ()):
        self.ring = ring
        self.generators = tuple(ring.convert(g) for g in generators if g)
        self._basis = None

    def __repr__(self):
        return f"Ideal({self.format()})"

    def groebner_basis(self) -> tuple:
        if self._basis is None:
            vectors = groebner_vectors([(g,) for g in self.generators], 1)
            self._basis = tuple(v[0] for v in vectors)
            logger.debug(f"базис Грёбнера: {len(self.generators)} -> {len(self._basis)} в {self.ring}")
        return self._basis

    def normal_form(self, f):
        f = self.ring.convert(f)
        if not self.generators or not f:
            return f
        return reduce_vector((f,), [(g,) for g in self.groebner_basis()])[0]

    def contains(self, f) -> bool:
        return not self.normal_form(f)

    def is_zero(self) -> bool:
        return not self.groebner_basis()

    def is_unit(self) -> bool:
        return any(g.is_ground for g in self.groebner_basis())

    def same_as(self, other: "Ideal") -> bool:
        other_basis = tuple(self.ring.convert(g) for g in other.groebner_basis())
        return self.groebner_basis() == other_basis

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def extended(self, more: Iterable) -> "Ideal":
        return Ideal(self.ring, list(self.generators) + list(more))

    def format(self) -> list:
        return [self.ring.format(g) for g in self.groebner_basis()]

    def leading_monomials(self) -> list:
        return [g.leading_expv() for g in self.groebner_basis()]


def buchberger(ideal: Ideal) -> Ideal:
    result = Ideal(ideal.ring, ideal.groebner_basis())
    result._basis = ideal.groebner_basis()
    return result


def normal_form(f, ideal: Ideal):
    return ideal.normal_form(f)


def elimination_ideal(ideal: Ideal, keep: Sequence[str]) -> Ideal:
    """I ∩ k[keep] через блочный порядок с исключаемыми переменными впереди"""
    keep = [name for name in ideal.ring.names if name in set(keep)]
    drop = [name for name in ideal.ring.names if name not in set(keep)]
    work = PolynomialRing(drop + keep, block_order(len(drop), len(keep)))
    moved = [work.convert(g, ideal.ring) for g in ideal.generators]
    basis = Ideal(work, moved).groebner_basis()
    target = PolynomialRing(keep, MonomialOrder("grevlex"))
    positions = [None] * len(drop) + list(range(len(keep)))
    kept = [transport(g, target, positions) for g in basis
            if all(not any(m[:len(drop)]) for m in g.itermonoms())]
    logger.debug(f"исключение {drop}: осталось {len(kept)} образующих")
    return Ideal(target, kept)


# ---------- Стандартные мономы ----------

def standard_monomials(ideal: Ideal, weights, degree: tuple, cap: int) -> list:
    """Мономы степени degree с суммой показателей <= cap, не делящиеся на старшие мономы"""
    leads = ideal.leading_monomials() if ideal.generators else []
    result = []
    n = ideal.ring.ngens
    for exps in _bounded_exponents(n, cap):
        if weights.degree(exps) != tuple(degree):
            continue
        if any(monomial_divides(lead, exps) for lead in leads):
            continue
        result.append(exps)
    return result


def _bounded_exponents(n: int, cap: int):
    for total in range(cap + 1):
        for combo in itertools.combinations_with_replacement(range(n), total):
            exps = [0] * n
            for k in combo:
                exps[k] += 1
            yield tuple(exps)
