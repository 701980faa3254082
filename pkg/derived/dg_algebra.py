"""Кошулевы dg-алгебры A = B<e_1..e_c>, d(e_i) = f_i, над градуированным кольцом B.

Элемент хранится как словарь: упорядоченный кортеж индексов нечётных
образующих -> многочлен B. Знаки: e_i e_j = -e_j e_i,
d(ab) = d(a) b + (-1)^|a| a d(b).
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

from algebra.errors import ConsistencyError, InhomogeneousRelationError, RegularityError, SpecValidationError
from algebra.modules import homology
from algebra.polynomials import ANY_DEGREE, term_degrees
from algebra.rings import GradedRing, RingMap
from algebra.verdict import Verdict
from homological.koszul import koszul_complex

logger = logging.getLogger(__name__)


def _merge_sign(left: tuple, right: tuple):
    """Знак перестановки, сортирующей left + right; None при совпадении индексов"""
    if set(left) & set(right):
        return None
    inversions = sum(1 for a in left for b in right if a > b)
    return -1 if inversions % 2 else 1


class DGAlgebra:
    def __init__(self, base: GradedRing, odd_names=(), differential=(), odd_weights=None, name: str = ""):
        self.base = base
        self.name = name
        self.odd_names = tuple(odd_names)
        self.differential = tuple(base.element(f) for f in differential)
        if len(self.odd_names) != len(self.differential):
            raise SpecValidationError(f"{len(self.odd_names)} odd generators but "
                                      f"{len(self.differential)} differential values")
        weights = []
        for k, f in enumerate(self.differential):
            degree = base.degree(f)
            if degree is None:
                raise InhomogeneousRelationError(base.format(f), term_degrees(f, base.weights))
            if odd_weights is not None:
                weights.append(tuple(odd_weights[k]))
            else:
                weights.append((0,) * base.weights.dim if degree is ANY_DEGREE else degree)
        self.odd_weights = tuple(weights)

    def __repr__(self):
        return f"DGAlgebra({self.name}: {list(self.base.names)}<{', '.join(self.odd_names)}>)"

    @property
    def length(self) -> int:
        return len(self.odd_names)

    # ---------- элементы ----------

    def element(self, value=None) -> dict:
        if value is None:
            return {}
        if isinstance(value, dict):
            return {tuple(k): self.base.element(v) for k, v in value.items() if v}
        f = self.base.element(value)
        return {(): f} if f else {}

    def odd(self, name: str) -> dict:
        return {(self.odd_names.index(name),): self.base.one}

    def homological_degree(self, a: dict) -> int | None:
        degrees = {len(k) for k, v in a.items() if v}
        if len(degrees) > 1:
            return None
        return degrees.pop() if degrees else 0

    def add(self, a: dict, b: dict) -> dict:
        result = dict(a)
        for k, v in b.items():
            result[k] = result.get(k, self.base.zero) + v
        return {k: v for k, v in result.items() if v}

    def scale(self, a: dict, f) -> dict:
        f = self.base.element(f)
        return {k: v * f for k, v in a.items() if v * f}

    def multiply(self, a: dict, b: dict) -> dict:
        result = {}
        for ka, va in a.items():
            for kb, vb in b.items():
                sign = _merge_sign(ka, kb)
                if sign is None:
                    continue
                key = tuple(sorted(ka + kb))
                result[key] = result.get(key, self.base.zero) + sign * va * vb
        return {k: v for k, v in result.items() if v}

    def d(self, a: dict) -> dict:
        result = {}
        for subset, coeff in a.items():
            for j, s in enumerate(subset):
                face = subset[:j] + subset[j + 1:]
                term = coeff * self.differential[s]
                result[face] = result.get(face, self.base.zero) + (term if j % 2 == 0 else -term)
        return {k: v for k, v in result.items() if v}

    def reduce(self, a: dict) -> dict:
        reduced = {k: self.base.reduce(v) for k, v in a.items()}
        return {k: v for k, v in reduced.items() if v}

    def is_zero(self, a: dict) -> bool:
        return not self.reduce(a)

    def weight(self, a: dict):
        """Вес однородного элемента или None"""
        found = set()
        for subset, coeff in a.items():
            degree = self.base.degree(coeff)
            if degree is None:
                return None
            extra = [self.odd_weights[s] for s in subset]
            if degree is ANY_DEGREE:
                continue
            found.add(tuple(c + sum(w[t] for w in extra) for t, c in enumerate(degree)))
        return found.pop() if len(found) == 1 else (None if found else ANY_DEGREE)

    def format(self, a: dict) -> str:
        if not a:
            return "0"
        parts = []
        for subset, coeff in sorted(a.items()):
            odd = "*".join(self.odd_names[s] for s in subset)
            text = self.base.format(coeff)
            if not odd:
                parts.append(text)
            elif text == "1":
                parts.append(odd)
            else:
                parts.append(f"({text})*{odd}")
        return " + ".join(parts)

    # ---------- проверки ----------

    def check_d_squared(self) -> None:
        for size in range(2, self.length + 1):
            for subset in itertools.combinations(range(self.length), size):
                monomial = {subset: self.base.one}
                if not self.is_zero(self.d(self.d(monomial))):
                    raise ConsistencyError(f"d∘d != 0 on {self.format(monomial)} in {self.name}")

    def check_weights(self) -> Verdict:
        bad = []
        for k, f in enumerate(self.differential):
            degree = self.base.degree(f)
            if degree is not ANY_DEGREE and tuple(degree) != self.odd_weights[k]:
                bad.append(f"{self.odd_names[k]}: {list(self.odd_weights[k])} vs d = {list(degree)}")
        return Verdict(not bad, "d preserves weights", bad)

    def check_leibniz(self, a: dict, b: dict) -> bool:
        degree = self.homological_degree(a)
        left = self.d(self.multiply(a, b))
        sign = -1 if degree % 2 else 1
        right = self.add(self.multiply(self.d(a), b), self.scale(self.multiply(a, self.d(b)), sign))
        return self.is_zero(self.add(left, self.scale(right, -1)))

    def as_chain_complex(self):
        return koszul_complex(self.base, self.differential, name=self.name or "dg")

    def describe(self) -> dict:
        return {
            "base": self.base.describe(),
            "odd": [{"name": n, "weight": list(w), "d": self.base.format(f)}
                    for n, w, f in zip(self.odd_names, self.odd_weights, self.differential)],
        }


@dataclass
class DGMap:
    """Отображение dg-алгебр: base_map на степени ноль и образы нечётных образующих"""

    source: DGAlgebra
    target: DGAlgebra
    base_map: RingMap
    odd_images: list = field(default_factory=list)

    def __call__(self, a: dict) -> dict:
        result = {}
        for subset, coeff in a.items():
            term = self.target.element(self.base_map(coeff))
            for s in subset:
                term = self.target.multiply(term, self.odd_images[s])
            result = self.target.add(result, term)
        return result

    def check_compatible(self) -> Verdict:
        """f(d e) = d f(e) на образующих"""
        bad = []
        for name in self.source.odd_names:
            e = self.source.odd(name)
            if not self.target.is_zero(self.target.add(self(self.source.d(e)),
                                                       self.target.scale(self.target.d(self(e)), -1))):
                bad.append(name)
        return Verdict(not bad, "map commutes with d", bad)


@dataclass
class DGModule:
    """algebra как dg-модуль над over через структурное отображение"""

    algebra: DGAlgebra
    over: DGAlgebra
    structure: DGMap
    side: str = "left"

    def check_leibniz(self) -> Verdict:
        return self.structure.check_compatible()

    def homology(self, bound: int) -> list:
        return dg_homology(self.algebra, bound)


def dg_homology(algebra, bound: int) -> list:
    """H_0..H_bound кошулевой dg-алгебры (или dg-модуля)"""
    if bound < 0:
        raise SpecValidationError(f"homology bound must be nonnegative, got {bound}")
    if isinstance(algebra, DGModule):
        algebra = algebra.algebra
    complex_ = algebra.as_chain_complex()
    result = []
    for i in range(bound + 1):
        result.append(homology(complex_, i))
    return result


def free_cover(ring: GradedRing) -> GradedRing:
    return GradedRing(ring.names, ring.weights, name=f"{ring.name}~" if ring.name else "")


def ci_cofibrant_replacement(ring: GradedRing, bound: int | None = None) -> DGAlgebra:
    """Кошулева резольвента k[x] -> R = k[x]/(f_1..f_c) с проверкой регулярности"""
    cover = free_cover(ring)
    relations = [cover.element(f) for f in ring.relations]
    names = [f"e{k + 1}" for k in range(len(relations))]
    algebra = DGAlgebra(cover, names, relations, name=f"S({ring.name})" if ring.name else "S")
    if not relations:
        return algebra
    complex_ = algebra.as_chain_complex()
    top = len(relations) if bound is None else min(bound, len(relations))
    for i in range(1, max(top, 1) + 1):
        h = homology(complex_, i)
        if not h.is_zero:
            raise RegularityError(f"relations of {ring.name or 'R'} are not a regular sequence: "
                                  f"H_{i} of the Koszul complex is nonzero")
    algebra.check_d_squared()
    logger.info(f"кофибрантная замена: {len(relations)} нечётных образующих, регулярность проверена")
    return algebra
