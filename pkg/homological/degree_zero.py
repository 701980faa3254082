"""Подкольцо степени ноль по выделенной координате и базис Гильберта."""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

from algebra.errors import HilbertBasisCapError
from algebra.maps import ring_map_kernel
from algebra.rings import GradedRing, RingMap, identity_map, prune_presentation
from config import config

logger = logging.getLogger(__name__)


def default_cap(weights) -> int:
    if not weights:
        return 0
    return 2 * max(abs(w) for w in weights) * len(weights)


def coordinate_bounds(weights) -> list:
    """Границы координат минимальных решений sum e_v w_v = 0"""
    positive = [w for w in weights if w > 0]
    negative = [-w for w in weights if w < 0]
    bounds = []
    for w in weights:
        if w > 0:
            bounds.append(max(negative, default=0))
        elif w < 0:
            bounds.append(max(positive, default=0))
        else:
            bounds.append(1)
    return bounds


def _minimal(vectors) -> list:
    minimal = []
    for v in sorted(vectors, key=lambda e: (sum(e), e)):
        if any(all(a <= b for a, b in zip(m, v)) for m in minimal):
            continue
        minimal.append(v)
    return minimal


def hilbert_basis(weights, cap: int | None = None) -> list:
    """Минимальные ненулевые e из N^n с sum e_v w_v = 0"""
    weights = list(weights)
    cap = cap or config.HILBERT_CAP or default_cap(weights)
    bounds = coordinate_bounds(weights)
    if bounds and max(bounds) > cap:
        raise HilbertBasisCapError(
            f"minimal generators may need exponents up to {max(bounds)}, cap is {cap}")
    solutions = []
    for e in itertools.product(*(range(b + 1) for b in bounds)):
        if any(e) and sum(a * w for a, w in zip(e, weights)) == 0:
            solutions.append(e)
    basis = _minimal(solutions)
    logger.debug(f"базис Гильберта для весов {weights}: {len(basis)} элементов")
    return basis


def minimal_monomials(weights, degree: int, cap: int) -> list:
    """Минимальные e с sum e_v w_v = degree, координаты не больше cap"""
    solutions = []
    for e in itertools.product(range(cap + 1), repeat=len(weights)):
        if sum(a * w for a, w in zip(e, weights)) == degree:
            solutions.append(e)
    return _minimal(solutions)


@dataclass
class DegreeZeroSubring:
    ring: GradedRing
    inclusion: RingMap  # ring -> ambient
    monomials: list = field(default_factory=list)
    substitution: dict = field(default_factory=dict)

    @property
    def ambient(self) -> GradedRing:
        return self.inclusion.target

    def describe(self) -> dict:
        return {
            "generators": self.inclusion.describe(),
            "relations": self.ring.format_relations(),
            "hilbert_basis": [list(m) for m in self.monomials],
        }


def _reduced_weights(ambient: GradedRing, middle: int, exponents) -> tuple:
    degree = ambient.weights.degree(exponents)
    rest = tuple(c for k, c in enumerate(degree) if k != middle)
    return rest or (0,)


def degree_zero_part(ambient: GradedRing, middle: int, cap: int | None = None,
                     prefix: str = "T") -> DegreeZeroSubring:
    middle_weights = [w[middle] for w in ambient.weights.weights]
    if not any(middle_weights):
        return DegreeZeroSubring(ambient, identity_map(ambient),
                                 [tuple(1 if i == k else 0 for i in range(ambient.ngens))
                                  for k in range(ambient.ngens)])
    basis = hilbert_basis(middle_weights, cap)
    if not basis:
        # только константы: k = k[T1]/(T1 - 1)
        zero = _reduced_weights(ambient, middle, (0,) * ambient.ngens)
        ring = GradedRing([f"{prefix}1"], [zero], [f"{prefix}1 - 1"])
        return DegreeZeroSubring(ring, RingMap(ring, ambient, [ambient.one], name="inclusion"), [])
    names = [f"{prefix}{j + 1}" for j in range(len(basis))]
    weights = [_reduced_weights(ambient, middle, e) for e in basis]
    images = [ambient.poly_ring.monomial(e) for e in basis]
    free = GradedRing(names, weights)
    kernel = ring_map_kernel(RingMap(free, ambient, images, name="degree-zero inclusion"))
    presented = GradedRing(names, weights, kernel.groebner_basis(),
                           name=f"({ambient.name})_0" if ambient.name else "")
    pruned, substitution = prune_presentation(presented)
    kept = [images[names.index(n)] for n in pruned.names]
    inclusion = RingMap(pruned, ambient, kept, name="inclusion")
    logger.info(f"степень ноль: {len(basis)} мономов, после упрощения {pruned.ngens} образующих")
    return DegreeZeroSubring(pruned, inclusion, basis, substitution)
