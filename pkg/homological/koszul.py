"""Комплекс Кошуля последовательности однородных элементов."""
from __future__ import annotations

import itertools
import logging

from algebra.errors import InhomogeneousRelationError
from algebra.modules import ChainComplex, HomologyModule, homology
from algebra.polynomials import ANY_DEGREE, term_degrees
from algebra.rings import GradedRing

logger = logging.getLogger(__name__)


def wedge_basis(c: int, k: int) -> list:
    return list(itertools.combinations(range(c), k))


def koszul_complex(ring: GradedRing, sequence, name: str = "koszul") -> ChainComplex:
    """d(e_S) = sum_j (-1)^j f_{s_j} e_{S - s_j}, S по возрастанию, j с нуля"""
    sequence = [ring.element(f) for f in sequence]
    zero = (0,) * ring.weights.dim
    degrees = []
    for f in sequence:
        d = ring.degree(f)
        if d is None:
            raise InhomogeneousRelationError(ring.format(f), term_degrees(f, ring.weights))
        degrees.append(zero if d is ANY_DEGREE else d)
    c = len(sequence)
    ranks, differentials, shifts = {}, {}, {}
    for k in range(c + 1):
        basis = wedge_basis(c, k)
        ranks[k] = len(basis)
        shifts[k] = [tuple(sum(degrees[s][t] for s in subset) for t in range(len(zero))) for subset in basis]
        if k == 0:
            continue
        lower = {subset: i for i, subset in enumerate(wedge_basis(c, k - 1))}
        columns = []
        for subset in basis:
            column = [ring.zero] * len(lower)
            for j, s in enumerate(subset):
                face = subset[:j] + subset[j + 1:]
                column[lower[face]] = sequence[s] if j % 2 == 0 else -sequence[s]
            columns.append(tuple(column))
        differentials[k] = columns
    complex_ = ChainComplex(ring, ranks, differentials, shifts, name=name)
    complex_.labels = {k: wedge_basis(c, k) for k in range(c + 1)}
    return complex_


def koszul_homology(ring: GradedRing, sequence, bound: int) -> list:
    complex_ = koszul_complex(ring, sequence)
    return [homology(complex_, i) for i in range(min(bound, len(sequence)) + 1)]


def solves_out(ring: GradedRing, sequence) -> list:
    """Для каждого элемента: переменная с единичным коэффициентом, которой нет
    в остальных элементах и в остальных термах самого элемента; иначе None.

    Если для всех элементов такая переменная есть, последовательность регулярна
    в свободном кольце, и комплекс Кошуля точен во всех положительных степенях.
    """
    sequence = [ring.element(f) for f in sequence]
    result = []
    for idx, f in enumerate(sequence):
        others = [g for j, g in enumerate(sequence) if j != idx]
        found = None
        for k in range(ring.ngens):
            unit = tuple(1 if i == k else 0 for i in range(ring.ngens))
            if unit not in f:
                continue
            if any(m[k] for m in f.itermonoms() if m != unit):
                continue
            if any(m[k] for g in others for m in g.itermonoms()):
                continue
            found = ring.names[k]
            break
        result.append(found)
    return result
