"""Q_T^C для тора T = G_m^n и моноида C в решётке характеров."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from algebra.errors import SpecValidationError
from algebra.groebner import Ideal
from algebra.maps import ideal_preimage, ring_map_kernel
from algebra.rings import GradedRing, RingMap, laurent_ring, prune_presentation
from equivariant.q_construction import p_name, s_name

logger = logging.getLogger(__name__)


def chi_name(k: int) -> str:
    return f"χ{k + 1}"


@dataclass
class TorusQPresentation:
    base: GradedRing
    monoid: list
    q: GradedRing
    sigma: RingMap  # R -> Q_T^C
    laurent: GradedRing
    embedding: RingMap  # Q_T^C -> R[χ^±]
    unstable: Ideal = None
    substitution: dict = field(default_factory=dict)

    def describe(self) -> dict:
        return {
            "monoid": [list(c) for c in self.monoid],
            "q": self.q.describe(),
            "embedding": self.embedding.describe(),
            "unstable_locus": self.unstable.format() if self.unstable is not None else [],
        }


def _character(laurent: GradedRing, vector):
    result = laurent.one
    for k, c in enumerate(vector):
        if c > 0:
            result *= laurent.gen(chi_name(k)) ** c
        elif c < 0:
            result *= laurent.gen(f"{chi_name(k)}_inv") ** (-c)
    return result


def torus_q(ring: GradedRing, monoid) -> TorusQPresentation:
    """Подалгебра R[χ^±], порождённая χ^c (c из C), pi(R) и sigma(R)"""
    n = ring.weights.dim
    monoid = [tuple(int(a) for a in c) for c in monoid]
    if any(len(c) != n for c in monoid):
        raise SpecValidationError(f"monoid generators must have {n} coordinates")
    monoid_nonzero = [c for c in monoid if any(c)]
    zero = (0,) * n

    def unit(k):
        return tuple(1 if j == k else 0 for j in range(n))

    # Z^{2n}: x -> (w, 0), χ_k -> (-e_k, e_k)
    laurent = laurent_ring(ring, [chi_name(k) for k in range(n)],
                           [tuple(-a for a in unit(k)) + unit(k) for k in range(n)],
                           base_weight=lambda w: tuple(w) + zero, name="R[χ^±]")
    names, weights, images = [], [], []
    for j, c in enumerate(monoid_nonzero):
        names.append(f"C{j + 1}")
        weights.append(tuple(-a for a in c) + c)
        images.append(_character(laurent, c))
    for i, w in enumerate(ring.weights.weights):
        x = laurent.gen(ring.names[i])
        names += [p_name(i), s_name(i)]
        weights += [tuple(w) + zero, zero + tuple(w)]
        images += [x, x * _character(laurent, w)]
    free = GradedRing(names, weights)
    kernel = ring_map_kernel(RingMap(free, laurent, images, name="embedding"))
    presented = GradedRing(names, weights, kernel.groebner_basis(), name="Q_T^C")
    q, substitution = prune_presentation(presented)
    embedding = RingMap(q, laurent, [images[names.index(name)] for name in q.names], name="embedding")
    sigma = RingMap(ring, q, [substitution[s_name(i)] for i in range(ring.ngens)], name="sigma")
    unstable = None
    if monoid_nonzero:
        chars = [substitution[f"C{j + 1}"] for j in range(len(monoid_nonzero))]
        unstable = ideal_preimage(sigma, chars)
    logger.info(f"Q_T^C: {q.ngens} образующих, {len(q.relations)} соотношений")
    return TorusQPresentation(ring, monoid, q, sigma, laurent, embedding, unstable, substitution)
