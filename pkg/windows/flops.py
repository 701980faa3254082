"""Флоп по картам: phi = p ⊗ s: R ⊗_{R^G} R -> Q(R) после обращения пары x_i+, x_j-."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from algebra.errors import SpecValidationError
from algebra.maps import is_isomorphism
from algebra.polynomials import PolynomialRing, transport
from algebra.rings import GradedRing, RingMap
from algebra.verdict import Verdict
from equivariant.loci import invariant_ring
from equivariant.q_construction import QPresentation, p_name, q_of_free, s_name

logger = logging.getLogger(__name__)


def fiber_product(ring: GradedRing, cap: int | None = None) -> tuple:
    """R ⊗_{R^G} R: копии X, Y и соотношения h(X) = h(Y) для образующих h кольца R^G"""
    invariants = invariant_ring(ring, cap)
    n = ring.ngens
    degrees = ring.weights.scalar()
    names = [f"X{i + 1}" for i in range(n)] + [f"Y{i + 1}" for i in range(n)]
    poly = PolynomialRing(names)
    relations = []
    for h in invariants.inclusion.images:
        left = transport(h, poly, range(n))
        right = transport(h, poly, range(n, 2 * n))
        if left != right:
            relations.append(left - right)
    weights = [(d, 0) for d in degrees] + [(0, d) for d in degrees]
    return GradedRing(names, weights, relations, name="R⊗_{R^G}R"), invariants


def flop_map(qp: QPresentation, source: GradedRing) -> RingMap:
    images = list(qp.p.images) + list(qp.s.images)
    return RingMap(source, qp.q, images, name="phi")


@dataclass
class FlopReport:
    source: GradedRing
    invariants: object
    unlocalized: Verdict
    charts: dict = field(default_factory=dict)

    @property
    def all_charts_iso(self) -> bool:
        return all(v.holds for v in self.charts.values())

    def describe(self) -> dict:
        return {
            "invariant_ring": self.invariants.describe(),
            "fiber_product": self.source.describe(),
            "unlocalized": self.unlocalized.to_dict(),
            "charts": {name: v.to_dict() for name, v in self.charts.items()},
            "all_charts_iso": self.all_charts_iso,
        }


def _chart_pairs(ring: GradedRing, charts) -> list:
    degrees = ring.weights.scalar()
    plus = [i for i, d in enumerate(degrees) if d > 0]
    minus = [j for j, d in enumerate(degrees) if d < 0]
    if not plus or not minus:
        raise SpecValidationError("flop_chart_check needs a positive and a negative weight")
    if charts is None:
        return [(i, j) for i in plus for j in minus]
    pairs = []
    for a, b in charts:
        i, j = ring.names.index(a), ring.names.index(b)
        if i not in plus or j not in minus:
            raise SpecValidationError(f"chart ({a}, {b}) needs a positive and a negative variable")
        pairs.append((i, j))
    return pairs


def chart_map(phi: RingMap, i: int, j: int) -> RingMap:
    """phi на карте: X_i, Y_j обращены в источнике, P_i, S_j в Q"""
    source = phi.source.localize(phi.source.gen(f"X{i + 1}"), tag=f"X{i + 1}_inv")
    source = source.localize(source.gen(f"Y{j + 1}"), tag=f"Y{j + 1}_inv")
    p_tag, s_tag = f"{p_name(i)}_inv", f"{s_name(j)}_inv"
    target = phi.target.localize(phi.target.gen(p_name(i)), tag=p_tag)
    target = target.localize(target.gen(s_name(j)), tag=s_tag)
    images = [target.element(image) for image in phi.images] + [target.gen(p_tag), target.gen(s_tag)]
    return RingMap(source, target, images, name=f"phi[{i + 1},{j + 1}]")


def flop_chart_check(ring: GradedRing, charts=None, cap: int | None = None) -> FlopReport:
    if ring.relations:
        raise SpecValidationError("flop_chart_check needs a free ring")
    pairs = _chart_pairs(ring, charts)
    qp = q_of_free(ring)
    source, invariants = fiber_product(ring, cap)
    phi = flop_map(qp, source)
    phi.check_well_defined()
    report = FlopReport(source, invariants, is_isomorphism(phi))
    for i, j in pairs:
        label = f"({ring.names[i]}, {ring.names[j]})"
        report.charts[label] = is_isomorphism(chart_map(phi, i, j))
        logger.info(f"флоп на карте {label}: {report.charts[label].holds}")
    return report
