"""Притягивающие и отталкивающие локусы, полустабильные карты, факторкарты."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from algebra.errors import SpecValidationError
from algebra.groebner import Ideal
from algebra.maps import ideal_preimage, is_isomorphism
from algebra.rings import GradedRing, RingMap
from algebra.verdict import Verdict
from equivariant.q_construction import U, QPresentation
from homological.degree_zero import DegreeZeroSubring, degree_zero_part

logger = logging.getLogger(__name__)


@dataclass
class LociReport:
    plus: Ideal   # I+, положительные веса
    minus: Ideal  # I-, отрицательные веса
    r_plus: GradedRing   # R/I-
    r_minus: GradedRing  # R/I+
    r_zero: GradedRing
    empty_cover: bool = False
    ring: GradedRing = field(default=None, repr=False)

    def describe(self) -> dict:
        return {
            "I+": self.plus.format(),
            "I-": self.minus.format(),
            "R+": self.r_plus.format_relations(),
            "R-": self.r_minus.format_relations(),
            "R0": self.r_zero.format_relations(),
            "semistable_cover_empty": self.empty_cover,
        }


def _signed_variables(ring: GradedRing, sign: int) -> list:
    return [name for name, d in zip(ring.names, ring.weights.scalar()) if d * sign > 0]


def loci(ring: GradedRing) -> LociReport:
    plus_vars = _signed_variables(ring, 1)
    minus_vars = _signed_variables(ring, -1)
    plus = ring.ideal.extended(ring.gen(n) for n in plus_vars)
    minus = ring.ideal.extended(ring.gen(n) for n in minus_vars)
    r_plus = ring.quotient(minus.generators, name=f"{ring.name}+")
    r_minus = ring.quotient(plus.generators, name=f"{ring.name}-")
    r_zero = ring.quotient(plus.generators + minus.generators, name=f"{ring.name}0")
    return LociReport(plus, minus, r_plus, r_minus, r_zero, empty_cover=plus.is_zero(), ring=ring)


def loci_from_q(qp: QPresentation) -> tuple:
    """(s^{-1}(U*Q), p^{-1}(U*Q))"""
    u = [qp.q.gen(U)]
    return ideal_preimage(qp.s, u), ideal_preimage(qp.p, u)


def loci_agree(ring: GradedRing, qp: QPresentation) -> Verdict:
    report = loci(ring)
    plus, minus = loci_from_q(qp)
    checks = {
        "I+": Verdict(plus.same_as(report.plus), "s^-1(U) = I+", plus.format()),
        "I-": Verdict(minus.same_as(report.minus), "p^-1(U) = I-", minus.format()),
    }
    return Verdict.all_of(checks, "loci from Q agree with loci of R")


@dataclass
class SemistableCover:
    charts: list
    centers: list
    warning: bool = False

    def describe(self) -> dict:
        return {
            "centers": self.centers,
            "charts": [c.describe() for c in self.charts],
            "warning": "I+ is zero, the semistable locus is empty" if self.warning else "",
        }


def semistable_charts(ring: GradedRing) -> SemistableCover:
    """По карте R_r на каждую образующую r идеала I+"""
    centers = _signed_variables(ring, 1)
    if not centers:
        logger.warning("I+ = 0: полустабильное покрытие пусто, возвращается само R")
        return SemistableCover([ring], [], warning=True)
    charts = [ring.localize(ring.gen(name)) for name in centers]
    return SemistableCover(charts, centers)


def _degree_one(ring: GradedRing, f):
    f = ring.element(f)
    if ring.degree(f) != (1,):
        raise SpecValidationError(f"chart element {ring.format(f)} must have degree 1, got {ring.degree(f)}")
    return f


def quotient_chart(ring: GradedRing, f) -> DegreeZeroSubring:
    """(R_f)_0 для f степени 1"""
    f = _degree_one(ring, f)
    chart = ring.localize(f, tag="f_inv")
    return degree_zero_part(chart, 0)


def invariant_ring(ring: GradedRing, cap=None) -> DegreeZeroSubring:
    """R^{G_m}"""
    return degree_zero_part(ring, 0, cap)


def chart_trivialization_check(ring: GradedRing, f) -> Verdict:
    """R_f ≅ (R_f)_0[u, u^-1] при u -> f"""
    f = _degree_one(ring, f)
    chart = ring.localize(f, tag="f_inv")
    zero = degree_zero_part(chart, 0)
    source = zero.ring.extend(["u", "u_inv"], [(1,), (-1,)], name="(R_f)_0[u,u^-1]",
                              inverses={"u": "u_inv"})
    source = source.quotient([source.gen("u") * source.gen("u_inv") - source.one])
    images = list(zero.inclusion.images) + [chart.element(f), chart.gen("f_inv")]
    trivialization = RingMap(source, chart, images, name="trivialization")
    verdict = is_isomorphism(trivialization)
    logger.info(f"тривиализация карты {ring.format(f)}: {verdict.holds}")
    return verdict
