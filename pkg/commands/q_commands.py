import logging

from algebra.errors import SpecValidationError
from algebra.verdict import Verdict
from config import ComputationOptions
from database.models import RingSpec
from equivariant.checks import eta_localization_check
from equivariant.loci import (chart_trivialization_check, invariant_ring, loci, loci_agree,
                              quotient_chart, semistable_charts)
from equivariant.q_construction import check_q_invariants, q_present
from equivariant.torus import torus_q

from .base_command import BaseCommand, Report

logger = logging.getLogger(__name__)


class PresentQCommand(BaseCommand):
    def __init__(self):
        super().__init__(
            name="present-q",
            description="presentation of Q(R) with the maps p, s and eta",
        )

    def run(self, spec: RingSpec, options: ComputationOptions) -> Report:
        self.require_z_grading(spec)
        report = self.new_report(spec)
        qp = q_present(spec.build())
        report.add_verdict("q_invariants", check_q_invariants(qp))
        report.add_table("q", qp.describe())
        return report


class LociCommand(BaseCommand):
    def __init__(self):
        super().__init__(
            name="loci",
            description="attracting and repelling loci, read off R and off Q(R)",
        )

    def run(self, spec: RingSpec, options: ComputationOptions) -> Report:
        self.require_z_grading(spec)
        ring = spec.build()
        report = self.new_report(spec)
        result = loci(ring)
        report.add_verdict("loci_from_q", loci_agree(ring, q_present(ring)))
        report.add_table("loci", result.describe())
        return report


class ChartsCommand(BaseCommand):
    def __init__(self):
        super().__init__(
            name="charts",
            description="semistable charts R_x, quotient charts (R_x)_0 and eta on them",
        )

    def run(self, spec: RingSpec, options: ComputationOptions) -> Report:
        self.require_z_grading(spec)
        ring = spec.build()
        report = self.new_report(spec)
        cover = semistable_charts(ring)
        report.add_table("cover", cover.describe())
        quotients = {}
        for name in cover.centers:
            report.add_verdict(f"eta[{name}]", eta_localization_check(ring, ring.gen(name)))
            if ring.weight(name) == (1,):
                quotients[name] = quotient_chart(ring, ring.gen(name)).describe()
        if quotients:
            report.add_table("quotient_charts", quotients)
        return report


class InvariantsCommand(BaseCommand):
    def __init__(self):
        super().__init__(
            name="invariants",
            description="invariant ring R^G as a degree-zero subring",
        )

    def run(self, spec: RingSpec, options: ComputationOptions) -> Report:
        self.require_z_grading(spec)
        report = self.new_report(spec)
        cap = options.hilbert_cap or None
        report.add_table("invariants", invariant_ring(spec.build(), cap).describe())
        return report


class ChartTrivializationCommand(BaseCommand):
    def __init__(self):
        super().__init__(
            name="chart-trivialization",
            description="R_f ≅ (R_f)_0[u, u^-1] for every variable f of degree 1",
        )

    def applicable(self, spec: RingSpec) -> bool:
        return any(w == (1,) for _, w in spec.variables)

    def run(self, spec: RingSpec, options: ComputationOptions) -> Report:
        self.require_z_grading(spec)
        ring = spec.build()
        report = self.new_report(spec)
        centers = [name for name, w in spec.variables if w == (1,)]
        if not centers:
            raise SpecValidationError(f"{spec.name} has no variable of degree 1")
        for name in centers:
            report.add_verdict(f"trivialization[{name}]", chart_trivialization_check(ring, ring.gen(name)))
        return report


class TorusQCommand(BaseCommand):
    def __init__(self):
        super().__init__(
            name="torus-q",
            description="Q_T^C for a torus action and a monoid C of characters",
        )

    def applicable(self, spec: RingSpec) -> bool:
        return spec.monoid is not None

    def run(self, spec: RingSpec, options: ComputationOptions) -> Report:
        monoid = options.extra.get("monoid", spec.monoid)
        if monoid is None:
            raise SpecValidationError("torus-q needs the 'monoid' option")
        report = self.new_report(spec)
        presentation = torus_q(spec.build(), monoid)
        report.add_verdict("presented", Verdict(True, f"Q_T^C has {presentation.q.ngens} generators"))
        report.add_table("torus_q", presentation.describe())
        return report
