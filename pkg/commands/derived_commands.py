import logging

from algebra.errors import SpecValidationError
from algebra.verdict import Verdict
from config import ComputationOptions
from database.models import RingSpec
from derived.cone import s_der_cone
from derived.dg_algebra import dg_homology
from derived.q_der import beta_check, h0_comparison, q_der
from derived.sod import sod_check_node

from .base_command import BaseCommand, Report

logger = logging.getLogger(__name__)

# куски конуса S_der по обычной степени считаются до этой границы
CONE_DEGREE = 4


class DerivedQCommand(BaseCommand):
    def __init__(self):
        super().__init__(
            name="derived-q",
            description="Q_der over the Koszul replacement, its homology and the cone S_der",
        )

    def run(self, spec: RingSpec, options: ComputationOptions) -> Report:
        self.require_z_grading(spec)
        ring = spec.build()
        report = self.new_report(spec)
        bound = options.homology_bound
        qd = q_der(ring, bound)
        homology = dg_homology(qd.algebra, bound)
        report.add_verdict("H0", h0_comparison(qd))
        nonzero = [f"H_{i}" for i, h in enumerate(homology) if i > 0 and not h.is_zero]
        report.add_verdict("higher_homology", Verdict(
            not nonzero, f"H_i(Q_der) = 0 for 1 <= i <= {bound}", nonzero))
        cone = s_der_cone(ring, bound, options.degree_window, min(options.monomial_cap, CONE_DEGREE))
        report.add_verdict("cone_les", cone.verdict)
        report.add_table("q_der", qd.describe())
        report.add_table("homology", {str(i): h.describe() for i, h in enumerate(homology)})
        report.add_table("s_der", cone.describe())
        return report


class BetaCheckCommand(BaseCommand):
    def __init__(self):
        super().__init__(
            name="beta-check",
            description="(Q_der ⊗ Q_der)_0 -> Q_der through the homology bound",
        )

    def run(self, spec: RingSpec, options: ComputationOptions) -> Report:
        self.require_z_grading(spec)
        report = self.new_report(spec)
        result = beta_check(spec.build(), options.homology_bound, options.hilbert_cap or None)
        report.add_verdict("property_P_der", result.verdict)
        report.add_table("beta", result.describe())
        return report


def is_node(spec: RingSpec) -> bool:
    """k[x, y]/(xy) с весами 1 и -1, с точностью до имён"""
    if not BaseCommand.is_graded_by_z(spec) or len(spec.variables) != 2 or len(spec.relations) != 1:
        return False
    if sorted(w[0] for _, w in spec.variables) != [-1, 1]:
        return False
    ring = spec.build()
    relation = ring.element(spec.relations[0])
    product = ring.gen(spec.variables[0][0]) * ring.gen(spec.variables[1][0])
    return bool(relation) and relation == product * relation.LC


class SODCheckCommand(BaseCommand):
    def __init__(self):
        super().__init__(
            name="sod-check",
            description="Phi_{Q_der} on R(i), R/x(i), R/y(i) for the node and its idempotence",
        )

    def applicable(self, spec: RingSpec) -> bool:
        return is_node(spec)

    def run(self, spec: RingSpec, options: ComputationOptions) -> Report:
        if not is_node(spec):
            raise SpecValidationError("sod-check runs on the node k[x, y]/(xy), deg x = 1, deg y = -1")
        report = self.new_report(spec)
        result = sod_check_node(options.homology_bound, window=options.degree_window,
                                cap=options.hilbert_cap or None)
        generators = {}
        for (label, i), entry in sorted(result.entries.items()):
            report.add_verdict(f"idempotent[{label}({i})]", entry["idempotent"])
            if label == "R":
                generators[str(i)] = entry["perfect_generator"]
        report.add_verdict("perfect_generators", Verdict(
            all(generators[str(i)] for i in range(-2, 1)),
            "Phi(R(i)) = R(i) for the twists i <= 0"))
        report.add_table("sod", result.describe())
        return report
