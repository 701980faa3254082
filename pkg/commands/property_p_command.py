from algebra.verdict import Verdict
from config import ComputationOptions
from database.models import RingSpec
from homological.property_p import property_p_check

from .base_command import BaseCommand, Report


class PropertyPCommand(BaseCommand):
    def __init__(self):
        super().__init__(
            name="property-p",
            description="rho: (Q ⊗ Q)_0 -> Q and Tor_i(Q_p, Q_s) for 1 <= i <= tor bound",
        )

    def run(self, spec: RingSpec, options: ComputationOptions) -> Report:
        self.require_z_grading(spec)
        report = self.new_report(spec)
        result = property_p_check(spec.build(), options.tor_bound)
        # fails_P тоже успешный результат вычисления
        witnesses = [] if result.has_p else list(result.rho_iso.witnesses)
        report.add_verdict("property_P", Verdict(result.has_p, f"{result.conclusion}: {result.reason}",
                                                 witnesses))
        report.add_verdict("rho_iso", result.rho_iso)
        report.add_table("property_p", result.describe())
        return report
