import logging

from algebra.verdict import Verdict
from config import ComputationOptions, config
from database.models import RingSpec
from windows.cech import MAX_FINE_DEGREES
from windows.flops import flop_chart_check
from windows.fm_transform import (WindowSpec, fm_transform_twist, mu, twist_label, wall_crossing_report,
                                  window_generators)

from .base_command import BaseCommand, Report

logger = logging.getLogger(__name__)


def _box_size(spec: RingSpec, cap: int) -> int:
    """Число тонких степеней в самом большом комплексе Чеха (карта с обращённым U)"""
    degrees = [w[0] for _, w in spec.variables]
    positive = sum(1 for d in degrees if d > 0)
    return (2 * cap + 1) ** (positive + 1) * (cap + 1) ** (len(degrees) - positive)


class FMCommand(BaseCommand):
    def __init__(self):
        super().__init__(
            name="fm",
            description="Phi_{Q+}(R(i)) by Cech cohomology, compared with R(i) degreewise",
        )

    def applicable(self, spec: RingSpec) -> bool:
        if not (self.is_graded_by_z(spec) and spec.is_free):
            return False
        if not any(w[0] > 0 for _, w in spec.variables):
            return False
        return _box_size(spec, config.MONOMIAL_CAP) <= MAX_FINE_DEGREES

    def run(self, spec: RingSpec, options: ComputationOptions) -> Report:
        self.require_free(spec)
        report = self.new_report(spec)
        result = fm_transform_twist(self.weights(spec), options.twist, options.degree_window,
                                    options.monomial_cap)
        report.add_verdict(f"Phi({twist_label(options.twist)})", result.matches)
        report.add_verdict("window_prediction", Verdict(
            result.consistent,
            f"{twist_label(options.twist)} is {'inside' if result.in_window else 'outside'} "
            f"the window {result.spec.describe()['window']}"))
        for chart, verdict in result.charts.items():
            report.add_verdict(f"chart[{chart}]", verdict)
        report.add_verdict("permutation_invariant", Verdict(
            result.permutation_invariant, "Cech tables agree for the reversed cover"))
        report.add_table(twist_label(options.twist), result.describe())
        return report


class WindowCommand(BaseCommand):
    def __init__(self):
        super().__init__(
            name="window",
            description="window generators R(i), mu < i <= 0, each checked through Phi_{Q+}",
        )

    def applicable(self, spec: RingSpec) -> bool:
        return FMCommand().applicable(spec)

    def run(self, spec: RingSpec, options: ComputationOptions) -> Report:
        self.require_free(spec)
        report = self.new_report(spec)
        weights = self.weights(spec)
        twists = window_generators(weights)
        report.add_table("window", WindowSpec(mu(weights)).describe())
        for i in twists:
            result = fm_transform_twist(weights, i, options.degree_window, options.monomial_cap,
                                        check_charts=False)
            report.add_verdict(f"Phi({twist_label(i)})", result.matches)
        if not twists:
            report.add_verdict("window", Verdict(True, "no positive weights, the window is empty"))
        return report


class WallCrossCommand(BaseCommand):
    def __init__(self):
        super().__init__(
            name="wall-cross",
            description="mu+, mu-, the two windows and the Calabi-Yau test",
        )

    def run(self, spec: RingSpec, options: ComputationOptions) -> Report:
        self.require_z_grading(spec)
        report = self.new_report(spec)
        result = wall_crossing_report(self.weights(spec))
        # отрицательный ответ про CY тоже результат, а не ошибка
        report.add_verdict("calabi_yau", Verdict(
            result.calabi_yau, f"|mu+| = {abs(result.mu_plus)}, |mu-| = {abs(result.mu_minus)}"))
        report.add_table("wall_crossing", result.describe())
        return report


class FlopCheckCommand(BaseCommand):
    def __init__(self):
        super().__init__(
            name="flop-check",
            description="phi: R ⊗_{R^G} R -> Q(R) globally and on the charts (x_i, y_j)",
        )

    def applicable(self, spec: RingSpec) -> bool:
        return self.is_graded_by_z(spec) and spec.is_free and self.has_both_signs(spec)

    def run(self, spec: RingSpec, options: ComputationOptions) -> Report:
        self.require_free(spec)
        report = self.new_report(spec)
        charts = options.extra.get("charts")
        cap = options.hilbert_cap or None
        result = flop_chart_check(spec.build(), charts, cap)
        report.add_verdict("all_charts_iso", Verdict(result.all_charts_iso,
                                                     f"phi is an isomorphism on {len(result.charts)} charts"))
        report.add_verdict("global_iso", result.unlocalized)
        report.add_table("flop", result.describe())
        return report
