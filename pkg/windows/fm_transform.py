"""Окно (mu, 0] и преобразование Фурье-Мукаи с ядром Q на скручиваниях R(i).

Phi(R(i)) = (C ⊗ Q_s)_{(i,*)}, где C - комплекс Чеха по переменным P_k
положительного веса. Для мономиального Q это считается по тонким степеням:
моном U^c P^e S^f лежит в срезе i при c = <a, e> - i и имеет R-степень
d = c + <b, f>.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

from algebra.errors import SpecValidationError
from algebra.polynomials import WeightSystem
from algebra.verdict import Verdict
from config import config
from equivariant.q_construction import U, q_of_free
from windows.cech import CechTable, FineGradedModule, cech_cohomology, same_tables

logger = logging.getLogger(__name__)

PLUS, MINUS = "+", "-"


def _scalar(weights) -> tuple:
    return WeightSystem.of(weights).scalar()


def mu(weights, sign: str = PLUS) -> int:
    """mu+ = -(сумма положительных весов), mu- = -(сумма |отрицательных|)"""
    degrees = _scalar(weights)
    if sign == PLUS:
        return -sum(d for d in degrees if d > 0)
    if sign == MINUS:
        return -sum(-d for d in degrees if d < 0)
    raise SpecValidationError(f"sign must be '+' or '-', got {sign!r}")


@dataclass(frozen=True)
class WindowSpec:
    mu: int

    @property
    def twists(self) -> list:
        return list(range(self.mu + 1, 1))

    def __len__(self):
        return -self.mu

    def __contains__(self, i: int) -> bool:
        return self.mu < i <= 0

    def describe(self) -> dict:
        return {"mu": self.mu, "window": f"({self.mu}, 0]", "twists": self.twists}


def window_generators(weights) -> list:
    window = WindowSpec(mu(weights))
    if not window.twists:
        logger.warning("нет положительных весов: окно (mu, 0] пусто")
    return window.twists


def twist_label(i: int) -> str:
    return f"R({i})"


def q_fine_module(weights, localized=()) -> FineGradedModule:
    """Q(k[x]) = k[U, P (d >= 0), S (d < 0)] как тонко градуированный модуль"""
    qp = q_of_free(list(_scalar(weights)))
    return FineGradedModule(tuple(qp.q.names), qp.q.weights, frozenset(localized))


def _positive_names(module: FineGradedModule) -> list:
    return [n for n, w in zip(module.names, module.weights.weights) if n != U and w[0] > 0]


def twist_support(weights, i: int, window: tuple, cap: int, free=()) -> dict:
    """Образ R(i) в координатах Q: (alpha, beta) -> U^{<a,alpha> - i} P^alpha S^beta.

    free: индексы переменных R, по которым показатель любой (локализация).
    Возвращает R-степень -> множество тонких степеней.
    """
    degrees = _scalar(weights)
    lo, hi = window
    ranges = [range(-cap, cap + 1) if k in free else range(cap + 1) for k in range(len(degrees))]
    support = {}
    for alpha in itertools.product(*ranges):
        c = sum(a * d for a, d in zip(alpha, degrees) if d >= 0) - i
        if c > cap or (c < -cap and free):
            continue
        d = c + sum(a * w for a, w in zip(alpha, degrees) if w < 0)
        if lo <= d <= hi:
            support.setdefault(d, set()).add((c,) + tuple(alpha))
    return support


def _slice(table: CechTable, i: int, k: int) -> dict:
    result = {}
    for degree, row in table.rows.items():
        if degree[0] == i and row.get(k):
            result[degree[1]] = set(row[k])
    return result


@dataclass
class FMReport:
    weights: tuple
    twist: int
    window: tuple
    spec: WindowSpec
    table: CechTable
    module: FineGradedModule
    matches: Verdict
    charts: dict = field(default_factory=dict)
    permutation_invariant: bool = True

    @property
    def in_window(self) -> bool:
        return self.twist in self.spec

    @property
    def consistent(self) -> bool:
        return self.matches.holds == self.in_window

    def per_degree(self) -> dict:
        rows = {}
        support = twist_support(self.weights, self.twist, self.window, self.table.cap)
        for d in range(self.window[0], self.window[1] + 1):
            row = {f"H{k}": self.table.dim((self.twist, d), k) for k in range(len(self.table.inverted) or 1)}
            row[twist_label(self.twist)] = len(support.get(d, ()))
            rows[str(d)] = row
        return rows

    def describe(self) -> dict:
        higher = {}
        for degree, row in self.table.rows.items():
            for k, basis in row.items():
                if k > 0 and basis:
                    higher.setdefault(f"H{k}", {})[str(degree[1])] = [self.module.monomial(e) for e in basis]
        return {
            "weights": list(self.weights),
            "twist": self.twist,
            "window": self.spec.describe(),
            "in_window": self.in_window,
            "matches_twist": self.matches.to_dict(),
            "consistent_with_window": self.consistent,
            "charts": {name: v.to_dict() for name, v in self.charts.items()},
            "permutation_invariant": self.permutation_invariant,
            "per_degree": self.per_degree(),
            "higher_cohomology": higher,
            "box": self.table.cap,
        }


def chart_restriction_check(weights, i: int, chart: str, window: tuple, cap: int) -> Verdict:
    """Ограничение Phi(R(i)) на карту D(s(x_k)) против R(i)_{x_k}.

    На карте обращены P_k и U; считается Чех локализованного модуля.
    """
    module = q_fine_module(weights, localized=(U, chart))
    inverted = _positive_names(module)
    table = cech_cohomology(module, inverted, [(i, i), window], cap)
    h0 = _slice(table, i, 0)
    k = int(chart[1:]) - 1
    support = twist_support(weights, i, window, cap, free=(k,))
    differing = sorted(d for d in set(h0) | set(support) if h0.get(d, set()) != support.get(d, set()))
    higher = not table.vanishes_above(0)
    holds = not differing and not higher
    detail = f"restriction to D({chart}) is {twist_label(i)}_{chart}" if holds \
        else f"restriction to D({chart}) differs from {twist_label(i)}_{chart}"
    return Verdict(holds, detail, [f"degree {d}" for d in differing])


def fm_transform_twist(weights, i: int, window: tuple | None = None, cap: int | None = None,
                       check_charts: bool = True) -> FMReport:
    degrees = _scalar(weights)
    window = tuple(window or config.DEGREE_WINDOW)
    cap = cap if cap is not None else config.MONOMIAL_CAP
    module = q_fine_module(degrees)
    inverted = _positive_names(module)
    table = cech_cohomology(module, inverted, [(i, i), window], cap)
    reversed_table = cech_cohomology(module, list(reversed(inverted)), [(i, i), window], cap)

    h0 = _slice(table, i, 0)
    support = twist_support(degrees, i, window, cap)
    differing = sorted(d for d in set(h0) | set(support) if h0.get(d, set()) != support.get(d, set()))
    higher = [f"H{k} in degree {degree[1]}" for degree, row in sorted(table.rows.items())
              for k, basis in row.items() if k > 0 and basis]
    checks = {
        "H0": Verdict(not differing, f"H0 matches {twist_label(i)} degreewise",
                      [f"degree {d}" for d in differing]),
        "higher": Verdict(not higher, "higher Cech cohomology vanishes", higher),
    }
    matches = Verdict.all_of(checks, f"Phi({twist_label(i)}) = {twist_label(i)} on [{window[0]}, {window[1]}]")

    charts = {}
    if check_charts:
        for chart in inverted:
            charts[chart] = chart_restriction_check(degrees, i, chart, window, cap)
    report = FMReport(degrees, i, window, WindowSpec(mu(degrees)), table, module, matches, charts,
                      same_tables(table, reversed_table))
    logger.info(f"Phi({twist_label(i)}) для весов {list(degrees)}: {matches.holds}, окно {report.spec.twists}")
    return report


@dataclass
class WallCrossingReport:
    mu_plus: int
    mu_minus: int

    @property
    def twist(self) -> int:
        return -self.mu_plus - 1

    @property
    def calabi_yau(self) -> bool:
        return abs(self.mu_plus) == abs(self.mu_minus)

    def describe(self) -> dict:
        return {
            "mu_plus": self.mu_plus,
            "mu_minus": self.mu_minus,
            "window_plus": WindowSpec(self.mu_plus).describe(),
            "window_minus": WindowSpec(self.mu_minus).describe(),
            "twist": self.twist,
            "calabi_yau": self.calabi_yau,
            "sign_note": (f"mu_plus + mu_minus = {self.mu_plus + self.mu_minus}; "
                          "the Calabi-Yau condition is tested as |mu_plus| = |mu_minus|"),
        }


def wall_crossing_report(weights) -> WallCrossingReport:
    report = WallCrossingReport(mu(weights, PLUS), mu(weights, MINUS))
    logger.info(f"стенка: mu+ = {report.mu_plus}, mu- = {report.mu_minus}, CY = {report.calabi_yau}")
    return report
