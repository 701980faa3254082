import logging

import pytest

from algebra.errors import SpecValidationError
from algebra.polynomials import WeightSystem
from equivariant.q_construction import free_ring
from windows.cech import FineGradedModule, cech_cohomology, same_tables
from windows.flops import flop_chart_check
from windows.fm_transform import WindowSpec, fm_transform_twist, mu, wall_crossing_report, window_generators


@pytest.mark.parametrize("weights, plus, minus", [
    ([1, 1, -1, -1], -2, -2),
    ([1, -1], -1, -1),
    ([2, 1, -1, -3], -3, -4),
    ([1, 2], -3, 0),
])
def test_mu(weights, plus, minus):
    assert mu(weights, "+") == plus
    assert mu(weights, "-") == minus


def test_mu_rejects_bad_sign():
    with pytest.raises(SpecValidationError):
        mu([1, -1], "*")


def test_wall_crossing_atiyah():
    report = wall_crossing_report([1, 1, -1, -1])
    assert report.calabi_yau
    assert report.twist == 1
    assert report.describe()["window_minus"]["twists"] == [-1, 0]


def test_wall_crossing_not_calabi_yau():
    report = wall_crossing_report([2, 1, -1, -3])
    assert (report.mu_plus, report.mu_minus) == (-3, -4)
    assert not report.calabi_yau
    assert "|mu_plus| = |mu_minus|" in report.describe()["sign_note"]


def test_window_generators():
    assert window_generators([1, 1, -1, -1]) == [-1, 0]
    assert window_generators([1, 2]) == [-2, -1, 0]
    assert len(WindowSpec(-2)) == 2
    assert 0 in WindowSpec(-2) and -2 not in WindowSpec(-2)


def test_empty_window_warns(caplog):
    with caplog.at_level(logging.WARNING):
        assert window_generators([-1]) == []
    assert "пусто" in caplog.text


def test_cech_of_line_inverted():
    module = FineGradedModule(("x",), WeightSystem.of([1]))
    table = cech_cohomology(module, ["x"], [(-3, 3)], cap=3)
    for d in range(-3, 4):
        assert table.dim((d,), 0) == 1
    assert table.vanishes_above(0)


def test_cech_of_plane_punctured():
    module = FineGradedModule(("x", "y"), WeightSystem.of([(1, 0), (0, 1)]))
    table = cech_cohomology(module, ["x", "y"], [(-2, 2), (-2, 2)], cap=2)
    assert table.dim((-1, -1), 1) == 1
    assert table.dim((-1, -1), 0) == 0
    assert table.dim((-1, 0), 0) == 0
    assert table.dim((-1, 0), 1) == 0
    assert table.dim((0, 0), 0) == 1
    assert not table.vanishes_above(0)
    reversed_table = cech_cohomology(module, ["y", "x"], [(-2, 2), (-2, 2)], cap=2)
    assert same_tables(table, reversed_table)


def test_cech_window_dimension_checked():
    module = FineGradedModule(("x",), WeightSystem.of([1]))
    with pytest.raises(SpecValidationError):
        cech_cohomology(module, ["x"], [(-1, 1), (0, 0)], cap=1)


@pytest.mark.parametrize("twist", [-1, 0])
def test_fm_inside_window(twist):
    report = fm_transform_twist([1, 1, -1, -1], twist, (-4, 4), cap=4)
    assert report.in_window
    assert report.matches.holds
    assert report.consistent
    assert all(v.holds for v in report.charts.values())
    assert set(report.charts) == {"P1", "P2"}
    assert report.permutation_invariant


@pytest.mark.parametrize("twist", [1, -3])
def test_fm_outside_window(twist):
    report = fm_transform_twist([1, 1, -1, -1], twist, (-4, 4), cap=4, check_charts=False)
    assert not report.in_window
    assert not report.matches.holds
    assert report.consistent
    assert report.describe()["consistent_with_window"]


def test_flop_atiyah2(atiyah2):
    report = flop_chart_check(atiyah2)
    assert len(report.charts) == 4
    assert "(x1, y1)" in report.charts
    assert report.all_charts_iso
    assert not report.unlocalized.holds
    assert len(report.invariants.ring.relations) == 1


def test_flop_selected_chart(atiyah2):
    report = flop_chart_check(atiyah2, charts=[("x2", "y1")])
    assert list(report.charts) == ["(x2, y1)"]
    assert report.all_charts_iso


def test_flop_atiyah1(atiyah1):
    report = flop_chart_check(atiyah1)
    assert list(report.charts) == ["(x1, y1)"]
    assert report.all_charts_iso


def test_flop_needs_free_ring(node):
    with pytest.raises(SpecValidationError):
        flop_chart_check(node)


def test_flop_needs_both_signs():
    with pytest.raises(SpecValidationError):
        flop_chart_check(free_ring([1, 2]))


def test_flop_rejects_wrong_chart(atiyah2):
    with pytest.raises(SpecValidationError):
        flop_chart_check(atiyah2, charts=[("y1", "x1")])
