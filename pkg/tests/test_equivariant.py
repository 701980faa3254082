import pytest

from algebra.errors import SpecValidationError
from algebra.rings import GradedRing, RingMap
from equivariant.checks import eta_localization_check, q_polynomial_extension_check, q_pushout_check
from equivariant.loci import (chart_trivialization_check, invariant_ring, loci, loci_agree, quotient_chart,
                              semistable_charts)
from equivariant.q_construction import U, check_q_invariants, free_ring, q_of_free, q_present
from equivariant.torus import torus_q


def test_node_presentation(node):
    qp = q_present(node)
    assert qp.q.names == ("U", "P1", "S2")
    assert qp.q.format_relations() == ["P1*S2"]
    assert qp.p.describe() == {"x": "P1", "y": "U*S2"}
    assert qp.s.describe() == {"x": "U*P1", "y": "S2"}
    assert check_q_invariants(qp).holds


def test_affine_space_is_free():
    qp = q_of_free([1, 1, -1, -1])
    assert qp.q.names == ("U", "P1", "P2", "S3", "S4")
    assert qp.q.relations == ()
    assert qp.q.weight(U) == (-1, 1)
    assert qp.q.weight("P1") == (1, 0)
    assert qp.q.weight("S3") == (0, -1)
    assert qp.s.describe()["x2"] == "U*P2"
    assert qp.p.describe()["x3"] == "U*S3"


def test_q_of_free_rejects_relations(node):
    with pytest.raises(SpecValidationError):
        q_of_free(node)


def test_nonnegative_weights_give_polynomial_extension():
    qp = q_present(free_ring([1, 2]))
    assert qp.q.names == ("U", "P1", "P2")
    assert qp.q.relations == ()


def test_presented_agrees_with_free(atiyah2):
    assert q_present(atiyah2).q.relations == ()
    assert check_q_invariants(q_present(atiyah2)).holds


def test_loci_of_node(node):
    report = loci(node)
    assert report.plus.format() == ["x"]
    assert report.minus.format() == ["y"]
    assert not report.empty_cover
    assert loci_agree(node, q_present(node)).holds


def test_loci_without_positive_weights():
    ring = free_ring([-1, -2])
    assert loci(ring).empty_cover
    cover = semistable_charts(ring)
    assert cover.warning and cover.centers == []


def test_semistable_charts(atiyah2):
    cover = semistable_charts(atiyah2)
    assert cover.centers == ["x1", "x2"]
    assert len(cover.charts) == 2


def test_invariant_ring_is_quadric_cone(atiyah2):
    invariants = invariant_ring(atiyah2)
    assert len(invariants.ring.names) == 4
    assert len(invariants.ring.relations) == 1
    assert sorted(invariants.monomials) == [(0, 1, 0, 1), (0, 1, 1, 0), (1, 0, 0, 1), (1, 0, 1, 0)]


def test_quotient_chart_needs_degree_one(weighted):
    with pytest.raises(SpecValidationError):
        quotient_chart(weighted, "x1")


def test_quotient_chart_of_atiyah_flop_is_affine_space(atiyah2):
    chart = quotient_chart(atiyah2, "x1")
    assert chart.ring.names == ("T1", "T5", "T6")
    assert chart.ring.relations == ()


def test_quotient_chart_of_line_is_a_point():
    chart = quotient_chart(GradedRing(["x"], [1], name="line"), "x")
    ring = chart.ring
    assert ring.names == ("T1",)
    assert len(ring.relations) == 1
    assert ring.is_zero(ring.gen("T1") - ring.one)


def test_quotient_chart_keeps_invariant_variable():
    chart = quotient_chart(GradedRing(["x", "y"], [1, 0], name="plane"), "x")
    assert chart.ring.names == ("T1",)
    assert chart.ring.relations == ()


def test_chart_trivialization(atiyah2):
    assert chart_trivialization_check(atiyah2, "x1").holds
    assert chart_trivialization_check(free_ring([1]), "x1").holds


def test_eta_on_semistable_chart(node):
    assert eta_localization_check(node, "x").holds


def test_eta_at_invariant_element():
    ring = GradedRing(["x", "y", "z"], [1, -1, 0], ["x*y"], name="node_times_line")
    verdict = eta_localization_check(ring, "z")
    assert verdict.holds
    assert verdict.detail.startswith("degree 0")


def test_eta_at_negative_element(node):
    verdict = eta_localization_check(node, "y")
    assert verdict.holds
    assert verdict.detail.startswith("degree -1")
    assert "⊗_p" in verdict.detail
    assert verdict.witnesses[0].startswith("u^-1 = ")


def test_polynomial_extension(node):
    for a in (-2, 0, 1):
        assert q_polynomial_extension_check(node, a).holds


def _random_ring(rng, names):
    weights = [rng.randint(-3, 3) for _ in names]
    relations = []
    if rng.random() < 0.5:
        exps = [rng.randint(0, 2) for _ in names]
        if any(exps):
            relations.append("*".join(f"{n}^{e}" for n, e in zip(names, exps) if e))
    return GradedRing(names, weights, relations)


def test_randomized_functoriality(rng):
    for _ in range(10):
        ring = _random_ring(rng, ["x1", "x2"])
        assert q_polynomial_extension_check(ring, rng.randint(-3, 3)).holds

        a = rng.randint(-3, 3)
        base = GradedRing(["t"], [a])
        left = GradedRing(["t", "x"], [a, rng.randint(-3, 3)])
        right_weights = [a, rng.randint(-3, 3)]
        right = GradedRing(["t", "z"], right_weights, ["t*z"] if rng.random() < 0.5 else [])
        f = RingMap(base, left, ["t"], name="f")
        g = RingMap(base, right, ["t"], name="g")
        assert q_pushout_check(f, g).holds


def test_torus_q_plane():
    ring = GradedRing(["x1", "x2"], [(1, 0), (0, 1)], name="torus_plane")
    presentation = torus_q(ring, [[1, 0], [0, 1]])
    assert {"C1", "C2"} <= set(presentation.q.names)
    assert presentation.q.relations == ()
    with pytest.raises(SpecValidationError):
        torus_q(ring, [[1, 0, 0]])


def test_torus_q_rank_one_recovers_q(atiyah1):
    presentation = torus_q(atiyah1, [[1]])
    q = q_present(atiyah1).q
    assert presentation.q.names == ("C1", "P1", "S2")
    assert q.names == ("U", "P1", "S2")
    assert presentation.q.relations == q.relations == ()
    assert presentation.unstable.format() == ["x1"]


def test_torus_q_trivial_monoid(atiyah1):
    presentation = torus_q(atiyah1, [[0]])
    q = presentation.q
    assert q.names == ("P1", "S1", "P2", "S2")
    assert len(q.relations) == 1
    assert q.is_zero(q.element("P1*P2 - S1*S2"))
    assert not q.is_zero(q.element("P1*P2"))
    assert presentation.unstable is None
    assert presentation.describe()["unstable_locus"] == []
