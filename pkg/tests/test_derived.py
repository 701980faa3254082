import pytest

from algebra.errors import RegularityError, SpecValidationError
from algebra.rings import GradedRing
from derived.cone import s_der_cone
from derived.dg_algebra import DGAlgebra, ci_cofibrant_replacement, dg_homology
from derived.q_der import beta_check, h0_comparison, q_der
from derived.sod import sod_check_node


@pytest.fixture
def plane_koszul():
    base = GradedRing(["x", "y"], [1, 1], name="plane")
    return DGAlgebra(base, ["e1", "e2"], ["x", "y"], name="K(x, y)")


def test_odd_generators_anticommute(plane_koszul):
    A = plane_koszul
    one = A.base.one
    e1, e2 = A.odd("e1"), A.odd("e2")
    assert A.multiply(e1, e2) == {(0, 1): one}
    assert A.multiply(e2, e1) == {(0, 1): -one}
    assert A.multiply(e1, e1) == {}


def test_differential_on_product(plane_koszul):
    A = plane_koszul
    x, y = A.base.gen("x"), A.base.gen("y")
    product = A.multiply(A.odd("e1"), A.odd("e2"))
    assert A.d(product) == {(1,): x, (0,): -y}
    assert A.is_zero(A.d(A.d(product)))
    A.check_d_squared()


def test_leibniz(plane_koszul):
    A = plane_koszul
    a = A.scale(A.odd("e1"), "x + y")
    b = A.add(A.odd("e2"), A.element("y^2"))
    assert A.check_leibniz(a, b)
    assert A.check_leibniz(A.multiply(A.odd("e1"), A.odd("e2")), A.element("x"))


def test_koszul_homology_of_regular_sequence(plane_koszul):
    h = dg_homology(plane_koszul, 2)
    assert not h[0].is_zero
    assert h[1].is_zero
    assert h[2].is_zero


def test_homology_bound_must_be_nonnegative(plane_koszul):
    with pytest.raises(SpecValidationError):
        dg_homology(plane_koszul, -1)


def test_odd_weights_follow_differential(plane_koszul):
    assert plane_koszul.odd_weights == ((1,), (1,))
    assert plane_koszul.check_weights().holds


def test_cofibrant_replacement_needs_regular_sequence():
    ring = GradedRing(["x", "y"], [1, 1], ["x*y", "x^2"], name="fat")
    with pytest.raises(RegularityError):
        ci_cofibrant_replacement(ring)


def test_cofibrant_replacement_of_node(node):
    cover = ci_cofibrant_replacement(node)
    assert cover.odd_names == ("e1",)
    assert cover.base.relations == ()
    assert cover.odd_weights == ((0,),)


def test_q_der_node(node):
    qd = q_der(node, 3)
    base = qd.algebra.base
    assert base.names == ("U", "P1", "S2")
    assert base.relations == ()
    assert [base.format(f) for f in qd.algebra.differential] == ["U*P1*S2"]
    assert qd.relation_weights == [0]
    assert qd.p.check_compatible().holds
    assert qd.s.check_compatible().holds


def test_q_der_node_homology(node):
    qd = q_der(node, 3)
    homology = dg_homology(qd.algebra, 3)
    assert all(h.is_zero for h in homology[1:])
    h0 = qd.algebra.base.quotient(qd.algebra.differential)
    assert h0.format_relations() == ["U*P1*S2"]


def test_h0_against_q_node(node):
    verdict = h0_comparison(q_der(node, 3))
    assert verdict.checks["surjects"].holds
    assert not verdict.checks["equal"].holds
    assert not verdict.holds


def test_q_der_mukai(mukai2):
    qd = q_der(mukai2, 2)
    base = qd.algebra.base
    assert [base.format(f) for f in qd.algebra.differential] == ["U*P1*S3 + U*P2*S4"]
    assert qd.algebra.odd_weights == ((0, 0),)


def test_beta_check_node(node):
    report = beta_check(node, 3)
    assert report.holds
    assert report.verdict.checks["H0"].holds
    assert set(report.describe()["homology"]) == {"0", "1", "2", "3"}


def test_cone_piece_node(node):
    report = s_der_cone(node, 3, window=(-2, 2), max_degree=3)
    piece = report.pieces[(2, -1)]
    assert piece.q == [2, 0, 0, 0]
    assert piece.delta == [2, 0, 0, 0]
    assert piece.cone == [1, 1, 0, 0]
    assert report.dim(2, -1, 1) == 1
    assert report.verdict.holds


def test_cone_needs_standard_homogeneous_relations():
    ring = GradedRing(["x", "y"], [1, -1], ["x*y - x^2*y^2"], name="mixed")
    with pytest.raises(SpecValidationError):
        s_der_cone(ring, 1, window=(0, 0), max_degree=1)


@pytest.fixture(scope="module")
def node_sod():
    return sod_check_node(3, (-2, 2), (-4, 4))


@pytest.mark.parametrize("i", [-2, -1, 0])
def test_sod_twists_in_window_are_fixed(node_sod, i):
    assert node_sod.entry("R", i)["equals_module"]
    assert node_sod.entry("R", i)["perfect_generator"]


def test_sod_twist_outside_window_moves(node_sod):
    assert not node_sod.entry("R", 1)["equals_module"]


@pytest.mark.parametrize("i", [-2, -1, 0, 1, 2])
def test_sod_quotient_by_x(node_sod, i):
    entry = node_sod.entry("R/x", i)
    if i <= 0:
        assert entry["equals_module"]
    else:
        assert entry["phi"].is_zero


@pytest.mark.parametrize("i", [-2, -1, 0, 1, 2])
def test_sod_quotient_by_y(node_sod, i):
    assert node_sod.entry("R/y", i)["equals_module"] == (i < 0)


def test_sod_idempotent(node_sod):
    assert node_sod.idempotent
    assert node_sod.describe()["idempotent"]
