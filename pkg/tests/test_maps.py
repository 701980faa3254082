from algebra.groebner import Ideal, buchberger
from algebra.maps import ImageAlgebra, ideal_preimage, is_isomorphism, ring_map_kernel, subalgebra_membership
from algebra.modules import SubmodulePresentation, free_resolution, module_groebner, syzygies
from algebra.polynomials import LEX, PolynomialRing
from algebra.rings import GradedRing, RingMap
from equivariant.loci import loci_from_q
from equivariant.q_construction import q_of_free, q_present


def test_buchberger_reduced_basis():
    R = PolynomialRing(["x", "y"], LEX)
    ideal = Ideal(R, [R.parse("x*y"), R.parse("x - y")])
    basis = buchberger(ideal).groebner_basis()
    assert len(basis) == 2
    assert R.parse("x - y") in basis
    assert R.parse("y^2") in basis
    assert buchberger(buchberger(ideal)).groebner_basis() == basis
    assert ideal.normal_form(R.parse("x^2")) == R.zero


def test_kernel_of_monomial_curve():
    source = GradedRing(["a", "b", "c"], [1, 2, 3], name="A3")
    target = GradedRing(["x"], [1], name="line")
    f = RingMap(source, target, ["x", "x^2", "x^3"], name="curve")
    kernel = ring_map_kernel(f)
    P = source.poly_ring
    assert kernel.contains(P.parse("b - a^2"))
    assert kernel.contains(P.parse("c - a^3"))
    assert kernel.contains(P.parse("a*c - b^2"))
    assert not kernel.contains(P.parse("a"))
    assert not is_isomorphism(f).holds


def test_kernel_of_identity_is_presentation(node):
    identity = RingMap(node, node, list(node.names), name="id")
    assert ring_map_kernel(identity).same_as(node.ideal)
    assert is_isomorphism(identity).holds


def test_preimages_of_u_are_the_sign_ideals(atiyah2):
    qp = q_of_free(atiyah2)
    u = [qp.q.gen("U")]
    P = qp.s.source.poly_ring
    plus = Ideal(P, [P.gen("x1"), P.gen("x2")])
    minus = Ideal(P, [P.gen("y1"), P.gen("y2")])
    assert ideal_preimage(qp.s, u).same_as(plus)
    assert ideal_preimage(qp.p, u).same_as(minus)


def test_preimage_of_zero_is_kernel(node):
    qp = q_present(node)
    assert ideal_preimage(qp.p, []).same_as(ring_map_kernel(qp.p))


def test_loci_from_q_node(node):
    plus, minus = loci_from_q(q_present(node))
    P = node.poly_ring
    assert plus.contains(P.gen("x"))
    assert not plus.contains(P.gen("y"))
    assert minus.contains(P.gen("y"))


def test_subalgebra_membership():
    plane = GradedRing(["x", "y"], [1, 1])
    algebra = ImageAlgebra(plane, ["x", "y^2"])
    representation = algebra.represent("x*y^2")
    assert algebra.tag_ring.format(representation) == "T1*T2"
    assert algebra.represent("y") is None


def test_numerical_semigroup_membership():
    line = GradedRing(["x"], [1])
    assert subalgebra_membership("x", ["x^2", "x^3"], line) is None
    assert subalgebra_membership("x^5", ["x^2", "x^3"], line) is not None
    assert subalgebra_membership("x^7", ["x^2", "x^3"], line) is not None


def test_module_groebner_and_membership():
    plane = GradedRing(["x", "y"], [1, 1])
    module = module_groebner(SubmodulePresentation(plane, 2, [("x", 0), (0, "x")]))
    assert len(module.generators) == 2
    assert module.contains(("x*y", "x^2"))
    assert not module.contains(("y", 0))
    line = SubmodulePresentation(plane, 2, [("x", "y")])
    assert line.contains(("x^2", "x*y"))
    assert not line.contains(("x", 0))


def test_koszul_syzygy():
    plane = GradedRing(["x", "y"], [1, 1])
    syz = syzygies(plane, [("x",), ("y",)])
    assert len(syz.generators) == 1
    assert syz.contains(("y", "-x"))


def test_regular_element_has_no_syzygies():
    plane = GradedRing(["x", "y"], [1, 1])
    assert syzygies(plane, [("x",)]).is_zero()


def test_syzygies_over_node(node):
    syz = syzygies(node, [("x",), ("y",)])
    assert syz.contains(("y", 0))
    assert syz.contains((0, "x"))
    assert syz.contains(("y", "-x"))
    assert len(syz.generators) == 2


def test_resolution_of_point_on_line():
    line = GradedRing(["x"], [1])
    resolution = free_resolution(SubmodulePresentation(line, 1, [("x",)]), 2)
    assert resolution.ranks == {0: 1, 1: 1}


def test_resolution_over_node_is_periodic(node):
    resolution = free_resolution(SubmodulePresentation(node, 1, [("x",), ("y",)]), 3)
    assert [resolution.rank(i) for i in range(4)] == [1, 2, 2, 2]
    resolution.check_d_squared()
