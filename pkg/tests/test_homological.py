import pytest

from algebra.errors import HilbertBasisCapError
from algebra.rings import GradedRing
from equivariant.q_construction import q_of_free, q_present
from homological.degree_zero import degree_zero_part, hilbert_basis
from homological.koszul import koszul_complex, koszul_homology, solves_out
from homological.property_p import FAILS_P, HAS_P, property_p_check
from homological.tensor import rho_iso_check, rho_map
from homological.tor import tor_bimodule


def _plane():
    return GradedRing(["x", "y"], [1, 1])


def test_koszul_of_regular_sequence():
    ring = _plane()
    complex_ = koszul_complex(ring, ["x", "y"])
    complex_.check_d_squared()
    assert [complex_.rank(i) for i in range(3)] == [1, 2, 1]
    h = koszul_homology(ring, ["x", "y"], 2)
    assert len(h) == 3
    assert h[1].is_zero and h[2].is_zero
    assert not h[0].is_zero


def test_koszul_of_repeated_element():
    h = koszul_homology(_plane(), ["x", "x"], 1)
    assert not h[1].is_zero


def test_solves_out():
    ring = GradedRing(["x", "y", "z"], [1, 1, 1])
    assert solves_out(ring, ["x - y", "z"]) == ["x", "z"]
    assert solves_out(ring, ["x*y"]) == [None]


@pytest.mark.parametrize("weights, expected", [
    ([1, 1, -1, -1], {(0, 1, 0, 1), (0, 1, 1, 0), (1, 0, 0, 1), (1, 0, 1, 0)}),
    ([2, -1], {(1, 2)}),
    ([1, 2], set()),
])
def test_hilbert_basis(weights, expected):
    assert set(hilbert_basis(weights)) == expected


def test_hilbert_cap():
    with pytest.raises(HilbertBasisCapError):
        hilbert_basis([5, -4], cap=2)


def test_degree_zero_of_q(node):
    qp = q_present(node)
    zero = degree_zero_part(qp.q, 0)
    # (Q)_{(0,*)}: U^a P^b S^c с b = a
    assert len(zero.monomials) >= 1
    for monomial in zero.monomials:
        assert qp.q.weights.degree(monomial)[0] == 0


def test_rho_iso_for_atiyah(atiyah2):
    assert rho_iso_check(rho_map(q_of_free(atiyah2))).holds


def test_property_p_atiyah(atiyah2):
    report = property_p_check(atiyah2, 2)
    assert report.conclusion == HAS_P
    assert report.tor_table.certified
    assert report.rho_iso.holds


def test_property_p_weighted(weighted):
    assert property_p_check(weighted, 2).conclusion == HAS_P


def test_property_p_fails_on_node(node):
    report = property_p_check(node, 2)
    assert report.conclusion == FAILS_P
    assert "injective" in report.reason
    kernel = report.rho_iso.checks["injective"].checks["kernel"]
    assert kernel
    assert any(w["reduced"] == "0" for w in kernel)


def test_node_tor(node):
    table = tor_bimodule(q_present(node), 2)
    assert not table.certified
    assert table.vanishes(1)
    assert not table.vanishes(2)
