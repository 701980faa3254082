import pytest

from algebra.errors import BudgetExceededError
from algebra.groebner import Budget, Ideal, budget_scope, elimination_ideal, standard_monomials
from algebra.modules import syzygies
from algebra.polynomials import PolynomialRing, WeightSystem, substitute
from algebra.rings import GradedRing


def _random_small(ring, rng, degree=3, terms=3):
    terms_ = {}
    for _ in range(rng.randint(1, terms)):
        total = rng.randint(0, degree)
        exps = [0] * ring.ngens
        for _ in range(total):
            exps[rng.randrange(ring.ngens)] += 1
        terms_[tuple(exps)] = rng.randint(-3, 3) or 1
    return ring.from_terms(terms_)


def test_membership_matches_cofactors(rng):
    R = PolynomialRing(["x", "y", "z"])
    for _ in range(400):
        gens = [_random_small(R, rng) for _ in range(rng.randint(1, 2))]
        ideal = Ideal(R, gens)
        combination = sum((_random_small(R, rng, degree=2) * g for g in gens), R.zero)
        assert ideal.contains(combination)
        f = _random_small(R, rng)
        assert ideal.normal_form(f + combination) == ideal.normal_form(f)


def test_normal_form_of_nonmember():
    R = PolynomialRing(["x", "y", "z"])
    ideal = Ideal(R, [R.parse("y^2"), R.parse("z")])
    assert ideal.normal_form(R.parse("x + z")) == R.parse("x")
    assert not ideal.contains(R.parse("y"))


def test_unit_ideal():
    R = PolynomialRing(["x", "y"])
    assert Ideal(R, [R.parse("x"), R.parse("x + 1")]).is_unit()


@pytest.mark.parametrize("exponents", [(1, 2, 3), (2, 3, 4), (1, 3, 4)])
def test_elimination_against_parametrization(exponents):
    R = PolynomialRing(["t", "x", "y", "z"])
    t = R.gen("t")
    ideal = Ideal(R, [R.gen(v) - t**e for v, e in zip("xyz", exponents)])
    eliminated = elimination_ideal(ideal, ["x", "y", "z"])
    assert eliminated.ring.names == ("x", "y", "z")
    T = PolynomialRing(["t"])
    images = [T.gen("t") ** e for e in exponents]
    for g in eliminated.groebner_basis():
        assert substitute(g, images, T) == T.zero
    assert not eliminated.is_zero()


def test_twisted_cubic():
    R = PolynomialRing(["t", "x", "y", "z"])
    ideal = Ideal(R, [R.parse("x - t"), R.parse("y - t^2"), R.parse("z - t^3")])
    eliminated = elimination_ideal(ideal, ["x", "y", "z"])
    S = eliminated.ring
    assert eliminated.contains(S.parse("y - x^2"))
    assert eliminated.contains(S.parse("x*z - y^2"))
    assert not eliminated.contains(S.parse("x - y"))


def test_syzygies_of_variables():
    ring = GradedRing(["x", "y", "z"], [1, 1, 1])
    gens = [(ring.gen("x"),), (ring.gen("y"),), (ring.gen("z"),)]
    module = syzygies(ring, gens)
    assert len(module.generators) == 3
    for s in module.generators:
        total = sum((c * g[0] for c, g in zip(s, gens)), ring.zero)
        assert ring.is_zero(total)


def test_random_syzygies_annihilate(rng):
    ring = GradedRing(["x", "y", "z"], [1, 1, 1])
    for _ in range(100):
        count = rng.randint(2, 3)
        gens = [(_random_small(ring.poly_ring, rng, degree=5 - count),) for _ in range(count)]
        for s in syzygies(ring, gens).generators:
            assert ring.is_zero(sum((c * g[0] for c, g in zip(s, gens)), ring.zero))


def test_standard_monomials():
    R = PolynomialRing(["x", "y"])
    ideal = Ideal(R, [R.parse("x*y")])
    weights = WeightSystem.of([1, -1])
    assert standard_monomials(ideal, weights, (0,), 4) == [(0, 0)]
    assert standard_monomials(ideal, weights, (2,), 4) == [(2, 0)]


def test_budget_is_enforced():
    R = PolynomialRing(["x", "y"])
    ideal = Ideal(R, [R.parse("x^2 - y"), R.parse("x*y - 1")])
    with pytest.raises(BudgetExceededError) as excinfo:
        with budget_scope(Budget(max_steps=1)):
            ideal.groebner_basis()
    assert excinfo.value.exit_code == 2


def test_budget_usage_is_recorded():
    R = PolynomialRing(["x", "y"])
    budget = Budget()
    with budget_scope(budget):
        Ideal(R, [R.parse("x^2 - y"), R.parse("x*y - 1")]).groebner_basis()
    assert budget.usage()["steps"] > 0
