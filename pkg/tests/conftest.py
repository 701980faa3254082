import random

import pytest

from algebra.rings import GradedRing
from equivariant.q_construction import free_ring


@pytest.fixture
def node():
    return GradedRing(["x", "y"], [1, -1], ["x*y"], name="node")


@pytest.fixture
def atiyah1():
    return free_ring([1, -1], names=["x1", "y1"], name="atiyah1")


@pytest.fixture
def atiyah2():
    return free_ring([1, 1, -1, -1], names=["x1", "x2", "y1", "y2"], name="atiyah2")


@pytest.fixture
def mukai2():
    return GradedRing(["x1", "x2", "y1", "y2"], [1, 1, -1, -1], ["x1*y1 + x2*y2"], name="mukai2")


@pytest.fixture
def weighted():
    """Аффинное пространство с весами (2, 1, -1, -3)"""
    return free_ring([2, 1, -1, -3], name="affine_2_1_m1_m3")


@pytest.fixture
def rng():
    return random.Random(20240917)
