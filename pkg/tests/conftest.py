from fractions import Fraction as F

import pytest

from polyvert.cones import Cone, cones_function
from polyvert.kernel import ConvexPolyhedron
from polyvert.polyfun import from_weighted_union


def box(lo, hi):
    return ConvexPolyhedron.box([F(x) for x in lo], [F(x) for x in hi])


def pt(*xs):
    return tuple(F(x) for x in xs)


@pytest.fixture
def square():
    return from_weighted_union([(1, box([0, 0], [1, 1]))])


@pytest.fixture
def lshape():
    return from_weighted_union([(1, box([0, 0], [2, 2])), (-1, box([1, 1], [2, 2]))])


@pytest.fixture
def cube():
    return from_weighted_union([(1, box([0, 0, 0], [1, 1, 1]))])


def triple_cone():
    sectors = [[(1, 0), (1, 1)], [(0, 1), (-1, 0)], [(-1, -1), (0, -1)]]
    return cones_function([(1, Cone((0, 0), s)) for s in sectors], 2)


@pytest.fixture
def fig3():
    return triple_cone()
