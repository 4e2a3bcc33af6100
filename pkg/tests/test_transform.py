import math
from fractions import Fraction as F

import pytest
import sympy

from polyvert.cones import Cone, PolyconicalFunction, tangent_cone
from polyvert.errors import PoleAt
from polyvert.transform import (TransformSum, TransformTerm, evaluate_transform, group_by_vertex,
                                is_zero, quadrature_oracle, simplicial_cone_transform, transform)
from polyvert.polyfun import from_weighted_union

from conftest import box, pt

Q = Cone((0, 0), [(1, 0), (0, 1)])


def sympy_zero(s):
    """Independent oracle: sympy cancels the rational part of each exponential."""
    z = sympy.symbols(f"z0:{s.ambient_dim}")

    def lin(v):
        return sum(sympy.Rational(a.numerator, a.denominator) * zi for a, zi in zip(v, z))

    parts = {}
    for t in s.terms:
        den = sympy.Mul(*[lin(w) for w in t.forms])
        parts[t.vertex] = parts.get(t.vertex, 0) + sympy.Rational(t.coeff.numerator, t.coeff.denominator) / den
    return all(sympy.cancel(sympy.together(p)) == 0 for p in parts.values())


def test_quadrant_term():
    t = simplicial_cone_transform(Q)
    assert t.coeff == 1 and set(t.forms) == {pt(1, 0), pt(0, 1)}
    assert evaluate_transform(TransformSum(2, (t,)), pt(-1, -2)) == {0: F(1, 2)}


def test_ray_term():
    t = simplicial_cone_transform(Cone((0,), [(1,)]))
    assert t.coeff == -1 and t.forms == (pt(1),)


def test_shifted_quadrant():
    s = transform(Cone((1, 2), [(1, 0), (0, 1)]))
    assert evaluate_transform(s, pt(-1, -2)) == {-5: F(1, 2)}


def test_line_cone_transform_is_empty():
    assert len(transform(Cone((0, 0), [(0, 1)], [(1, 0)]))) == 0


def test_triple_cone_is_zero(fig3):
    s = transform(tangent_cone(fig3, pt(0, 0)))
    assert is_zero(s, method="expand") and is_zero(s, method="grid")
    assert sympy_zero(s)


def test_reflex_corner_is_nonzero(lshape):
    s = transform(tangent_cone(lshape, pt(1, 1)))
    assert not is_zero(s, method="expand") and not is_zero(s, method="grid")
    assert not sympy_zero(s)


def test_group_by_vertex():
    a = TransformTerm(F(1), pt(0, 0), (pt(1, 0), pt(0, 1)))
    b = TransformTerm(F(1), pt(1, 0), (pt(1, 0), pt(0, 1)))
    assert len(group_by_vertex(TransformSum(2, (a, b)))) == 2
    assert len(group_by_vertex(TransformSum(2, (a, a)))) == 1
    assert group_by_vertex(TransformSum(2, ())) == {}


def test_is_zero_basics():
    assert is_zero(TransformSum(2, ()))
    assert not is_zero(transform(Q))


def test_evaluation_edge_cases():
    assert evaluate_transform(TransformSum(2, ()), pt(3, 4)) == {}
    with pytest.raises(PoleAt):
        evaluate_transform(transform(Q), pt(0, -1))


def test_square_closed_form(square):
    s = transform(square)
    z = sympy.symbols("z0:2")
    closed = (sympy.exp(z[0]) - 1) * (sympy.exp(z[1]) - 1) / (z[0] * z[1])
    for zz in [(-1, -2), (F(1, 3), F(-5, 7)), (2, 3)]:
        exact = evaluate_transform(s, zz)
        got = sum(sympy.Rational(c.numerator, c.denominator)
                  * sympy.exp(sympy.Rational(e.numerator, e.denominator)) for e, c in exact.items())
        want = closed.subs({z[0]: sympy.Rational(str(zz[0])), z[1]: sympy.Rational(str(zz[1]))})
        assert sympy.simplify(got - want) == 0


def test_routes_agree(lshape):
    a = transform(lshape, method="simplices")
    b = transform(lshape, method="cones")
    assert is_zero(a - b)


def test_quadrature_examples(square, lshape):
    i = from_weighted_union([(1, box([0], [1]))])
    assert quadrature_oracle(i, [1.0]) == pytest.approx(math.e - 1, rel=1e-12)
    assert quadrature_oracle(square, [1.0, 1.0]) == pytest.approx((math.e - 1) ** 2, rel=1e-12)
    assert quadrature_oracle(lshape, [0.0, 0.0]) == pytest.approx(3.0, rel=1e-12)


def test_float_evaluation_matches_exact(lshape):
    s = transform(lshape)
    z = (F(-1, 3), F(2, 7))
    assert evaluate_transform(s, [float(x) for x in z]) == pytest.approx(
        evaluate_transform(s, z).to_float(), rel=1e-12)


def test_polyconical_input():
    pf = PolyconicalFunction(pt(0, 0), ((1, Q), (-1, Q)))
    assert is_zero(transform(pf))


@pytest.mark.parametrize("i", range(0, 50, 7))
def test_zero_test_matches_symbolic_oracle(i):
    from test_acceptance import random_sum
    s, _ = random_sum(i)
    assert is_zero(s, method="grid", seed=i) == is_zero(s, method="expand") == sympy_zero(s)
