from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hyperflex.parser import PolynomialSyntaxError, infer_nvars, parse_point, parse_poly
from hyperflex.poly import MultiPoly


def x(i, n=3):
    return MultiPoly.variable(n, i)


def test_parse_examples():
    assert parse_poly("x0*x2 - x1^2", 3) == x(0) * x(2) - x(1) ** 2
    fermat = parse_poly("x0^3 + x1^3 + x2^3 + x3^3", 4)
    assert fermat == sum((MultiPoly.variable(4, i) ** 3 for i in range(4)), MultiPoly(4))
    assert parse_poly("2*x0 - 2*x0", 1).is_zero()


def test_parse_rationals_and_whitespace():
    p = parse_poly(" -1/2 * x0 ^ 2*x1 + 3 ", 2)
    assert p.terms == {(2, 1): Fraction(-1, 2), (0, 0): Fraction(3)}
    assert parse_poly("x1*x0*x1", 2) == parse_poly("x0*x1^2", 2)


@pytest.mark.parametrize(
    "text,pos",
    [("x0 + * x1", 5), ("x0 +", 4), ("x0 x1", 3), ("3/0*x0", 2), ("x0^", 3), ("x0 # x1", 3), ("", 0)],
)
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(PolynomialSyntaxError) as info:
        parse_poly(text, 2)
    assert info.value.position == pos


def test_unknown_variable_and_overflow():
    with pytest.raises(PolynomialSyntaxError, match="unknown variable"):
        parse_poly("x0 + x3", 3)
    with pytest.raises(PolynomialSyntaxError, match="exceeds"):
        parse_poly("x0^100000", 1)


def test_points_and_inference():
    assert parse_point("1,-1/2,0,3") == [1, Fraction(-1, 2), 0, 3]
    with pytest.raises(ValueError):
        parse_point("1,a")
    assert infer_nvars("x0 + x4^2") == 5


def test_homogeneity():
    assert parse_poly("x0*x1 + x2^2", 3).homogeneous_degree() == 2
    assert not parse_poly("x0 + x1^2", 2).is_homogeneous()
    with pytest.raises(ValueError):
        MultiPoly(2).homogeneous_degree()


def test_mismatched_rings():
    with pytest.raises(ValueError):
        x(0, 2) + x(0, 3)


small_polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
    st.fractions(min_value=-5, max_value=5, max_denominator=4),
    max_size=5,
).map(lambda t: MultiPoly(3, t))


@given(small_polys, small_polys, small_polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()


@given(small_polys)
def test_render_parse_roundtrip(p):
    assert parse_poly(p.to_string(), 3) == p


@given(small_polys, small_polys, st.lists(st.fractions(-3, 3, max_denominator=3), min_size=3, max_size=3))
def test_evaluation_is_a_homomorphism(a, b, pt):
    assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)
    assert (a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt)


@given(small_polys, st.lists(st.fractions(-3, 3, max_denominator=3), min_size=3, max_size=3),
       st.lists(st.fractions(-3, 3, max_denominator=3), min_size=3, max_size=3), st.fractions(-2, 2, max_denominator=5))
def test_restrict_to_line(p, base, direction, t):
    coeffs = p.restrict_to_line(base, direction)
    assert sum(c * t**i for i, c in enumerate(coeffs)) == p.evaluate([b + t * v for b, v in zip(base, direction)])


def test_compose():
    p = parse_poly("x0^2 - x1", 2)
    q = p.compose([parse_poly("x0 + x1", 2), parse_poly("x0*x1", 2)])
    assert q == parse_poly("x0^2 + x0*x1 + x1^2", 2)
