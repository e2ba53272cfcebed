import pytest
from hypothesis import given, strategies as st

from hyperflex.catalan import binomial, catalan_closed, catalan_number, catalan_recursive, trapezoid
from hyperflex.verify import CATALAN_TABLES


@pytest.mark.parametrize("n,k,expected", [(5, 2, 10), (3, 5, 0), (4, 0, 1), (3, -1, 0), (-2, 1, 0), (0, 0, 1)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


@pytest.mark.parametrize(
    "fn,a,u,v,expected",
    [
        (catalan_closed, 2, 3, 3, 14),
        (catalan_closed, 3, 5, 5, 207),
        (catalan_closed, 2, 1, 3, 0),
        (catalan_recursive, 3, 4, 4, 62),
        (catalan_recursive, 1, 7, 0, 1),
        (catalan_recursive, 2, 4, 5, 42),
    ],
)
def test_examples(fn, a, u, v, expected):
    assert fn(a, u, v) == expected


@pytest.mark.parametrize("a", sorted(CATALAN_TABLES))
def test_printed_tables(a):
    assert trapezoid(a, 6) == CATALAN_TABLES[a]


@pytest.mark.parametrize("fn", [catalan_closed, catalan_recursive])
def test_order_zero_rejected(fn):
    with pytest.raises(ValueError):
        fn(0, 1, 1)


@given(st.integers(1, 6), st.integers(0, 30), st.integers(0, 30))
def test_closed_matches_recursive(a, u, v):
    value = catalan_closed(a, u, v)
    assert value == catalan_recursive(a, u, v)
    assert value >= 0


@given(st.integers(1, 6), st.integers(0, 20), st.integers(0, 20))
def test_zero_beyond_trapezoid(a, u, extra):
    assert catalan_recursive(a, u, u + a + extra) == 0


def test_catalan_triangle_diagonal():
    for m in range(21):
        assert catalan_closed(1, m, m) == catalan_number(m)
    for u in range(1, 25):
        assert catalan_recursive(1, u, u) == catalan_recursive(1, u, u - 1)


def test_recursive_is_cache_transparent():
    first = [catalan_recursive(4, 9, v) for v in range(13)]
    catalan_recursive(4, 25, 3)
    assert [catalan_recursive(4, 9, v) for v in range(13)] == first
