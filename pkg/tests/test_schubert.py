import itertools

import pytest
from hypothesis import given, settings, strategies as st

from hyperflex.catalan import catalan_closed, catalan_number
from hyperflex.schubert import (
    ChowElement,
    chow_add,
    chow_mul,
    chow_scale,
    degree_grassmannian,
    mul_sigma1_power_closed,
    mul_sigma1_power_iter,
    pieri_sigma1,
    sigma,
    times_sigma1,
    times_sigma11,
)


def s(n, a, b=0):
    return sigma(n, a, b)


def test_pieri_cases():
    assert pieri_sigma1(3, (2, 1)) == s(3, 2, 2)
    assert pieri_sigma1(3, (2, 2)).is_zero()
    assert pieri_sigma1(3, (1, 1)) == s(3, 2, 1)
    assert pieri_sigma1(4, (2, 0)) == s(4, 3, 0) + s(4, 2, 1)


@pytest.mark.parametrize("idx", [(1, 2), (3, 0), (-1, 0)])
def test_pieri_rejects_invalid(idx):
    with pytest.raises(ValueError):
        pieri_sigma1(3, idx)


def test_iterated_examples():
    assert mul_sigma1_power_iter(3, (0, 0), 3) == s(3, 2, 1) * 2
    assert mul_sigma1_power_iter(3, (0, 0), 0) == s(3, 0, 0)
    assert mul_sigma1_power_iter(4, (0, 0), 6).coefficient(3, 3) == 5


def test_closed_examples():
    assert mul_sigma1_power_closed(3, (1, 0), 2) == s(3, 2, 1) * 2
    assert mul_sigma1_power_closed(3, (1, 0), 3) == s(3, 2, 2) * 2
    for n in range(2, 6):
        for a in range(n):
            for b in range(a + 1):
                assert mul_sigma1_power_closed(n, (a, b), 0) == s(n, a, b)


def test_degree_map():
    assert degree_grassmannian(s(3, 2, 2) * 2) == 2
    assert degree_grassmannian(s(3, 2, 1)) == 0
    assert degree_grassmannian(mul_sigma1_power_iter(5, (0, 0), 8)) == 14


def test_add_and_scale():
    assert (s(3, 2, 1) + chow_scale(-1, s(3, 2, 1))).is_zero()
    assert chow_scale(3, s(3, 2) + s(3, 1, 1)) == s(3, 2) * 3 + s(3, 1, 1) * 3
    e = s(4, 2, 1) * 7 - s(4, 3)
    assert chow_add(e, ChowElement.zero(4)) == e
    with pytest.raises(ValueError):
        s(3, 1) + s(4, 1)


def test_out_of_box_indices_are_zero():
    assert s(3, 3, 0).is_zero()
    assert s(3, 1, 2).is_zero()
    assert str(s(3, 2, 1) * 2 + s(3, 2, 0)) == "2*s[2,1] + s[2,0]"


def test_oracle_equivalence_all_small_cases():
    for n in range(2, 9):
        for a in range(n):
            for b in range(a + 1):
                for m in range(2 * n + 1):
                    it = mul_sigma1_power_iter(n, (a, b), m)
                    assert it == mul_sigma1_power_closed(n, (a, b), m), (n, a, b, m)
                    assert it.grades() <= {a + b + m}


def test_top_power_is_catalan():
    for n in range(2, 9):
        assert degree_grassmannian(mul_sigma1_power_iter(n, (0, 0), 2 * n - 2)) == catalan_number(n - 1)


def test_special_class_times_sigma1_power():
    for n in range(2, 8):
        for k in range(n + 1, 2 * n):
            for ell in range(k - n + 1):
                got = mul_sigma1_power_iter(n, (2 * n - k - 1 + ell, 0), k - 1 - ell)
                assert got == s(n, n - 1, n - 1) * catalan_closed(1, n - 1, k - n - ell)


def chow_elements(n):
    idx = [(a, b) for a in range(n) for b in range(a + 1)]
    return st.dictionaries(st.sampled_from(idx), st.integers(-4, 4), max_size=4).map(lambda t: ChowElement(n, t))


@st.composite
def chow_triples(draw):
    n = draw(st.integers(2, 6))
    return tuple(draw(chow_elements(n)) for _ in range(3))


@settings(max_examples=60)
@given(chow_triples())
def test_general_product_is_commutative_associative(triple):
    x, y, z = triple
    assert chow_mul(x, y) == chow_mul(y, x)
    assert chow_mul(chow_mul(x, y), z) == chow_mul(x, chow_mul(y, z))
    assert chow_mul(x, y + z) == chow_mul(x, y) + chow_mul(x, z)


def test_product_agrees_with_pieri_and_shift():
    for n in range(2, 7):
        for a in range(n):
            for b in range(a + 1):
                e = s(n, a, b)
                assert chow_mul(s(n, 1), e) == times_sigma1(e)
                assert chow_mul(s(n, 1, 1), e) == times_sigma11(e)
                # sigma_{1,1} = sigma_1^2 - sigma_2
                assert times_sigma11(e) == times_sigma1(times_sigma1(e)) - chow_mul(s(n, 2), e)


def test_poincare_duality():
    # sigma_{a,b} pairs to 1 exactly with sigma_{n-1-b, n-1-a}
    for n in range(2, 7):
        idx = [(a, b) for a in range(n) for b in range(a + 1)]
        for (a, b), (c, d) in itertools.product(idx, idx):
            if a + b + c + d != 2 * n - 2:
                continue
            expected = 1 if (c, d) == (n - 1 - b, n - 1 - a) else 0
            assert degree_grassmannian(chow_mul(s(n, a, b), s(n, c, d))) == expected
