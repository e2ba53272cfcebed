import random

import pytest

from hyperflex.chow_phi import (
    PhiElement,
    chern_total,
    degree_phi,
    degree_vk_chern,
    phi_mul,
    phi_power,
    pushforward,
    times_zeta,
    top_grade_component,
)
from hyperflex.formulas import N_k_lambda
from hyperflex.schubert import ChowElement, mul_sigma1_power_iter, sigma


def const(e):
    return PhiElement.constant(e)


def Z(n):
    return PhiElement.zeta(n)


def test_zeta_relation():
    for n in range(2, 8):
        z = Z(n)
        lhs = phi_mul(z, z) + const(sigma(n, 1, 1)) - phi_mul(const(sigma(n, 1)), z)
        assert lhs.is_zero()


def test_identity_and_example():
    n = 3
    e = PhiElement(n, sigma(n, 2) - sigma(n, 1, 1) * 4, sigma(n, 1) * 3)
    assert phi_mul(PhiElement.one(n), e) == e
    got = phi_mul(Z(n), phi_mul(const(sigma(n, 1)), Z(n)))
    assert got == PhiElement(n, -sigma(n, 2, 1), sigma(n, 2) + sigma(n, 1, 1))


def test_mixed_ring_rejected():
    with pytest.raises(ValueError):
        phi_mul(Z(3), Z(4))


def random_subring_element(rng, n):
    """Random polynomial in sigma_1 and zeta."""
    out = PhiElement(n, ChowElement.zero(n), ChowElement.zero(n))
    s1, z = const(sigma(n, 1)), Z(n)
    for _ in range(rng.randint(1, 3)):
        i, j = rng.randint(0, 3), rng.randint(0, 3)
        out = out + phi_mul(phi_power(s1, i), phi_power(z, j)) * rng.randint(-3, 3)
    return out


def test_ring_axioms_random():
    rng = random.Random(7)
    for _ in range(120):
        n = rng.randint(2, 6)
        x, y, w = (random_subring_element(rng, n) for _ in range(3))
        assert phi_mul(x, y) == phi_mul(y, x)
        assert phi_mul(phi_mul(x, y), w) == phi_mul(x, phi_mul(y, w))


def test_times_zeta_matches_product():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(2, 6)
        e = random_subring_element(rng, n)
        assert times_zeta(e) == phi_mul(e, Z(n))


def test_zeta_pushes_forward_to_segre_classes():
    # zeta^a pushes forward to s_{a-1}(S) = sigma_{a-1}, zero past the box
    for n in range(2, 7):
        for a in range(1, 2 * n):
            assert pushforward(phi_power(Z(n), a)) == sigma(n, a - 1)


def test_zeta_power_vanishes_past_n():
    for n in range(2, 7):
        assert phi_power(Z(n), n + 1).is_zero()
        assert not phi_power(Z(n), n).is_zero()


def test_chern_total_low_grades():
    n, d = 4, 7
    assert chern_total(n, d, 1) == PhiElement(n, ChowElement.one(n), ChowElement.one(n) * d)
    grade1 = top_grade_component(chern_total(n, d, 2), 1)
    assert grade1 == PhiElement(n, sigma(n, 1), ChowElement.one(n) * (2 * d - 2))
    with pytest.raises(ValueError):
        chern_total(n, 0, 2)
    with pytest.raises(ValueError):
        chern_total(n, 3, 0)


def test_top_grade_component_examples():
    n, d = 3, 5
    e = PhiElement(n, ChowElement.one(n), ChowElement.one(n) * d)
    assert top_grade_component(e, 1) == PhiElement(n, ChowElement.zero(n), ChowElement.one(n) * d)
    assert top_grade_component(e, 0) == PhiElement.one(n)
    rel = PhiElement(n, -sigma(n, 1, 1), sigma(n, 1))
    assert top_grade_component(rel, 2) == rel


def test_degree_phi_examples():
    for n in range(2, 6):
        point = sigma(n, n - 1, n - 1)
        assert degree_phi(PhiElement(n, ChowElement.zero(n), point)) == 1
        assert degree_phi(const(point)) == 0
    n = 3
    e = phi_mul(phi_power(Z(n), 2), const(mul_sigma1_power_iter(n, (0, 0), 3)))
    assert degree_phi(e) == 2


def test_cycle_is_pure_top_grade():
    for n in range(2, 6):
        for k in range(n + 1, 2 * n):
            d = k + 1
            top = top_grade_component(chern_total(n, d, k), k)
            cycle = phi_mul(top, phi_power(Z(n), 2 * n - 1 - k))
            assert cycle.c0.grades() <= {2 * n - 1}
            assert cycle.c1.grades() <= {2 * n - 2}


@pytest.mark.parametrize("n,d,k,expected", [(2, 3, 3, 9), (3, 3, 4, 27), (4, 5, 6, 2875)])
def test_chern_route_examples(n, d, k, expected):
    assert degree_vk_chern(n, d, k) == expected


@pytest.mark.parametrize("n,d,k", [(3, 5, 3), (3, 3, 5), (3, 9, 6)])
def test_chern_route_out_of_range(n, d, k):
    with pytest.raises(ValueError):
        degree_vk_chern(n, d, k)


def test_chern_route_matches_lambda():
    for n in range(2, 6):
        for k in range(n + 1, 2 * n):
            for d in range(k - 1, k + 4):
                assert degree_vk_chern(n, d, k) == N_k_lambda(n, d, k)
