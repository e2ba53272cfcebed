"""Chow ring of the point-line incidence variety Phi in P^n x G(1,n).

A(Phi) is free of rank two over A(G(1,n)), generated by 1 and the pulled-back
hyperplane class ``zeta`` subject to ``zeta^2 = sigma_1*zeta - sigma_{1,1}``.
Elements are kept reduced as ``c0 + c1*zeta``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .schubert import ChowElement, chow_mul, degree_grassmannian, sigma, times_sigma1, times_sigma11


@dataclass(frozen=True)
class PhiElement:
    n: int
    c0: ChowElement
    c1: ChowElement

    def __post_init__(self):
        if self.c0.n != self.n or self.c1.n != self.n:
            raise ValueError("coefficients must live in A(G(1,n)) for the same n")

    @classmethod
    def constant(cls, e: ChowElement) -> PhiElement:
        return cls(e.n, e, ChowElement.zero(e.n))

    @classmethod
    def one(cls, n: int) -> PhiElement:
        return cls(n, ChowElement.one(n), ChowElement.zero(n))

    @classmethod
    def zeta(cls, n: int) -> PhiElement:
        return cls(n, ChowElement.zero(n), ChowElement.one(n))

    def is_zero(self) -> bool:
        return self.c0.is_zero() and self.c1.is_zero()

    def _check(self, other: PhiElement) -> None:
        if self.n != other.n:
            raise ValueError(f"elements of A(Phi) for different n: {self.n} vs {other.n}")

    def __add__(self, other: PhiElement) -> PhiElement:
        self._check(other)
        return PhiElement(self.n, self.c0 + other.c0, self.c1 + other.c1)

    def __neg__(self) -> PhiElement:
        return PhiElement(self.n, -self.c0, -self.c1)

    def __sub__(self, other: PhiElement) -> PhiElement:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return PhiElement(self.n, self.c0 * other, self.c1 * other)
        if isinstance(other, PhiElement):
            return phi_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __str__(self) -> str:
        parts = []
        if not self.c0.is_zero():
            parts.append(str(self.c0))
        if not self.c1.is_zero():
            parts.append(f"({self.c1})*z")
        return " + ".join(parts) if parts else "0"


def times_zeta(e: PhiElement) -> PhiElement:
    # (c0 + c1 z) z = -sigma_{1,1} c1 + (c0 + sigma_1 c1) z
    return PhiElement(e.n, -times_sigma11(e.c1), e.c0 + times_sigma1(e.c1))


def phi_mul(e1: PhiElement, e2: PhiElement) -> PhiElement:
    """Product in A(Phi), reduced with ``zeta^2 = sigma_1*zeta - sigma_{1,1}``."""
    e1._check(e2)
    n = e1.n
    low = chow_mul(e1.c0, e2.c0)
    mid = chow_mul(e1.c0, e2.c1) + chow_mul(e1.c1, e2.c0)
    high = chow_mul(e1.c1, e2.c1)
    return PhiElement(n, low - times_sigma11(high), mid + times_sigma1(high))


def phi_power(e: PhiElement, m: int) -> PhiElement:
    if m < 0:
        raise ValueError("exponent must be nonnegative")
    out = PhiElement.one(e.n)
    for _ in range(m):
        out = phi_mul(out, e)
    return out


def chern_factor(n: int, j: int, d: int) -> PhiElement:
    """``1 + j*sigma_1 + (d - 2j)*zeta``."""
    return PhiElement(n, ChowElement.one(n) + sigma(n, 1) * j, ChowElement.one(n) * (d - 2 * j))


def chern_total(n: int, d: int, k: int) -> PhiElement:
    """Total Chern class of the rank-k bundle of relative principal parts of O(d).

    This is the product over ``j = 0..k-1`` of ``1 + j*sigma_1 + (d-2j)*zeta``.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if d < 1 or k < 1:
        raise ValueError(f"d and k must be positive, got d={d}, k={k}")
    out = PhiElement.one(n)
    for j in range(k):
        out = phi_mul(out, chern_factor(n, j, d))
    return out


def top_grade_component(e: PhiElement, g: int) -> PhiElement:
    """The grade-``g`` part; a ``zeta`` term adds one to the grade of its coefficient."""
    return PhiElement(e.n, e.c0.homogeneous_part(g), e.c1.homogeneous_part(g - 1))


def pushforward(e: PhiElement) -> ChowElement:
    """Pushforward to G(1,n) along the P^1-bundle: kills ``c0`` and sends ``zeta`` to 1."""
    return e.c1


def degree_phi(e: PhiElement) -> int:
    return degree_grassmannian(pushforward(e))


def degree_vk_chern(n: int, d: int, k: int) -> int:
    """Degree of the k-flex locus as ``deg(c_k * zeta^(2n-1-k))`` on Phi."""
    if n < 2 or d < 1:
        raise ValueError(f"need n >= 2 and d >= 1, got n={n}, d={d}")
    if k < n + 1:
        raise ValueError(f"k={k} <= n={n}: the k-flex locus is the whole hypersurface, no Chern count applies")
    if k > d + 1:
        raise ValueError(f"k={k} > d+1={d + 1}: the flex stratification has stabilised at k=d+1")
    if k > 2 * n - 1:
        raise ValueError(f"k={k} > 2n-1={2 * n - 1}: the k-flex locus of a general hypersurface is empty")
    top = top_grade_component(chern_total(n, d, k), k)
    cycle = phi_mul(top, phi_power(PhiElement.zeta(n), 2 * n - 1 - k))
    return degree_phi(cycle)
