"""Contact orders of lines with explicit hypersurfaces.

For a homogeneous ``f`` of degree d and points ``x, y`` the Taylor
coefficients ``F_l`` are defined by ``f(x + t y) = sum_l F_l(x, y) t^l / l!``.
A line through ``p`` and ``q`` meets ``V(f)`` at ``p`` with order equal to the
t-adic valuation of ``f(p + t q)``.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from fractions import Fraction
from math import factorial

from .linalg import rank
from .poly import MultiPoly

INFINITE = math.inf


class ProjPoint:
    """A point of projective space given by rational homogeneous coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        coords = tuple(Fraction(c) for c in coords)
        if not coords or all(c == 0 for c in coords):
            raise ValueError("a projective point needs a nonzero coordinate")
        self.coords = coords

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def normalized(self) -> tuple[Fraction, ...]:
        lead = next(c for c in self.coords if c != 0)
        return tuple(c / lead for c in self.coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return same_point(self.coords, other.coords)

    def __hash__(self) -> int:
        return hash(self.normalized())

    def __repr__(self) -> str:
        return "ProjPoint(" + ", ".join(str(c) for c in self.coords) + ")"


def same_point(p: Sequence, q: Sequence) -> bool:
    """Projective equality: every 2x2 minor of the matrix with rows p, q vanishes."""
    if len(p) != len(q):
        raise ValueError("points live in different projective spaces")
    return all(p[i] * q[j] == p[j] * q[i] for i in range(len(p)) for j in range(i + 1, len(p)))


def _coords(pt) -> tuple[Fraction, ...]:
    return pt.coords if isinstance(pt, ProjPoint) else ProjPoint(pt).coords


def _degree(f: MultiPoly) -> int:
    if f.is_zero():
        raise ValueError("the zero polynomial does not define a hypersurface")
    if not f.is_homogeneous():
        raise ValueError("contact computations need a homogeneous polynomial")
    return f.total_degree()


def _check_dims(f: MultiPoly, *points) -> None:
    for pt in points:
        if len(pt) != f.nvars:
            raise ValueError(f"point has {len(pt)} coordinates, polynomial has {f.nvars} variables")


def taylor_coeffs(f: MultiPoly, x, y) -> list[Fraction]:
    """``[F_0(x,y), ..., F_d(x,y)]`` via expansion of ``f(x + t y)`` in t."""
    d = _degree(f)
    x, y = _coords(x), _coords(y)
    _check_dims(f, x, y)
    line = f.restrict_to_line(x, y)
    line += [Fraction(0)] * (d + 1 - len(line))
    return [factorial(ell) * c for ell, c in enumerate(line)]


def taylor_coeffs_differential(f: MultiPoly, x, y) -> list[Fraction]:
    """Same values as :func:`taylor_coeffs`, by iterating the directional derivative.

    ``F_l(x, y) = (sum_i y_i d/dx_i)^l f`` evaluated at ``x``.
    """
    d = _degree(f)
    x, y = _coords(x), _coords(y)
    _check_dims(f, x, y)
    out = []
    g = f
    for _ in range(d + 1):
        out.append(g.evaluate(x))
        nxt = MultiPoly(f.nvars)
        for i, yi in enumerate(y):
            if yi:
                nxt = nxt + g.derivative(i) * yi
        g = nxt
    return out


def _valuation(coeffs: Sequence[Fraction]) -> float | int:
    for i, c in enumerate(coeffs):
        if c != 0:
            return i
    return INFINITE


def contact_order(f: MultiPoly, p, q) -> int | float:
    """Order of contact at ``p`` of ``V(f)`` with the line through ``p`` and ``q``.

    Returns ``math.inf`` when the line lies on the hypersurface.
    """
    _degree(f)
    p, q = _coords(p), _coords(q)
    _check_dims(f, p, q)
    if same_point(p, q):
        raise ValueError("p and q coincide projectively; they do not span a line")
    return _valuation(f.restrict_to_line(p, q))


def is_kflex_line(f: MultiPoly, p, q, k: int) -> bool:
    """True iff ``F_0 .. F_{k-1}`` all vanish at ``(p, q)``."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    _degree(f)
    p, q = _coords(p), _coords(q)
    _check_dims(f, p, q)
    if same_point(p, q):
        raise ValueError("p and q coincide projectively; they do not span a line")
    coeffs = taylor_coeffs(f, p, q)
    return all(c == 0 for c in coeffs[:k])


def submersion_witness(n: int, truncated: bool = False) -> MultiPoly:
    """Affine ``x1 + x2 xn^2 + ... + x_{n-1} xn^(2n-4) + xn^(2n-1)`` in n variables.

    Variable ``x_j`` is stored at index ``j-1``. With ``truncated`` the last
    monomial ``xn^(2n-1)`` is dropped, leaving a polynomial of degree ``2n-3``.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    xn = MultiPoly.variable(n, n - 1)
    f = MultiPoly(n)
    for j in range(1, n):
        f = f + MultiPoly.variable(n, j - 1) * xn ** (2 * j - 2)
    if not truncated:
        f = f + xn ** (2 * n - 1)
    return f


def affine_contact_order(f: MultiPoly, base, direction) -> int | float:
    """t-adic valuation of ``f(base + t direction)`` for an affine polynomial."""
    if all(Fraction(c) == 0 for c in direction):
        raise ValueError("direction must be nonzero")
    return _valuation(f.restrict_to_line(base, direction))


def homogenize(f: MultiPoly) -> MultiPoly:
    """Prepend a variable ``x0`` so every term has the top total degree."""
    if f.is_zero():
        raise ValueError("cannot homogenize the zero polynomial")
    deg = f.total_degree()
    return MultiPoly(f.nvars + 1, {(deg - sum(e),) + e: c for e, c in f.terms.items()})


def witness_jacobian(n: int, truncated: bool = False) -> list[list[Fraction]]:
    """Jacobian at the origin of the Taylor coefficients of the witness along moving lines.

    The line near ``x_1 = ... = x_{n-1} = 0`` is ``t -> (x_j + t y_j, x_n + t)``.
    Rows are ``f_0 .. f_{2n-2}`` (``f_{2n-3}`` when truncated); columns are
    ordered ``x_1, y_1, ..., x_{n-1}, y_{n-1}, x_n``.
    """
    f = submersion_witness(n, truncated)
    # ambient ring: x_1..x_n, y_1..y_{n-1}, t
    nv = 2 * n
    t = MultiPoly.variable(nv, nv - 1)
    xs = [MultiPoly.variable(nv, j) for j in range(n)]
    ys = [MultiPoly.variable(nv, n + j) for j in range(n - 1)]
    subs = [xs[j] + t * ys[j] for j in range(n - 1)] + [xs[n - 1] + t]
    moved = f.compose(subs)

    columns = []
    for j in range(n - 1):
        columns += [j, n + j]
    columns.append(n - 1)

    nrows = 2 * n - 2 if truncated else 2 * n - 1
    jac = [[Fraction(0)] * len(columns) for _ in range(nrows)]
    for exp, c in moved.terms.items():
        power = exp[-1]
        if power >= nrows or sum(exp[:-1]) != 1:
            continue
        var = exp[:-1].index(1)
        jac[power][columns.index(var)] += c * factorial(power)
    return jac


def jacobian_rank_check(n: int, truncated: bool = False) -> tuple[list[list[Fraction]], int]:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    jac = witness_jacobian(n, truncated)
    return jac, rank(jac)
