"""Binomial coefficients and Catalan trapezoid numbers.

``C_a(u, v)`` is the entry in row ``u`` and column ``v`` of the Catalan
trapezoid of order ``a``. Order 1 is the usual Catalan triangle, and
``C_1(m, m)`` is the m-th Catalan number.
"""

from functools import lru_cache
from math import comb


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever ``k < 0``, ``k > n`` or ``n < 0``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def _check_order(a: int) -> None:
    if a < 1:
        raise ValueError(f"trapezoid order must be a positive integer, got {a}")


def catalan_closed(a: int, u: int, v: int) -> int:
    """Trapezoid entry from the binomial closed form."""
    _check_order(a)
    if u < 0 or v < 0:
        raise ValueError("row and column must be nonnegative")
    if v < a:
        return binomial(u + v, v)
    if v <= u + a - 1:
        return binomial(u + v, v) - binomial(u + v, v - a)
    return 0


@lru_cache(maxsize=64)
def _rows(a: int, u: int) -> tuple[tuple[int, ...], ...]:
    # Row r holds columns 0..r+a-1; everything right of that is zero.
    rows = [tuple([1] * a)]
    for r in range(1, u + 1):
        above = rows[-1]
        row = [1]
        for v in range(1, r + a):
            up = above[v] if v < len(above) else 0
            row.append(up + row[v - 1])
        rows.append(tuple(row))
    return tuple(rows)


def catalan_recursive(a: int, u: int, v: int) -> int:
    """Trapezoid entry from the additive recurrence ``C(u,v) = C(u-1,v) + C(u,v-1)``.

    Rows are built iteratively, so this is an independent check on
    :func:`catalan_closed` rather than a rewrite of it.
    """
    _check_order(a)
    if u < 0 or v < 0:
        raise ValueError("row and column must be nonnegative")
    if v > u + a - 1:
        return 0
    return _rows(a, u)[u][v]


def trapezoid(a: int, rows: int) -> list[list[int]]:
    """The first ``rows`` rows of the order-``a`` trapezoid (nonzero part only)."""
    _check_order(a)
    if rows < 1:
        return []
    return [list(r) for r in _rows(a, rows - 1)]


def catalan_number(m: int) -> int:
    return comb(2 * m, m) // (m + 1)
