"""Exact rank by fraction-free (Bareiss) elimination."""

from fractions import Fraction
from math import lcm


def _integer_rows(matrix):
    rows = []
    for row in matrix:
        row = [Fraction(x) for x in row]
        scale = lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * scale) for x in row])
    return rows


def rank(matrix) -> int:
    """Rank of a rational matrix.

    Rows are cleared to integers first; Bareiss's update then keeps every
    intermediate entry an exact integer.
    """
    a = _integer_rows(matrix)
    if not a:
        return 0
    m, n = len(a), len(a[0])
    r = 0
    prev = 1
    for col in range(n):
        pivot = next((i for i in range(r, m) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        p = a[r][col]
        for i in range(r + 1, m):
            for j in range(col + 1, n):
                a[i][j] = (p * a[i][j] - a[i][col] * a[r][j]) // prev
            a[i][col] = 0
        prev = p
        r += 1
        if r == m:
            break
    return r
