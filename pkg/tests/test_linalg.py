import random
from fractions import Fraction

import sympy

from hyperflex.linalg import rank


def test_small_cases():
    assert rank([]) == 0
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[0, 1, 2], [0, 2, 5], [0, 0, 0]]) == 2
    assert rank([[Fraction(1, 2), Fraction(1, 3)], [3, 2]]) == 1


def test_matches_sympy_on_random_matrices():
    rng = random.Random(11)
    for _ in range(200):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        r = rng.randint(0, min(m, n))
        # product of random m x r and r x n factors has rank <= r
        left = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(r)] for _ in range(m)]
        right = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)] for _ in range(r)]
        mat = [[sum((left[i][t] * right[t][j] for t in range(r)), Fraction(0)) for j in range(n)] for i in range(m)]
        assert rank(mat) == sympy.Matrix(mat).rank()
