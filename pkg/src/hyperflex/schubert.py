"""Schubert calculus on the Grassmannian G(1,n) of lines in P^n.

A class is stored as a sparse map ``(a, b) -> int`` over the Schubert basis
``sigma_{a,b}`` with ``0 <= b <= a <= n-1``. The grade of ``sigma_{a,b}`` is
``a + b`` and ``sigma_{n-1,n-1}`` is the class of a point.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping

from .catalan import catalan_closed

Index = tuple[int, int]


def is_valid_index(n: int, idx: Index) -> bool:
    a, b = idx
    return 0 <= b <= a <= n - 1


def _require_index(n: int, idx: Index) -> None:
    if n < 2:
        raise ValueError(f"ambient dimension must be >= 2, got {n}")
    if not is_valid_index(n, idx):
        raise ValueError(f"invalid Schubert index {idx} for G(1,{n}): need 0 <= b <= a <= {n - 1}")


class ChowElement:
    """An integer combination of Schubert classes of G(1,n).

    Instances are immutable. Indices outside ``0 <= b <= a <= n-1`` denote
    the zero class and are dropped on construction.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Index, int] | Iterable[tuple[Index, int]] = ()):
        if n < 2:
            raise ValueError(f"ambient dimension must be >= 2, got {n}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Index, int] = {}
        for (a, b), c in items:
            if a < 0 or b < 0:
                raise ValueError(f"negative Schubert index {(a, b)}")
            if not is_valid_index(n, (a, b)) or c == 0:
                continue
            acc[(a, b)] = acc.get((a, b), 0) + c
        self.n = n
        self._terms = {k: c for k, c in sorted(acc.items()) if c != 0}

    @classmethod
    def zero(cls, n: int) -> ChowElement:
        return cls(n)

    @classmethod
    def one(cls, n: int) -> ChowElement:
        return cls(n, {(0, 0): 1})

    @property
    def terms(self) -> dict[Index, int]:
        return dict(self._terms)

    def coefficient(self, a: int, b: int) -> int:
        return self._terms.get((a, b), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def grades(self) -> set[int]:
        return {a + b for a, b in self._terms}

    def homogeneous_part(self, g: int) -> ChowElement:
        return ChowElement(self.n, {k: c for k, c in self._terms.items() if sum(k) == g})

    def _check(self, other: ChowElement) -> None:
        if not isinstance(other, ChowElement):
            raise TypeError(f"expected ChowElement, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"classes live in different rings: G(1,{self.n}) vs G(1,{other.n})")

    def __add__(self, other: ChowElement) -> ChowElement:
        self._check(other)
        merged = dict(self._terms)
        for k, c in other._terms.items():
            merged[k] = merged.get(k, 0) + c
        return ChowElement(self.n, merged)

    def __neg__(self) -> ChowElement:
        return ChowElement(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: ChowElement) -> ChowElement:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ChowElement(self.n, {k: other * c for k, c in self._terms.items()})
        if isinstance(other, ChowElement):
            return chow_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChowElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, tuple(self._terms.items())))

    def __repr__(self) -> str:
        return f"ChowElement({self.n}, {self._terms!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        # highest grade first, then lexicographic on (a, b) descending
        for (a, b), c in sorted(self._terms.items(), key=lambda kv: (-sum(kv[0]), -kv[0][0])):
            mono = f"s[{a},{b}]"
            if c == 1:
                body = mono
            elif c == -1:
                body = "-" + mono
            else:
                body = f"{c}*{mono}"
            out.append(body)
        text = " + ".join(out)
        return text.replace("+ -", "- ")


def sigma(n: int, a: int, b: int = 0) -> ChowElement:
    """The Schubert class ``sigma_{a,b}``; zero when ``a >= n`` or ``b > a``."""
    return ChowElement(n, {(a, b): 1})


def chow_add(e1: ChowElement, e2: ChowElement) -> ChowElement:
    return e1 + e2


def chow_scale(c: int, e: ChowElement) -> ChowElement:
    return e * c


def pieri_sigma1(n: int, idx: Index) -> ChowElement:
    """Product ``sigma_{a,b} * sigma_1`` by Pieri's rule for lines."""
    _require_index(n, idx)
    a, b = idx
    if b + 1 <= a <= n - 2:
        return ChowElement(n, {(a + 1, b): 1, (a, b + 1): 1})
    if b + 1 <= a == n - 1:
        return ChowElement(n, {(a, b + 1): 1})
    if b + 1 > a and a <= n - 2:
        return ChowElement(n, {(a + 1, b): 1})
    return ChowElement.zero(n)


def times_sigma1(e: ChowElement) -> ChowElement:
    """Multiply by ``sigma_1``, extending :func:`pieri_sigma1` linearly."""
    acc: dict[Index, int] = {}
    for idx, c in e._terms.items():
        for k, v in pieri_sigma1(e.n, idx)._terms.items():
            acc[k] = acc.get(k, 0) + c * v
    return ChowElement(e.n, acc)


def times_sigma11(e: ChowElement) -> ChowElement:
    """Multiply by ``sigma_{1,1}``: each ``sigma_{a,b}`` moves to ``sigma_{a+1,b+1}``."""
    return ChowElement(e.n, {(a + 1, b + 1): c for (a, b), c in e._terms.items()})


def mul_sigma1_power_iter(n: int, idx: Index, m: int) -> ChowElement:
    """``sigma_{a,b} * sigma_1^m`` by ``m`` successive Pieri steps."""
    _require_index(n, idx)
    if m < 0:
        raise ValueError("exponent must be nonnegative")
    e = sigma(n, *idx)
    for _ in range(m):
        e = times_sigma1(e)
    return e


def mul_sigma1_power_closed(n: int, idx: Index, m: int) -> ChowElement:
    """``sigma_{a,b} * sigma_1^m`` in one step, with Catalan trapezoid multiplicities.

    The coefficient of ``sigma_{a+m-i, b+i}`` is ``C_{a-b+1}(m-i, i)``.
    """
    _require_index(n, idx)
    if m < 0:
        raise ValueError("exponent must be nonnegative")
    a, b = idx
    order = a - b + 1
    terms = {}
    for i in range(m + 1):
        top, bottom = a + m - i, b + i
        if bottom <= top <= n - 1:
            terms[(top, bottom)] = catalan_closed(order, m - i, i)
    return ChowElement(n, terms)


def times_special(e: ChowElement, p: int) -> ChowElement:
    """Multiply by the special class ``sigma_p`` (general Pieri rule).

    ``sigma_p * sigma_{c,d}`` is the sum of ``sigma_{c+i,d+j}`` over
    ``i + j = p`` with ``d + j <= c``, truncated to the box.
    """
    if p < 0:
        raise ValueError("special class index must be nonnegative")
    acc: dict[Index, int] = {}
    for (c, d), coeff in e._terms.items():
        for j in range(0, min(p, c - d) + 1):
            key = (c + p - j, d + j)
            acc[key] = acc.get(key, 0) + coeff
    return ChowElement(e.n, acc)


def chow_mul(e1: ChowElement, e2: ChowElement) -> ChowElement:
    """Product in A(G(1,n)).

    Uses ``sigma_{a,b} = sigma_{1,1}^b * sigma_{a-b}``, so every product
    reduces to the special Pieri rule followed by diagonal shifts.
    """
    e1._check(e2)
    n = e1.n
    acc = ChowElement.zero(n)
    for (a, b), c in e1._terms.items():
        part = times_special(e2, a - b)
        for _ in range(b):
            part = times_sigma11(part)
        acc = acc + part * c
    return acc


def degree_grassmannian(e: ChowElement) -> int:
    """Degree map: the coefficient of the point class ``sigma_{n-1,n-1}``."""
    return e.coefficient(e.n - 1, e.n - 1)
