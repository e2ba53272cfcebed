"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from fractions import Fraction
from numbers import Rational

Exponent = tuple[int, ...]


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class MultiPoly:
    """Polynomial in ``x0 .. x{nvars-1}`` stored as ``{exponent tuple: Fraction}``.

    Zero coefficients are never stored, so two polynomials are equal iff their
    term maps are equal.
    """

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        acc: dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for {nvars} variables")
            c = _as_fraction(c)
            if c:
                acc[exp] = acc.get(exp, Fraction(0)) + c
        self._terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def constant(cls, nvars: int, c) -> MultiPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> MultiPoly:
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): 1})

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def homogeneous_degree(self) -> int:
        """Common total degree; raises if the polynomial is zero or not homogeneous."""
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        if not self.is_homogeneous():
            raise ValueError("polynomial is not homogeneous")
        return self.total_degree()

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        return MultiPoly.constant(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, Fraction(0)) + c
        return MultiPoly(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        acc: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        if not isinstance(m, int) or m < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = MultiPoly.constant(self.nvars, 1)
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def derivative(self, i: int) -> MultiPoly:
        acc = {}
        for e, c in self._terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                acc[tuple(ne)] = c * e[i]
        return MultiPoly(self.nvars, acc)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} coordinates, got {len(point)}")
        pt = [_as_fraction(v) for v in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for v, k in zip(pt, e):
                if k:
                    term *= v**k
            total += term
        return total

    def compose(self, subs: Sequence[MultiPoly]) -> MultiPoly:
        """Substitute ``subs[i]`` for ``x_i``; all substitutes share one target ring."""
        if len(subs) != self.nvars:
            raise ValueError(f"need {self.nvars} substitutions, got {len(subs)}")
        if not subs:
            return self
        target = subs[0].nvars
        powers: list[dict[int, MultiPoly]] = [{0: MultiPoly.constant(target, 1)} for _ in subs]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * subs[i]
            return cache[k]

        out = MultiPoly(target)
        for e, c in self._terms.items():
            term = MultiPoly.constant(target, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def restrict_to_line(self, base: Sequence, direction: Sequence) -> list[Fraction]:
        """Coefficients in t of ``f(base + t*direction)``, lowest degree first, trailing zeros trimmed."""
        if len(base) != self.nvars or len(direction) != self.nvars:
            raise ValueError(f"points must have {self.nvars} coordinates")
        lines = [(_as_fraction(p), _as_fraction(q)) for p, q in zip(base, direction)]
        cache: dict[tuple[int, int], list[Fraction]] = {}

        def lin_pow(i, k):
            key = (i, k)
            if key not in cache:
                if k == 0:
                    cache[key] = [Fraction(1)]
                else:
                    prev = lin_pow(i, k - 1)
                    p, q = lines[i]
                    out = [Fraction(0)] * (len(prev) + 1)
                    for j, c in enumerate(prev):
                        out[j] += c * p
                        out[j + 1] += c * q
                    cache[key] = out
            return cache[key]

        deg = max(self.total_degree(), 0)
        coeffs = [Fraction(0)] * (deg + 1)
        for e, c in self._terms.items():
            term = [c]
            for i, k in enumerate(e):
                if k:
                    lp = lin_pow(i, k)
                    nxt = [Fraction(0)] * (len(term) + len(lp) - 1)
                    for a, x in enumerate(term):
                        if x:
                            for b, y in enumerate(lp):
                                nxt[a + b] += x * y
                    term = nxt
            for j, x in enumerate(term):
                coeffs[j] += x
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return coeffs

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self._terms!r})"

    def to_string(self, names: Sequence[str] | None = None) -> str:
        """Render in the same grammar :func:`hyperflex.parser.parse_poly` reads."""
        if names is None:
            names = [f"x{i}" for i in range(self.nvars)]
        if not self._terms:
            return "0"
        chunks = []
        for e in sorted(self._terms, key=lambda e: (-sum(e), tuple(-k for k in e))):
            c = self._terms[e]
            factors = []
            for name, k in zip(names, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            chunks.append(("-" if c < 0 else "+", body))
        sign, body = chunks[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text

    __str__ = to_string
