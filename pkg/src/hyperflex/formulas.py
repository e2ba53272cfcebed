"""Dimensions and degrees of k-flex loci of a general degree-d hypersurface in P^n.

Three independent routes produce the degree of V_k:

* ``lambda``: coefficients of ``d * prod_{j=1}^{k-1} (j X + d - 2j)`` against
  differences of binomials;
* ``mu``: the reversed coefficients against the Catalan triangle;
* ``chern``: the top Chern class of the principal-parts bundle on the
  incidence variety (see :mod:`hyperflex.chow_phi`).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial, prod

from .catalan import binomial, catalan_closed
from .chow_phi import degree_vk_chern


class LocusKind(enum.Enum):
    WHOLE_HYPERSURFACE = "whole_hypersurface"
    PROPER = "proper"
    EMPTY = "empty"


@dataclass(frozen=True)
class Locus:
    kind: LocusKind
    dim: int | None = None

    def __str__(self) -> str:
        if self.kind is LocusKind.PROPER:
            return f"PROPER(dim={self.dim})"
        return self.kind.name


WHOLE = Locus(LocusKind.WHOLE_HYPERSURFACE)
EMPTY = Locus(LocusKind.EMPTY)


def _check_dk(d: int, k: int) -> None:
    if d < 1 or k < 1:
        raise ValueError(f"d and k must be positive integers, got d={d}, k={k}")


def lambda_coeffs(d: int, k: int) -> list[int]:
    """Coefficients ``[lambda_0, ..., lambda_{k-1}]`` of ``d * prod_{j=1}^{k-1} (j X + (d - 2j))``.

    Entries can be negative once ``d < 2(k-1)``.
    """
    _check_dk(d, k)
    coeffs = [d]
    for j in range(1, k):
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += c * (d - 2 * j)
            nxt[i + 1] += c * j
        coeffs = nxt
    return coeffs


def mu_coeffs(d: int, k: int) -> list[int]:
    return lambda_coeffs(d, k)[::-1]


def mu_direct(d: int, k: int, ell: int) -> int:
    """``mu_ell(d,k)`` straight from the elementary symmetric sum over ``1 <= i_1 < ... < i_ell <= k-1``."""
    _check_dk(d, k)
    if not 0 <= ell <= k - 1:
        raise ValueError(f"ell must lie in [0, {k - 1}], got {ell}")
    total = Fraction(0)
    for subset in combinations(range(1, k), ell):
        total += Fraction(prod(d - 2 * i for i in subset), prod(subset))
    value = d * factorial(k - 1) * total
    if value.denominator != 1:
        raise ArithmeticError(f"mu_{ell}({d},{k}) = {value} is not an integer")
    return value.numerator


def negative_lambda_indices(d: int, k: int) -> list[int]:
    """Indices m with ``lambda_m(d,k) < 0``; empty when ``d >= 2(k-1)``."""
    return [m for m, c in enumerate(lambda_coeffs(d, k)) if c < 0]


def N_k_lambda(n: int, d: int, k: int) -> int:
    """Raw value of ``sum_{m=n-1}^{k-1} lambda_m (C(m,n-1) - C(m,n))``.

    No emptiness check is made here; see :func:`classify_locus`.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    lam = lambda_coeffs(d, k)
    return sum(lam[m] * (binomial(m, n - 1) - binomial(m, n)) for m in range(n - 1, k))


def N_k_mu(n: int, d: int, k: int) -> int:
    """``sum_{l=0}^{k-n} mu_l(d,k) C_1(n-1, k-n-l)``."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if k <= n:
        raise ValueError(f"the Catalan form needs k >= n+1, got n={n}, k={k}")
    mu = mu_coeffs(d, k)
    return sum(mu[ell] * catalan_closed(1, n - 1, k - n - ell) for ell in range(k - n + 1))


def effective_k(d: int, k: int) -> int:
    """Contact beyond ``d+1`` forces the line into V, so ``V_k = V_{d+1}`` for ``k > d+1``."""
    return min(k, d + 1)


def classify_locus(n: int, d: int, k: int) -> Locus:
    if n < 2 or d < 1 or k < 1:
        raise ValueError(f"need n >= 2, d >= 1, k >= 1, got n={n}, d={d}, k={k}")
    if k <= n:
        return WHOLE
    k = effective_k(d, k)
    if k <= n:
        # d < n: every point lies on a line of V
        return WHOLE
    if k > 2 * n - 1 or (k == 2 * n - 1 == d + 1):
        return EMPTY
    return Locus(LocusKind.PROPER, 2 * n - k - 1)


def dim_gamma_k(n: int, d: int, k: int) -> int:
    """Dimension of the incidence variety of (hypersurface, point, line) with contact >= k."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    big_n = binomial(n + d, n) - 1
    return big_n + 2 * n - min(k, d + 1) - 1


def ruled_locus(n: int, d: int) -> tuple[Locus, int]:
    """Class and degree of the union of lines on a general degree-d hypersurface."""
    if n < 2 or d < 1:
        raise ValueError(f"need n >= 2 and d >= 1, got n={n}, d={d}")
    if d >= 2 * n - 2:
        return EMPTY, 0
    if d < n:
        # covered by lines; the degree of V_infinity is that of V itself
        return WHOLE, d
    return Locus(LocusKind.PROPER, 2 * n - d - 2), N_k_lambda(n, d, d + 1)


def lines_on_general_hypersurface(n: int) -> int:
    """Number of lines on a general hypersurface of degree ``2n-3`` in P^n."""
    if n < 3:
        raise ValueError(f"line count needs n >= 3, got {n}")
    return N_k_lambda(n, 2 * n - 3, 2 * n - 2)


def flex_degree_closed(n: int, d: int) -> int:
    """Degree of the classical flex locus ``d^2 sum_{i=1}^n n!/i - d (n+1)!``."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if d < n:
        raise ValueError(f"closed flex degree needs d >= n, got n={n}, d={d}")
    harmonic = sum(factorial(n) // i for i in range(1, n + 1))
    return d * d * harmonic - d * factorial(n + 1)


def degree_polynomial(n: int, k: int) -> list[int]:
    """Integer coefficients ``[c_0, c_1, ...]`` of ``N_k(n, d)`` as a polynomial in d.

    Expands the product with ``d`` kept symbolic, so no interpolation is involved.
    """
    if n < 2 or k < 1:
        raise ValueError(f"need n >= 2 and k >= 1, got n={n}, k={k}")

    def padd(p, q):
        out = [0] * max(len(p), len(q))
        for i, c in enumerate(p):
            out[i] += c
        for i, c in enumerate(q):
            out[i] += c
        return out

    def pmul(p, q):
        out = [0] * (len(p) + len(q) - 1)
        for i, a in enumerate(p):
            for j, b in enumerate(q):
                out[i + j] += a * b
        return out

    # lam[m] is a polynomial in d (list of coefficients)
    lam = [[0, 1]]
    for j in range(1, k):
        nxt = [[0] for _ in range(len(lam) + 1)]
        for i, c in enumerate(lam):
            nxt[i] = padd(nxt[i], pmul(c, [-2 * j, 1]))
            nxt[i + 1] = padd(nxt[i + 1], pmul(c, [j]))
        lam = nxt
    total = [0]
    for m in range(n - 1, k):
        w = binomial(m, n - 1) - binomial(m, n)
        total = padd(total, [w * c for c in lam[m]])
    while len(total) > 1 and total[-1] == 0:
        total.pop()
    return total


def format_polynomial(coeffs: list[int], var: str = "d") -> str:
    parts = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


ROUTES = ("lambda", "mu", "chern")


@dataclass
class FlexReport:
    n: int
    d: int
    k: int
    effective_k: int
    locus: Locus
    degree: int
    routes: dict[str, int | None]
    route_errors: dict[str, str] = field(default_factory=dict)
    routes_agree: bool = True
    formula_value_when_empty: int | None = None

    @property
    def stabilized(self) -> bool:
        return self.effective_k != self.k

    def to_dict(self) -> dict:
        """JSON-ready dict; integers become decimal strings so no precision is lost."""

        def s(v):
            return None if v is None else str(v)

        return {
            "n": self.n,
            "d": self.d,
            "k": self.k,
            "effective_k": self.effective_k,
            "stabilized": self.stabilized,
            "locus": self.locus.kind.name,
            "dim": self.locus.dim,
            "degree": str(self.degree),
            "routes": {name: s(self.routes.get(name)) for name in ROUTES},
            "routes_agree": self.routes_agree,
            "formula_value_when_empty": s(self.formula_value_when_empty),
            "route_errors": dict(self.route_errors),
        }


def build_report(n: int, d: int, k: int) -> FlexReport:
    """Classify V_k and evaluate every route that is defined at ``(n, d, min(k, d+1))``."""
    locus = classify_locus(n, d, k)
    keff = effective_k(d, k)
    funcs = {"lambda": N_k_lambda, "mu": N_k_mu, "chern": degree_vk_chern}
    routes: dict[str, int | None] = {}
    errors: dict[str, str] = {}
    for name, fn in funcs.items():
        try:
            routes[name] = fn(n, d, keff)
        except ValueError as exc:
            routes[name] = None
            errors[name] = str(exc)
    computed = {v for v in routes.values() if v is not None}
    agree = len(computed) <= 1

    empty_value = None
    if locus.kind is LocusKind.PROPER:
        degree = routes["lambda"]
    elif locus.kind is LocusKind.WHOLE_HYPERSURFACE:
        degree = d
    else:
        degree = 0
        empty_value = routes["lambda"]
    return FlexReport(
        n=n,
        d=d,
        k=k,
        effective_k=keff,
        locus=locus,
        degree=degree,
        routes=routes,
        route_errors=errors,
        routes_agree=agree,
        formula_value_when_empty=empty_value,
    )
