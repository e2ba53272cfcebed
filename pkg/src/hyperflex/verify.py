"""Cross-route property suites, runnable from the command line.

Each suite returns a :class:`SuiteResult` listing counterexamples rather than
raising, so a single run reports every failure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import catalan, contact, formulas, schubert
from .chow_phi import degree_vk_chern
from .poly import MultiPoly

# Degree of V_k as a polynomial in d, lowest power first, for n <= 6 and
# n+1 <= k <= 2n-1. Cells with k >= 2n are empty loci (degree 0).
KNOWN_DEGREE_POLYNOMIALS = {
    (2, 3): [0, -6, 3],
    (3, 4): [0, -24, 11],
    (3, 5): [0, 240, -200, 35],
    (4, 5): [0, -120, 50],
    (4, 6): [0, 1800, -1370, 225],
    (4, 7): [0, -25200, 26460, -8120, 735],
    (5, 6): [0, -720, 274],
    (5, 7): [0, 15120, -10584, 1624],
    (5, 8): [0, -282240, 274428, -78792, 6769],
    (5, 9): [0, 5080320, -6136704, 2480604, -403704, 22449],
    (6, 7): [0, -5040, 1764],
    (6, 8): [0, 141120, -91476, 13132],
    (6, 9): [0, -3386880, 3068352, -826868, 67284],
    (6, 10): [0, 76204800, -86232384, 32835600, -5065760, 269325],
    (6, 11): [0, -1676505600, 2232014400, -1071300384, 235466000, -23918510, 902055],
}
EMPTY_TABLE_CELLS = [(2, 4), (2, 5), (3, 6), (5, 10)]

CATALAN_TABLES = {
    2: [
        [1, 1],
        [1, 2, 2],
        [1, 3, 5, 5],
        [1, 4, 9, 14, 14],
        [1, 5, 14, 28, 42, 42],
        [1, 6, 20, 48, 90, 132, 132],
    ],
    3: [
        [1, 1, 1],
        [1, 2, 3, 3],
        [1, 3, 6, 9, 9],
        [1, 4, 10, 19, 28, 28],
        [1, 5, 15, 34, 62, 90, 90],
        [1, 6, 21, 55, 117, 207, 297, 297],
    ],
}

FACTORIZATION = (5, 53, 8, 42436258837, (7, 53, 114383447))


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, message: str) -> None:
        self.checks += 1
        if not condition and len(self.failures) < 50:
            self.failures.append(message)


def eval_poly(coeffs, x):
    return sum(c * x**i for i, c in enumerate(coeffs))


def table_sample_ds(k: int) -> list[int]:
    return [d for d in (k - 1, k, k + 1, k + 5, k + 10) if k <= d + 1]


def suite_catalan() -> SuiteResult:
    res = SuiteResult("catalan")
    for a, rows in CATALAN_TABLES.items():
        for u, row in enumerate(rows):
            for v, expected in enumerate(row + [0]):
                for fn in (catalan.catalan_closed, catalan.catalan_recursive):
                    got = fn(a, u, v)
                    res.check(got == expected, f"{fn.__name__}({a},{u},{v}) = {got}, table says {expected}")
    for a in range(1, 7):
        for u in range(31):
            for v in range(31):
                c, r = catalan.catalan_closed(a, u, v), catalan.catalan_recursive(a, u, v)
                res.check(c == r, f"C_{a}({u},{v}): closed {c} != recursive {r}")
                res.check(c >= 0, f"C_{a}({u},{v}) = {c} is negative")
    for m in range(21):
        got = catalan.catalan_closed(1, m, m)
        res.check(got == catalan.catalan_number(m), f"C_1({m},{m}) = {got} is not the Catalan number")
        if m >= 1:
            res.check(got == catalan.catalan_closed(1, m, m - 1), f"C_1({m},{m}) != C_1({m},{m - 1})")
    return res


def suite_pieri() -> SuiteResult:
    res = SuiteResult("pieri")
    for n in range(2, 9):
        for a in range(n):
            for b in range(a + 1):
                for m in range(2 * n + 1):
                    it = schubert.mul_sigma1_power_iter(n, (a, b), m)
                    cl = schubert.mul_sigma1_power_closed(n, (a, b), m)
                    res.check(it == cl, f"n={n} s[{a},{b}]*s1^{m}: iterated {it} != closed {cl}")
                    res.check(it.grades() <= {a + b + m}, f"n={n} s[{a},{b}]*s1^{m} not homogeneous")
        top = schubert.mul_sigma1_power_iter(n, (0, 0), 2 * n - 2)
        res.check(
            schubert.degree_grassmannian(top) == catalan.catalan_number(n - 1),
            f"deg s1^{2 * n - 2} on G(1,{n}) is not Catalan({n - 1})",
        )
    for n in range(2, 8):
        point = schubert.sigma(n, n - 1, n - 1)
        for k in range(n + 1, 2 * n):
            for ell in range(k - n + 1):
                got = schubert.mul_sigma1_power_iter(n, (2 * n - k - 1 + ell, 0), k - 1 - ell)
                want = point * catalan.catalan_closed(1, n - 1, k - n - ell)
                res.check(got == want, f"n={n} k={k} l={ell}: {got} != {want}")
    return res


def suite_routes(max_n: int = 7, max_d: int = 15) -> SuiteResult:
    res = SuiteResult("routes")
    for n in range(2, max_n + 1):
        for k in range(n + 1, 2 * n):
            for d in range(max(1, k - 1), max_d + 1):
                lam = formulas.N_k_lambda(n, d, k)
                mu = formulas.N_k_mu(n, d, k)
                ch = degree_vk_chern(n, d, k)
                res.check(lam == mu == ch, f"(n,d,k)=({n},{d},{k}): lambda {lam}, mu {mu}, chern {ch}")
    return res


def suite_formulas() -> SuiteResult:
    res = SuiteResult("formulas")
    for d in range(1, 21):
        for k in range(1, 13):
            lam = formulas.lambda_coeffs(d, k)
            mu = formulas.mu_coeffs(d, k)
            for ell in range(k):
                direct = formulas.mu_direct(d, k, ell)
                res.check(
                    mu[ell] == lam[k - 1 - ell] == direct,
                    f"mu_{ell}({d},{k}): reversed {mu[ell]}, lambda {lam[k - 1 - ell]}, direct {direct}",
                )
    for n in range(2, 9):
        for d in range(n, 21):
            a, b = formulas.N_k_lambda(n, d, n + 1), formulas.flex_degree_closed(n, d)
            res.check(a == b, f"flex degree n={n} d={d}: {a} != {b}")
    for (n, k), poly in KNOWN_DEGREE_POLYNOMIALS.items():
        res.check(formulas.degree_polynomial(n, k) == poly, f"symbolic N_{k}(n={n}) differs from table")
        for d in table_sample_ds(k):
            got = formulas.N_k_lambda(n, d, k)
            res.check(got == eval_poly(poly, d), f"N_{k}({n},{d}) = {got}, table gives {eval_poly(poly, d)}")
    for n, k in EMPTY_TABLE_CELLS:
        for d in table_sample_ds(k):
            rep = formulas.build_report(n, d, k)
            res.check(rep.degree == 0, f"table cell (n={n},k={k}) at d={d} should be empty")
    n, d, k, value, factors = FACTORIZATION
    res.check(formulas.N_k_lambda(n, d, k) == value, f"N_{k}({n},{d}) != {value}")
    prod = 1
    for f in factors:
        prod *= f
    res.check(prod == value, f"factors multiply to {prod}, not {value}")
    return res


def random_poly(rng: random.Random, nvars: int, degree: int) -> MultiPoly:
    """Random homogeneous polynomial with small integer coefficients."""

    def exps(remaining, slots):
        if slots == 1:
            yield (remaining,)
            return
        for i in range(remaining + 1):
            for rest in exps(remaining - i, slots - 1):
                yield (i,) + rest

    terms = {}
    for e in exps(degree, nvars):
        if rng.random() < 0.6:
            terms[e] = rng.randint(-5, 5)
    if not any(terms.values()):
        terms[(degree,) + (0,) * (nvars - 1)] = 1
    return MultiPoly(nvars, terms)


def random_rational(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        q = Fraction(rng.randint(-9, 9), rng.randint(1, 6))
        if q or not nonzero:
            return q


def taylor_instances(count: int, seed: int = 0):
    rng = random.Random(seed)
    for _ in range(count):
        nvars = rng.randint(2, 5)
        degree = rng.randint(1, 6)
        f = random_poly(rng, nvars, degree)
        x = [random_rational(rng) for _ in range(nvars)]
        y = [random_rational(rng) for _ in range(nvars)]
        if not any(x):
            x[0] = Fraction(1)
        if not any(y):
            y[-1] = Fraction(1)
        yield f, x, y, random_rational(rng), random_rational(rng, nonzero=True)


def check_taylor_instance(f, x, y, t0, lam) -> list[str]:
    errors = []
    coeffs = contact.taylor_coeffs(f, x, y)
    d = f.total_degree()
    recon = sum(c * t0**ell / contact.factorial(ell) for ell, c in enumerate(coeffs))
    direct = f.evaluate([a + t0 * b for a, b in zip(x, y)])
    if recon != direct:
        errors.append(f"reconstruction failed for f={f} at t={t0}")
    if contact.taylor_coeffs_differential(f, x, y) != coeffs:
        errors.append(f"differential and expansion routes differ for f={f}")
    scaled_y = contact.taylor_coeffs(f, x, [lam * b for b in y])
    scaled_x = contact.taylor_coeffs(f, [lam * a for a in x], y)
    for ell, c in enumerate(coeffs):
        if scaled_y[ell] != lam**ell * c:
            errors.append(f"F_{ell} not degree {ell} in y for f={f}")
        if scaled_x[ell] != lam ** (d - ell) * c:
            errors.append(f"F_{ell} not degree {d - ell} in x for f={f}")
    return errors


def suite_contact(instances: int = 200) -> SuiteResult:
    res = SuiteResult("contact")
    from .parser import parse_poly

    fermat = parse_poly("x0^3 + x1^3 + x2^3 + x3^3", 4)
    res.check(contact.contact_order(fermat, [1, -1, 0, 0], [0, 0, 1, -1]) == contact.INFINITE, "Fermat line")
    conic = parse_poly("x0*x2 - x1^2", 3)
    res.check(contact.contact_order(conic, [1, 0, 0], [0, 1, 0]) == 2, "conic tangent")
    for n in range(2, 7):
        f = contact.submersion_witness(n)
        axis = [0] * (n - 1) + [1]
        res.check(contact.affine_contact_order(f, [0] * n, axis) == 2 * n - 1, f"witness order n={n}")
        h = contact.homogenize(f)
        res.check(contact.contact_order(h, [1] + [0] * n, [0] + axis) == 2 * n - 1, f"homogenized witness n={n}")
        _, r = contact.jacobian_rank_check(n)
        res.check(r == 2 * n - 1, f"jacobian rank n={n}: {r}")
        _, r = contact.jacobian_rank_check(n, truncated=True)
        res.check(r == 2 * n - 2, f"truncated jacobian rank n={n}: {r}")
    for inst in taylor_instances(instances):
        errs = check_taylor_instance(*inst)
        res.check(not errs, "; ".join(errs))
    return res


SUITES = {
    "catalan": suite_catalan,
    "pieri": suite_pieri,
    "routes": suite_routes,
    "formulas": suite_formulas,
    "contact": suite_contact,
}


def run(name: str = "all") -> list[SuiteResult]:
    if name == "all":
        return [fn() for fn in SUITES.values()]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return [SUITES[name]()]
