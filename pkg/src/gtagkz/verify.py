"""Named exact verification suites over one representation.

Each check recomputes an identity from first principles (independent
oracles, random seeded matrices, or dual computational routes) and reports
pass/fail.  All arithmetic is exact, so every comparison is literal
equality.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import _linalg
from .combinatorics import chi_pairs
from .gtbasis import (
    AmbiguousSupportError,
    CoefficientTable,
    RepresentationBasis,
    build_basis,
    canonical_form,
    coeff_C_alt,
    gt_basis,
)
from .lattice import lattice_basis, r_routes, r_shift
from .operators import agkz_apply, e_action, euler_weighted, plucker_generator
from .polyengine import (
    Polynomial,
    diff_apply,
    evaluate_at_ones,
    evaluate_minors,
    pair,
)
from .series import agkz_solution, j_series, multi_factorial, rising


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


def seeded_matrices(n, seed, count, low=-5, high=5):
    """Deterministic nonsingular integer matrices with entries in [low, high]."""
    rng = random.Random(seed)
    matrices = []
    while len(matrices) < count:
        candidate = [[rng.randint(low, high) for _ in range(n)] for _ in range(n)]
        if _linalg.det(candidate) != 0:
            matrices.append(candidate)
    return matrices


class VerifyContext:
    """Lazily built shared state for the checks over one representation."""

    def __init__(self, top_row, seed=0, matrix_count=20):
        self.top_row = tuple(top_row)
        self.n = len(self.top_row)
        self.seed = seed
        self.matrix_count = matrix_count
        self._basis = None
        self._table = None
        self._gt = None
        self._matrices = None

    @property
    def basis(self) -> RepresentationBasis:
        if self._basis is None:
            self._basis = build_basis(self.top_row)
        return self._basis

    @property
    def table(self) -> CoefficientTable:
        if self._table is None:
            self._table = CoefficientTable(self.basis)
        return self._table

    @property
    def gt_polys(self):
        if self._gt is None:
            self._gt = gt_basis(self.basis)
        return self._gt

    @property
    def matrices(self):
        if self._matrices is None:
            self._matrices = seeded_matrices(self.n, self.seed, self.matrix_count)
        return self._matrices


def check_agkz_annihilation(ctx: VerifyContext) -> CheckResult:
    failures = []
    k = len(lattice_basis(ctx.n))
    for entry in ctx.basis.entries:
        for alpha in range(k):
            if not agkz_apply(alpha, entry.agkz_poly).is_zero():
                failures.append((entry.diagram.rows, alpha))
    return CheckResult(
        "agkz-annihilation",
        not failures,
        f"{len(ctx.basis.entries)} solutions x {k} operators" + _failure_note(failures),
    )


def check_plucker_annihilation(ctx: VerifyContext) -> CheckResult:
    failures = []
    k = len(lattice_basis(ctx.n))
    generators = [plucker_generator(ctx.n, alpha) for alpha in range(k)]
    for alpha, generator in enumerate(generators):
        for matrix in ctx.matrices:
            if evaluate_minors(generator, matrix) != 0:
                failures.append(("minors", alpha))
        for entry in ctx.basis.entries:
            if not diff_apply(generator, entry.agkz_poly).is_zero():
                failures.append((entry.diagram.rows, alpha))
    return CheckResult(
        "plucker-annihilation",
        not failures,
        f"{k} generators, {len(ctx.matrices)} matrices" + _failure_note(failures),
    )


def check_gkz_homogeneity(ctx: VerifyContext) -> CheckResult:
    failures = []
    for entry in ctx.basis.entries:
        for p, q in chi_pairs(ctx.n):
            expected = entry.gamma_poly.scale(entry.diagram.m(p, q))
            if euler_weighted(p, q, entry.gamma_poly) != expected:
                failures.append((entry.diagram.rows, (p, q)))
    return CheckResult(
        "gkz-homogeneity", not failures, "all (p, q)" + _failure_note(failures)
    )


def check_pairing_invariance(ctx: VerifyContext, trials=10) -> CheckResult:
    rng = random.Random(ctx.seed + 1)
    polys = [entry.agkz_poly for entry in ctx.basis.entries]
    failures = 0
    for _ in range(trials):
        f = _random_combination(polys, rng)
        g = _random_combination(polys, rng)
        i = rng.randint(1, ctx.n)
        j = rng.randint(1, ctx.n)
        if pair(e_action(i, j, f), g) != pair(f, e_action(j, i, g)):
            failures += 1
    return CheckResult(
        "pairing-invariance", failures == 0, f"{trials} random trials, {failures} failed"
    )


def _random_combination(polys, rng):
    total = Polynomial.zero(polys[0].n)
    for poly in polys:
        coefficient = rng.randint(-3, 3)
        if coefficient:
            total = total + poly.scale(coefficient)
    return total


def check_orthogonality(ctx: VerifyContext) -> CheckResult:
    polys = ctx.gt_polys
    failures = []
    for a in range(len(polys)):
        for b in range(a + 1, len(polys)):
            if pair(polys[a], polys[b]) != 0:
                failures.append((a, b))
    return CheckResult(
        "orthogonality",
        not failures,
        f"{len(polys)} functions" + _failure_note(failures),
    )


def check_triangularity(ctx: VerifyContext) -> CheckResult:
    """Pairing of a lattice series against a solution vanishes unless the
    series' class sits below the solution's, where it equals the signed
    Horn-type values at 1 summed over every r-route joining the classes."""
    basis = ctx.basis
    failures = []
    for a, ea in enumerate(basis.entries):
        for b, eb in enumerate(basis.entries):
            value = pair(ea.gamma_poly, eb.agkz_poly)
            routes = r_routes(ea.shift.gamma, eb.shift.gamma)
            if not routes:
                if value != 0:
                    failures.append((a, b, "expected 0"))
                continue
            expected = Fraction(0)
            for u in routes:
                sign = -1 if sum(u) % 2 else 1
                expected += Fraction(sign, multi_factorial(u)) * evaluate_at_ones(
                    j_series(eb.shift.gamma - r_shift(ctx.n, u), u)
                )
            if value != expected:
                failures.append((a, b, f"{value} != {expected}"))
    return CheckResult(
        "triangularity", not failures, "all ordered pairs" + _failure_note(failures)
    )


def check_canf_minor_identity(ctx: VerifyContext) -> CheckResult:
    failures = []
    skipped = 0
    for entry in ctx.basis.entries:
        try:
            reduced = canonical_form(entry.shift)
        except AmbiguousSupportError:
            skipped += 1
            continue
        difference = entry.gamma_poly - reduced
        for matrix in ctx.matrices:
            if evaluate_minors(difference, matrix) != 0:
                failures.append(entry.diagram.rows)
                break
    note = f", {skipped} skipped (no unique support point)" if skipped else ""
    return CheckResult(
        "canf-minor-identity",
        not failures,
        f"{len(ctx.basis.entries) - skipped} diagrams x {len(ctx.matrices)} matrices"
        + note
        + _failure_note(failures),
    )


def osnf_rhs(gamma, omega) -> Polynomial:
    """Right side of the operator action identity, summed over feasible shifts."""
    n = gamma.n
    basis = lattice_basis(n)
    k = len(basis)
    shifted = gamma
    for vec in basis:
        shifted = shifted + vec.v
    base = omega - gamma
    total = Polynomial.zero(n)
    for s in _budget_multi_indices(base, k):
        constant = evaluate_at_ones(j_series(shifted, s))
        if constant == 0:
            continue
        tail = agkz_solution(base - r_shift(n, s))
        if tail.is_zero():
            continue
        sign = -1 if sum(s) % 2 else 1
        total = total + tail.scale(Fraction(sign, multi_factorial(s)) * constant)
    return total


def _budget_multi_indices(base, k):
    """All s >= 0 that could leave a nonzero solution at base - s.r."""
    from .series import _chi_array, _psi

    if k == 0:
        return [()]
    budget = _psi(_chi_array(base))
    if budget < 0:
        return []
    basis = lattice_basis(base.n)
    costs = [vec.x - vec.j for vec in basis]
    found = []
    current = [0] * k

    def search(alpha, remaining):
        if alpha == k:
            found.append(tuple(current))
            return
        count = 0
        while count * costs[alpha] <= remaining:
            current[alpha] = count
            search(alpha + 1, remaining - count * costs[alpha])
            count += 1
        current[alpha] = 0

    search(0, budget)
    return found


def check_osnf_identity(ctx: VerifyContext, pairs=10) -> CheckResult:
    rng = random.Random(ctx.seed + 2)
    entries = ctx.basis.entries
    failures = 0
    for _ in range(pairs):
        ea = entries[rng.randrange(len(entries))]
        eb = entries[rng.randrange(len(entries))]
        lhs = diff_apply(ea.gamma_poly, eb.agkz_poly)
        rhs = osnf_rhs(ea.shift.gamma, eb.shift.gamma)
        if lhs != rhs:
            failures += 1
    return CheckResult(
        "osnf-identity", failures == 0, f"{pairs} random pairs, {failures} failed"
    )


def check_coeff_crosscheck(ctx: VerifyContext) -> CheckResult:
    failures = []
    table = ctx.table
    for (idx, l), value in table.C.items():
        entry = ctx.basis.entries[idx]
        alternative = coeff_C_alt(entry.shift, l)
        if alternative != value:
            failures.append((entry.diagram.rows, l, str(value), str(alternative)))
    return CheckResult(
        "coeff-crosscheck",
        not failures,
        f"{len(table.C)} coefficients" + _failure_note(failures),
    )


def gauss_2f1_term(a1, a2, b1, order) -> Fraction:
    """Term `order` of the Gauss series: (a1)_n (a2)_n / ((b1)_n n!)."""
    numerator = rising(a1 - 1, order) * rising(a2 - 1, order)
    denominator = rising(b1 - 1, order) * factorial(order)
    return Fraction(numerator, denominator)


def check_gl3_closed_form(ctx: VerifyContext) -> CheckResult:
    """Coefficient-by-coefficient match with the classical Gauss expansion."""
    if ctx.n != 3:
        raise ValueError("gl3-closed-form requires n = 3")
    failures = []
    neg1, neg2 = (2,), (1, 3)  # coordinates moving against the lattice direction
    pos1, pos2 = (1,), (2, 3)
    direction = lattice_basis(3)[0].v
    for entry in ctx.basis.entries:
        series = entry.gamma_poly
        base = min(series.terms, key=lambda e: e[pos1])
        if base[pos2] == 0:
            b_anchor = pos1
        elif base[pos1] == 0:
            b_anchor = pos2
        else:
            failures.append((entry.diagram.rows, "no Gauss anchor"))
            continue
        a1 = -base[neg1]
        a2 = -base[neg2]
        b1 = base[b_anchor] + 1
        scale = Fraction(1)
        for _, value in base.items():
            scale /= factorial(value)
        order = 0
        point = base
        while point.is_nonnegative():
            expected = scale * gauss_2f1_term(a1, a2, b1, order)
            if series.coefficient(point) != expected:
                failures.append((entry.diagram.rows, order))
                break
            order += 1
            point = point + direction
    total_terms = sum(len(entry.gamma_poly.terms) for entry in ctx.basis.entries)
    return CheckResult(
        "gl3-closed-form",
        not failures,
        f"{total_terms} coefficients" + _failure_note(failures),
    )


def _failure_note(failures):
    if not failures:
        return ""
    preview = "; ".join(str(item) for item in list(failures)[:4])
    return f" -- FAILED: {preview}" + (" ..." if len(failures) > 4 else "")


CHECKS = {
    "agkz-annihilation": check_agkz_annihilation,
    "plucker-annihilation": check_plucker_annihilation,
    "gkz-homogeneity": check_gkz_homogeneity,
    "pairing-invariance": check_pairing_invariance,
    "orthogonality": check_orthogonality,
    "triangularity": check_triangularity,
    "canf-minor-identity": check_canf_minor_identity,
    "osnf-identity": check_osnf_identity,
    "coeff-crosscheck": check_coeff_crosscheck,
    "gl3-closed-form": check_gl3_closed_form,
}


def default_checks(n: int):
    names = [name for name in CHECKS if name != "gl3-closed-form"]
    if n == 3:
        names.append("gl3-closed-form")
    return names


def run_checks(top_row, names=None, seed=0, matrix_count=20):
    """Run the selected suites; unknown names raise ValueError."""
    ctx = VerifyContext(top_row, seed=seed, matrix_count=matrix_count)
    if names is None:
        names = default_checks(ctx.n)
    results = []
    for name in names:
        if name not in CHECKS:
            raise ValueError(f"unknown check {name!r}")
        results.append(CHECKS[name](ctx))
    return results
