"""Hypergeometric-type constructors over shifted lattices.

All objects are finite polynomials: the plain lattice series (one term per
nonnegative point of gamma + B), its Horn-type generalization with a rising
Pochhammer weight, the irreducible solutions of the antisymmetrized GKZ
system built as alternating sums of Horn terms down the r direction, and the
paired series whose value at A = 1 reproduces scalar products of solutions.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .combinatorics import chi_apply, chi_pairs
from .lattice import (
    ExponentVector,
    coset_points,
    lattice_basis,
    nonneg_points,
    r_shift,
)
from .polyengine import Polynomial, exponent_factorial


def rising(t: int, s: int) -> int:
    """(t+1)(t+2)...(t+s); equals 1 for s = 0."""
    if s < 0:
        raise ValueError("rising factorial needs s >= 0")
    result = 1
    for step in range(1, s + 1):
        result *= t + step
    return result


def multi_factorial(s) -> int:
    product = 1
    for part in s:
        product *= factorial(part)
    return product


def _gamma_of(shift_or_vector) -> ExponentVector:
    return getattr(shift_or_vector, "gamma", shift_or_vector)


def gamma_series(gamma) -> Polynomial:
    """Sum of A^x / x! over the nonnegative points of gamma + B."""
    vector = _gamma_of(gamma)
    return Polynomial(
        vector.n,
        [(x, Fraction(1, exponent_factorial(x))) for x in nonneg_points(vector)],
    )


def j_series(gamma: ExponentVector, s) -> Polynomial:
    """Horn-type series with Pochhammer weight (t+1)...(t+s) per lattice direction.

    Unlike the plain series this depends on the representative gamma, not
    only on its class mod B.
    """
    vector = _gamma_of(gamma)
    s = tuple(s)
    k = len(lattice_basis(vector.n))
    if len(s) != k or any(part < 0 for part in s):
        raise ValueError(f"s must be a length-{k} nonnegative multi-index")
    terms = []
    for x, t in coset_points(vector):
        weight = 1
        for t_part, s_part in zip(t, s):
            weight *= rising(t_part, s_part)
            if weight == 0:
                break
        if weight:
            terms.append((x, Fraction(weight, exponent_factorial(x))))
    return Polynomial(vector.n, terms)


@lru_cache(maxsize=None)
def _r_chi_tables(n: int):
    """chi values of every r^alpha, as dicts keyed by (p, q)."""
    tables = []
    for vec in lattice_basis(n):
        tables.append(
            {pq: chi_apply(*pq, vec.r) for pq in chi_pairs(n) if chi_apply(*pq, vec.r)}
        )
    return tuple(tables)


def _chi_array(vector: ExponentVector):
    return {pq: chi_apply(*pq, vector) for pq in chi_pairs(vector.n)}


def _vector_with_chi_array(n: int, array) -> ExponentVector:
    """Staircase solution of chi(x) = array for an arbitrary integer array."""
    entries = []
    get = lambda p, q: array[(p, q)]
    for p in range(1, n + 1):
        top_next = get(p + 1, n) if p < n else 0
        entries.append((tuple(range(1, p + 1)), get(p, p) - top_next))
        for q in range(p + 1, n + 1):
            entries.append((tuple(range(1, p)) + (q,), get(p, q) - get(p, q - 1)))
    return ExponentVector(n, entries)


@lru_cache(maxsize=None)
def _array_feasible(n: int, array_items) -> bool:
    """Whether any nonnegative vector has the given chi array."""
    array = dict(array_items)
    if any(value < 0 for value in array.values()):
        return False
    # chi_p^q <= chi_p'^q' pointwise on subsets whenever p' <= p and q <= q'.
    for (p, q), value in array.items():
        if p > 1 and value > array[(p - 1, q)]:
            return False
        if q < n and value > array[(p, q + 1)]:
            return False
    return bool(nonneg_points(_vector_with_chi_array(n, array)))


def _psi(array) -> int:
    return sum(p * value for (p, _), value in array.items())


def feasible_down_shifts(gamma: ExponentVector):
    """All s >= 0 for which gamma - s.r + B contains a nonnegative point.

    Subtracting r^alpha lowers the weighted functional sum by x - j >= 1, and
    that sum is nonnegative on any feasible class, which bounds the search to
    a finite simplex; each candidate is then checked exactly.
    """
    vector = _gamma_of(gamma)
    base_array = _chi_array(vector)
    return _feasible_down_shifts(vector.n, tuple(sorted(base_array.items())))


@lru_cache(maxsize=None)
def _feasible_down_shifts(n: int, array_items):
    basis = lattice_basis(n)
    base_array = dict(array_items)
    budget = _psi(base_array)
    if budget < 0:
        return ()
    r_tables = _r_chi_tables(n)
    costs = [vec.x - vec.j for vec in basis]
    found = []
    current = [0] * len(basis)

    def search(alpha, remaining):
        if alpha == len(basis):
            array = dict(base_array)
            for idx, count in enumerate(current):
                if count:
                    for pq, delta in r_tables[idx].items():
                        array[pq] -= count * delta
            if _array_feasible(n, tuple(sorted(array.items()))):
                found.append(tuple(current))
            return
        count = 0
        while count * costs[alpha] <= remaining:
            current[alpha] = count
            search(alpha + 1, remaining - count * costs[alpha])
            count += 1
        current[alpha] = 0

    search(0, budget)
    return tuple(found)


def agkz_solution(gamma) -> Polynomial:
    """Irreducible polynomial solution of the antisymmetrized GKZ system.

    The alternating sum (-1)^|s| / s! times the Horn-type series at the
    representative gamma - s.r, over every s with a feasible class; the sum
    depends on the representative gamma, not only on gamma mod B.
    """
    vector = _gamma_of(gamma)
    n = vector.n
    total = Polynomial.zero(n)
    for s in feasible_down_shifts(vector):
        term = j_series(vector - r_shift(n, s), s)
        sign = -1 if sum(s) % 2 else 1
        total = total + term.scale(Fraction(sign, multi_factorial(s)))
    return total


def _multi_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def j_pair_series(delta: ExponentVector, a, b) -> Polynomial:
    """Doubly weighted Horn-type series with both Pochhammer products.

    Coefficient of A^(delta + t.v) is (t+1)...(t+a) (t+1)...(t+b) divided by
    (delta + t.v)! a! b!; the factorial normalization lives here, not in the
    alternating sum built on top of it.
    """
    vector = _gamma_of(delta)
    a, b = tuple(a), tuple(b)
    k = len(lattice_basis(vector.n))
    if len(a) != k or len(b) != k or min(a + b, default=0) < 0:
        raise ValueError(f"a and b must be length-{k} nonnegative multi-indices")
    norm = multi_factorial(a) * multi_factorial(b)
    terms = []
    for x, t in coset_points(vector):
        weight = 1
        for t_part, a_part, b_part in zip(t, a, b):
            weight *= rising(t_part, a_part) * rising(t_part, b_part)
            if weight == 0:
                break
        if weight:
            terms.append((x, Fraction(weight, exponent_factorial(x) * norm)))
    return Polynomial(vector.n, terms)


def f_pair_series(delta: ExponentVector, l1, l2) -> Polynomial:
    """Alternating sum of paired series whose value at 1 gives scalar products.

    Requires min(l1, l2) = 0 componentwise.  The value at A = 1 equals the
    pairing of the solutions at delta + l1.r and delta + l2.r whenever the
    classes involved are joined by unique r-combinations; matching that
    pairing forces a single factorial normalization, the one inside
    j_pair_series.  (With parallel routes, possible from n = 4 on, cross
    terms are missing and the exact pairing must be used instead.)
    """
    vector = _gamma_of(delta)
    n = vector.n
    l1, l2 = tuple(l1), tuple(l2)
    if any(min(x, y) != 0 for x, y in zip(l1, l2)):
        raise ValueError("need min(l1, l2) = 0 componentwise")
    sign = -1 if (sum(l1) + sum(l2)) % 2 else 1
    total = Polynomial.zero(n)
    for u in feasible_down_shifts(vector):
        term = j_pair_series(vector - r_shift(n, u), _multi_add(u, l1), _multi_add(u, l2))
        total = total + term.scale(sign)
    return total
