"""Generator actions, (A-)GKZ operators, Plucker generators, membership."""

import itertools
import random
from fractions import Fraction

import pytest

from gtagkz.combinatorics import enumerate_diagrams, highest_diagram
from gtagkz.gtbasis import build_basis
from gtagkz.lattice import ExponentVector, canonical_shifts, lattice_basis, shift_from_diagram
from gtagkz.operators import (
    agkz_apply,
    e_action,
    gkz_apply,
    membership_check,
    plucker_generator,
)
from gtagkz.polyengine import Polynomial, diff_apply, evaluate_minors, pair
from gtagkz.series import agkz_solution, gamma_series
from gtagkz import _linalg


def random_span_element(polys, rng):
    out = Polynomial.zero(polys[0].n)
    for p in polys:
        c = rng.randint(-3, 3)
        if c:
            out = out + p.scale(c)
    return out


def seeded_matrices(n, seed, count):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        if _linalg.det(m) != 0:
            out.append(m)
    return out


def test_e_action_column_substitution():
    assert e_action(1, 2, Polynomial.variable(3, (2,))) == Polynomial.variable(3, (1,))
    # substitution introducing a sorting transposition picks up a sign
    got = e_action(3, 1, Polynomial.variable(3, (1, 2)))
    assert got == -Polynomial.variable(3, (2, 3))


def test_e_action_kills_repeated_columns():
    assert e_action(1, 2, Polynomial.variable(3, (1, 2))).is_zero()


def test_raising_operators_annihilate_highest_vector():
    for top in ((2, 1, 0), (2, 1, 0, 0)):
        v0 = gamma_series(shift_from_diagram(highest_diagram(top)))
        for i in range(1, len(top)):
            assert e_action(i, i + 1, v0).is_zero()


def test_diagonal_action_reads_weight():
    for d in enumerate_diagrams((2, 1, 0)):
        f = gamma_series(shift_from_diagram(d))
        w = d.weight()
        for i in range(1, 4):
            assert e_action(i, i, f) == f.scale(w[i - 1])


@pytest.mark.parametrize("n,top", [(3, (2, 1, 0)), (4, (1, 1, 0, 0))])
def test_commutation_relations(n, top):
    rng = random.Random(23)
    polys = [e.agkz_poly for e in build_basis(top).entries]
    f = random_span_element(polys, rng)
    for i, j, k, l in itertools.product(range(1, n + 1), repeat=4):
        lhs = e_action(i, j, e_action(k, l, f)) - e_action(k, l, e_action(i, j, f))
        rhs = Polynomial.zero(n)
        if j == k:
            rhs = rhs + e_action(i, l, f)
        if l == i:
            rhs = rhs - e_action(k, j, f)
        assert lhs == rhs


def test_pairing_invariance_under_transposed_generators():
    rng = random.Random(29)
    polys = [e.agkz_poly for e in build_basis((2, 1, 0, 0)).entries]
    for _ in range(10):
        f = random_span_element(polys, rng)
        g = random_span_element(polys, rng)
        i, j = rng.randint(1, 4), rng.randint(1, 4)
        assert pair(e_action(i, j, f), g) == pair(f, e_action(j, i, g))


def test_generator_action_stays_in_span():
    basis = build_basis((2, 1, 0, 0))
    polys = [e.agkz_poly for e in basis.entries]
    monomials = sorted({e for p in polys for e in p.terms}, key=lambda e: e.sort_key())
    matrix = [[p.terms.get(e, Fraction(0)) for p in polys] for e in monomials]
    base_rank = _linalg.rank(matrix)
    rng = random.Random(31)
    for _ in range(8):
        idx = rng.randrange(len(polys))
        i, j = rng.randint(1, 4), rng.randint(1, 4)
        image = e_action(i, j, polys[idx])
        column = [image.terms.get(e, Fraction(0)) for e in monomials]
        augmented = [row + [value] for row, value in zip(matrix, column)]
        assert _linalg.rank(augmented) == base_rank


def test_gkz_operator_examples():
    assert gkz_apply(0, Polynomial.variable(3, (1,))).is_zero()
    for d in enumerate_diagrams((2, 1, 0)):
        assert gkz_apply(0, gamma_series(shift_from_diagram(d))).is_zero()


def test_agkz_on_plucker_monomial():
    vec = lattice_basis(3)[0]
    result = agkz_apply(0, Polynomial.monomial(vec.v_zero))
    assert result == Polynomial.monomial(ExponentVector.zero(3))


def test_agkz_annihilates_highest_vector():
    for top in ((2, 1, 0), (2, 1, 0, 0)):
        n = len(top)
        v0 = gamma_series(shift_from_diagram(highest_diagram(top)))
        for alpha in range(len(lattice_basis(n))):
            assert agkz_apply(alpha, v0).is_zero()


def test_agkz_annihilates_all_solutions_gl3():
    for shift in canonical_shifts(enumerate_diagrams((3, 1, 0))):
        assert agkz_apply(0, agkz_solution(shift)).is_zero()


def test_plucker_generator_gl3():
    generator = plucker_generator(3, 0)
    expected = (
        Polynomial.monomial(ExponentVector(3, [((1,), 1), ((2, 3), 1)]))
        - Polynomial.monomial(ExponentVector(3, [((2,), 1), ((1, 3), 1)]))
        + Polynomial.monomial(ExponentVector(3, [((3,), 1), ((1, 2), 1)]))
    )
    assert generator == expected


@pytest.mark.parametrize("n", [3, 4])
def test_plucker_generators_vanish_on_minors(n):
    matrices = seeded_matrices(n, 0, 10)
    for alpha in range(len(lattice_basis(n))):
        generator = plucker_generator(n, alpha)
        for m in matrices:
            assert evaluate_minors(generator, m) == 0


def test_plucker_generators_annihilate_solutions():
    for shift in canonical_shifts(enumerate_diagrams((2, 1, 0, 0))):
        solution = agkz_solution(shift)
        for alpha in range(5):
            assert diff_apply(plucker_generator(4, alpha), solution).is_zero()


def test_membership_check():
    top = (2, 1, 0)
    v0 = gamma_series(shift_from_diagram(highest_diagram(top)))
    assert membership_check(v0, top)
    assert not membership_check(Polynomial.variable(3, (1,)) * v0, top)
    for d in enumerate_diagrams(top):
        assert membership_check(gamma_series(shift_from_diagram(d)), top)
