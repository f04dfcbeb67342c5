"""Lie algebra generator actions, (A-)GKZ operators, and Plucker generators.

The generator E_{i,j} acts on a polynomial in minor variables by replacing
column j with column i in every variable that contains j but not i; the
sign is the parity of re-sorting the column list.  The GKZ operator of a
lattice basis vector is the difference of the two second-order derivatives
along its positive and negative parts, and the antisymmetrized variant adds
the derivative along the third Plucker monomial.
"""

from __future__ import annotations

from .lattice import ExponentVector, lattice_basis
from .polyengine import Polynomial, diff_apply


def _substitution_sign(i: int, j: int, others) -> int:
    low, high = min(i, j), max(i, j)
    between = sum(1 for y in others if low < y < high)
    return -1 if between % 2 else 1


def e_action(i: int, j: int, f: Polynomial) -> Polynomial:
    """Apply the generator E_{i,j} as a differential operator."""
    n = f.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"generator indices must lie in 1..{n}")
    if i == j:
        terms = []
        for exponent, coefficient in f.terms.items():
            count = sum(v for X, v in exponent.items() if i in X)
            if count:
                terms.append((exponent, coefficient * count))
        return Polynomial(n, terms)
    result = []
    for exponent, coefficient in f.terms.items():
        for X, power in exponent.items():
            if j not in X or i in X:
                continue
            others = tuple(y for y in X if y != j)
            target = tuple(sorted(others + (i,)))
            sign = _substitution_sign(i, j, others)
            shifted = (
                exponent
                - ExponentVector.unit(n, X)
                + ExponentVector.unit(n, target)
            )
            result.append((shifted, coefficient * power * sign))
    return Polynomial(n, result)


def _second_derivative(part: ExponentVector, f: Polynomial) -> Polynomial:
    return diff_apply(Polynomial.monomial(part), f)


def gkz_apply(alpha: int, f: Polynomial) -> Polynomial:
    """Difference of second derivatives along v_plus and v_minus of basis vector alpha."""
    vec = lattice_basis(f.n)[alpha]
    return _second_derivative(vec.v_plus, f) - _second_derivative(vec.v_minus, f)


def agkz_apply(alpha: int, f: Polynomial) -> Polynomial:
    """The antisymmetrized operator: GKZ part plus the v_zero second derivative."""
    vec = lattice_basis(f.n)[alpha]
    return gkz_apply(alpha, f) + _second_derivative(vec.v_zero, f)


def plucker_generator(n: int, alpha: int) -> Polynomial:
    """The quadratic Plucker relation attached to lattice basis vector alpha."""
    vec = lattice_basis(n)[alpha]
    return (
        Polynomial.monomial(vec.v_plus)
        - Polynomial.monomial(vec.v_minus)
        + Polynomial.monomial(vec.v_zero)
    )


def euler_weighted(p: int, q: int, f: Polynomial) -> Polynomial:
    """The homogeneity operator sum_X chi_p^q(X) A_X d/dA_X applied to f.

    On a monomial this multiplies by the chi_p^q value of its exponent.
    """
    from .combinatorics import chi_apply

    terms = []
    for exponent, coefficient in f.terms.items():
        value = chi_apply(p, q, exponent)
        if value:
            terms.append((exponent, coefficient * value))
    return Polynomial(f.n, terms)


def membership_check(f: Polynomial, top_row) -> bool:
    """Whether every monomial has the exponent sums of the given highest weight.

    For each order i the total exponent of the cardinality-i variables must
    equal m_i - m_{i+1} (with m_{n+1} = 0).
    """
    values = list(top_row)
    n = f.n
    if len(values) != n:
        raise ValueError("weight length must match the variable universe")
    expected = [values[i] - (values[i + 1] if i + 1 < n else 0) for i in range(n)]
    for exponent, _ in f.terms.items():
        sums = [0] * n
        for X, v in exponent.items():
            sums[len(X) - 1] += v
        if sums != expected:
            return False
    return True
