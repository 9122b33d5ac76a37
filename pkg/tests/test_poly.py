import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from nlspec.poly import (
    IntPolynomial,
    NotDivisibleError,
    bareiss_det,
    interpolate,
    linear_det_from_parts,
    linear_matrix_det,
    poly_from_roots,
)

X = IntPolynomial.x()


def cofactor_det(m):
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total


def test_arith_examples():
    assert (X - 1) * (X + 1) == IntPolynomial([-1, 0, 1])
    assert (X * X - 2 * X).eval(3) == 3
    assert IntPolynomial([0, -4, 2]).divide_exact(2) == IntPolynomial([0, -2, 1])
    with pytest.raises(NotDivisibleError):
        IntPolynomial([1, 2]).divide_exact(2)


def test_normalization():
    p = IntPolynomial([1, 2, 0, 0])
    assert p.coeffs == (1, 2) and p.degree == 1
    assert IntPolynomial([0, 0]).is_zero() and IntPolynomial().degree == -1
    assert (X - X).is_zero()


ints = st.lists(st.integers(-50, 50), max_size=6).map(IntPolynomial)


@given(ints, ints, st.integers(-5, 5))
def test_ring_laws_by_evaluation(a, b, t):
    assert (a + b).eval(t) == a.eval(t) + b.eval(t)
    assert (a - b).eval(t) == a.eval(t) - b.eval(t)
    assert (a * b).eval(t) == a.eval(t) * b.eval(t)


@given(ints, st.integers(0, 4))
def test_pow(a, e):
    out = IntPolynomial([1])
    for _ in range(e):
        out = out * a
    assert a ** e == out


def test_linear_det_examples():
    assert linear_matrix_det([[X - 1]]) == X - 1
    one = IntPolynomial([1])
    zero = IntPolynomial()
    m = [[X - 1, one], [one, X - 1]]
    assert linear_matrix_det(m) == X * X - 2 * X
    d = [1, 2, 1]
    a = [[0, 1, 0], [1, 0, 1], [0, 1, 0]]
    p3 = [[(X - 1) * d[i] if i == j else IntPolynomial([a[i][j]]) for j in range(3)] for i in range(3)]
    assert linear_matrix_det(p3) == IntPolynomial([0, 4, -6, 2])
    assert linear_matrix_det([]) == IntPolynomial([1])
    assert linear_matrix_det([[zero, zero], [zero, zero]]).is_zero()


def test_bareiss_against_cofactor_random():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 5)
        m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert bareiss_det(m) == cofactor_det(m)
        const = [[IntPolynomial([x]) for x in row] for row in m]
        assert linear_matrix_det(const) == IntPolynomial([cofactor_det(m)])


def test_bareiss_needs_pivoting():
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1
    assert bareiss_det([[1, 2], [2, 4]]) == 0


def test_linear_det_against_sympy():
    rng = random.Random(11)
    x = sympy.symbols("x")
    for _ in range(25):
        n = rng.randint(1, 6)
        a = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        b = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        ours = linear_det_from_parts(a, b)
        ref = sympy.Poly(sympy.Matrix(n, n, lambda i, j: a[i][j] * x + b[i][j]).det(), x)
        assert list(ours.coeffs) == [int(c) for c in reversed(ref.all_coeffs())] or (ours.is_zero() and ref.is_zero)


def test_row_permutation_sign():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(2, 6)
        a = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        b = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        perm = list(range(n))
        rng.shuffle(perm)
        inversions = sum(1 for i, j in itertools.combinations(range(n), 2) if perm[i] > perm[j])
        sign = -1 if inversions % 2 else 1
        base = linear_det_from_parts(a, b)
        moved = linear_det_from_parts([a[p] for p in perm], [b[p] for p in perm])
        assert moved == base * sign


def test_reevaluation_property():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(1, 7)
        a = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        b = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        p = linear_det_from_parts(a, b, check=False)
        for t in (n + 1, n + 5, -3):
            assert p.eval(t) == bareiss_det([[a[i][j] * t + b[i][j] for j in range(n)] for i in range(n)])


def test_interpolate_round_trip():
    p = IntPolynomial([5, -3, 0, 7, 2])
    assert interpolate([p.eval(t) for t in range(5)]) == p
    # x(x-1)/2 takes integer values but is not in Z[x]
    with pytest.raises(NotDivisibleError):
        interpolate([0, 0, 1])


def test_big_coefficients():
    # degree product 9**9 scale must not overflow anywhere
    p = poly_from_roots([(Fraction(0), 1), (Fraction(1, 8), 1), (Fraction(9, 8), 7)], 8 * 8 ** 8)
    assert p.lead == 8 * 8 ** 8 and p.degree == 9
    assert p.eval(0) == 0


def test_poly_from_roots_rejects_small_lead():
    with pytest.raises(NotDivisibleError):
        poly_from_roots([(Fraction(1, 3), 1)], 1)
