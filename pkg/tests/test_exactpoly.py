from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from theta_spectra import families as fam
from theta_spectra.exactpoly import (IntPoly, NoRealRootError, NotDivisibleError, char_poly_exact,
                                     compare_max_roots, count_real_roots, det_exact, divide_exact,
                                     max_real_root, sturm_sequence)

X = IntPoly((0, 1))
polys = st.lists(st.integers(-50, 50), max_size=6).map(IntPoly)


def test_basic_arithmetic():
    assert (X + 1) * (X - 1) == IntPoly((-1, 0, 1))
    assert IntPoly((-1, 0, 1)).evaluate_at_integer(3) == 8
    assert (X + 1) ** 5 == IntPoly((1, 5, 10, 10, 5, 1))
    assert IntPoly((1, 2)).evaluate_at_rational(Fraction(1, 2)) == 2
    assert IntPoly((0, 0, 0)).is_zero
    with pytest.raises(ValueError):
        (X + 1) ** -1


@given(polys, polys, polys)
@settings(max_examples=200, deadline=None)
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - b) + b == a


def test_json_round_trip():
    p = IntPoly((3, -2 ** 80, 0, 1))
    assert IntPoly.from_json(p.to_json()) == p
    assert p.to_json() == '["3", "-1208925819614629174706176", "0", "1"]'


def test_divide_exact():
    assert divide_exact(IntPoly((-1, 0, 1)), X + 1) == X - 1
    assert divide_exact((X + 1) ** 4, (X + 1) ** 2) == (X + 1) ** 2
    with pytest.raises(NotDivisibleError) as info:
        divide_exact(X ** 2 + 1, X + 1)
    assert info.value.remainder


def test_char_poly_small():
    assert char_poly_exact([[0, 1], [1, 0]]) == IntPoly((-1, 0, 1))
    k4 = [[0 if i == j else 1 for j in range(4)] for i in range(4)]
    assert char_poly_exact(k4) == IntPoly((-3, -8, -6, 0, 1))


def test_char_poly_of_theta2_divides():
    a = fam.theta2(12, 8)
    from theta_spectra.graphs import adjacency_matrix
    q = divide_exact(char_poly_exact(adjacency_matrix(a).tolist()), (X + 1) ** 7)
    assert q.degree == 5 and q.leading == 1


def _det_lambda(m, x):
    n = len(m)
    return det_exact([[(x if i == j else 0) - m[i][j] for j in range(n)] for i in range(n)])


def _cofactor_det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * _cofactor_det([r[:j] + r[j + 1:] for r in m[1:]]) for j in range(len(m)))


def test_char_poly_against_bareiss():
    r = random.Random(7)
    for _ in range(200):
        n = r.randint(1, 8)
        m = [[r.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        p = char_poly_exact(m)
        assert p.degree == n and p.leading == 1
        for x in (-2, 0, 3):
            assert p(x) == _det_lambda(m, x)


def test_printed_theta2_quotient_by_interpolation():
    # independent route: cofactor determinants of xI - Q at 6 points, Lagrange interpolation
    q = fam.quotient_theta2_matrix(30, 10)
    xs = list(range(6))
    ys = [_cofactor_det([[(x if i == j else 0) - q[i][j] for j in range(5)] for i in range(5)]) for x in xs]
    coeffs = [Fraction(0)] * 6
    for i, xi in enumerate(xs):
        basis = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(xs):
            if j != i:
                basis = [Fraction(0)] + basis
                for d in range(len(basis) - 1):
                    basis[d] -= xj * basis[d + 1]
                denom *= xi - xj
        for d in range(6):
            coeffs[d] += Fraction(ys[i], denom) * basis[d]
    interp = IntPoly(tuple(int(c) for c in coeffs))
    assert char_poly_exact(q) == interp == fam.P_poly(30, 10)


def test_symmetric_char_poly_all_real_roots():
    r = random.Random(3)
    for _ in range(50):
        n = r.randint(1, 7)
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                m[i][j] = m[j][i] = r.randint(-3, 3)
        p = char_poly_exact(m)
        # distinct real roots of the squarefree part: count multiplicity via gcd-free check
        from theta_spectra.exactpoly import squarefree_part
        sq = squarefree_part(p)
        assert count_real_roots(sq) == sq.degree


def test_max_real_root():
    lo, hi = max_real_root(X ** 2 - 2, Fraction(1, 10 ** 9))
    assert hi - lo <= Fraction(1, 10 ** 9)
    assert lo ** 2 <= 2 <= hi ** 2
    assert max_real_root(X - 9) == (9, 9)
    with pytest.raises(NoRealRootError):
        max_real_root(X ** 2 + 1)


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=5))
@settings(max_examples=100, deadline=None)
def test_max_real_root_brackets(roots):
    p = IntPoly((1,))
    for r in roots:
        p = p * (X - r)
    lo, hi = max_real_root(p, Fraction(1, 10 ** 6))
    assert lo <= max(roots) <= hi
    assert hi - lo <= Fraction(1, 10 ** 6)


def test_sturm_and_compare():
    p = (X - 1) * (X - 2) * (X + 3)
    assert len(sturm_sequence(p)) >= 2
    assert count_real_roots(p) == 3
    assert count_real_roots(p, 0, 2) == 2
    assert compare_max_roots(X ** 2 - 2, X ** 2 - 3) == -1
    assert compare_max_roots(X ** 2 - 3, X ** 2 - 2) == 1
    assert compare_max_roots((X ** 2 - 2) * (X + 5), (X ** 2 - 2) * (X - 1)) == 0
