from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import pytest

from theta_spectra import families as fam
from theta_spectra.exactpoly import max_real_root
from theta_spectra.graphs import SignedCompleteGraph, SimpleGraph, adjacency_matrix, is_balanced
from theta_spectra.spectra import (ConvergenceError, eig_symmetric, index, index_lower_bound,
                                   index_upper_bound, interlace_check, largest_eigenvalue,
                                   within_index_bounds)


def random_signed(n, r, p=0.3):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if r.random() < p]
    return SignedCompleteGraph(n, SimpleGraph(n, frozenset(edges)))


def test_complete_graph_spectrum():
    res = eig_symmetric(adjacency_matrix(SignedCompleteGraph(6, SimpleGraph(6))))
    assert res.index == pytest.approx(5, abs=1e-12)
    assert np.allclose(res.eigenvalues[1:], -1, atol=1e-12)
    assert np.all(np.diff(res.eigenvalues) <= 0)
    assert np.linalg.norm(res.principal_vector) == pytest.approx(1)


def test_one_by_one_and_k2():
    assert eig_symmetric([[3.5]]).eigenvalues.tolist() == [3.5]
    lam, _ = index(SignedCompleteGraph.from_negative_edges(2, [(0, 1)]))
    assert lam == pytest.approx(1, abs=1e-12)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        eig_symmetric([[0, 1, 2], [1, 0, 1]])
    with pytest.raises(ValueError):
        eig_symmetric([[0, 1], [2, 0]])


def test_sweep_cap_reported():
    m = np.random.default_rng(0).normal(size=(12, 12))
    with pytest.raises(ConvergenceError):
        eig_symmetric(m + m.T, tol=0.0)


@pytest.mark.parametrize("n,k", [(12, 8), (35, 15)])
def test_index_matches_exact_root(n, k):
    lo, hi = max_real_root(fam.P_poly(n, k), Fraction(1, 10 ** 12))
    lam, x = index(fam.theta2(n, k))
    assert float(lo) - 1e-8 <= lam <= float(hi) + 1e-8


def test_sign_normalisation_and_determinism():
    r = random.Random(1)
    g = random_signed(10, r)
    a = eig_symmetric(adjacency_matrix(g))
    b = eig_symmetric(adjacency_matrix(g))
    assert np.array_equal(a.eigenvalues, b.eigenvalues)
    assert np.array_equal(a.principal_vector, b.principal_vector)
    x = a.principal_vector
    assert x[int(np.argmax(np.abs(x)))] > 0


def test_permutation_invariance():
    r = random.Random(2)
    for _ in range(20):
        g = random_signed(9, r)
        a = adjacency_matrix(g)
        perm = list(range(9))
        r.shuffle(perm)
        b = a[np.ix_(perm, perm)]
        assert np.allclose(eig_symmetric(a).eigenvalues, eig_symmetric(b).eigenvalues, atol=1e-10)


def test_largest_eigenvalue_agrees():
    r = random.Random(3)
    for _ in range(20):
        a = adjacency_matrix(random_signed(11, r))
        assert largest_eigenvalue(a) == pytest.approx(eig_symmetric(a).index, abs=1e-11)


def test_interlacing():
    a = adjacency_matrix(random_signed(8, random.Random(4)))
    assert interlace_check(a, range(8)) == (True, None)
    k3 = adjacency_matrix(SignedCompleteGraph(3, SimpleGraph(3)))
    assert interlace_check(k3, [1])[0]
    r = random.Random(5)
    for _ in range(100):
        a = adjacency_matrix(random_signed(9, r, r.random()))
        sub = r.sample(range(9), r.randint(1, 9))
        assert interlace_check(a, sub)[0]
    with pytest.raises(ValueError):
        interlace_check(a, [])


def test_interlacing_witness():
    # a negative slack makes even the equality case fail, exposing the witness
    ok, wit = interlace_check(np.diag([3.0, 2.0, 1.0]), [0], tol=-0.5)
    assert not ok
    assert wit == (1, 3.0, 3.0, 1.0)


def test_bounds_helpers():
    assert (index_lower_bound(35, 15), index_upper_bound(35)) == (21, 34)
    with pytest.raises(ValueError):
        index_lower_bound(10, 0)
    g = fam.theta1(30, 2, 2)
    lam, _ = index(g)
    assert 21 - 1e-8 <= lam <= 29
    assert within_index_bounds(g, lam)


def test_unbalanced_index_strictly_below():
    r = random.Random(6)
    for _ in range(50):
        g = random_signed(r.randint(3, 12), r)
        lam, _ = index(g)
        if is_balanced(g):
            assert lam == pytest.approx(g.n - 1, abs=1e-10)
        else:
            assert lam < g.n - 1 - 1e-9
