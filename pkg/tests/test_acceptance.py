"""Acceptance criteria 1-11, one test and one PASS/FAIL line each.

Tolerances and grids are pinned here. Criterion 7 is the long exhaustive run
(about two and a half minutes on one core); set THETA_SPECTRA_SKIP_LONG=1 to skip it.
Worker count for it comes from THETA_SPECTRA_WORKERS (default 1).
"""
from __future__ import annotations

import os
import random
import time
from functools import lru_cache

import pytest

from theta_spectra import verify as V
from theta_spectra.exactpoly import IntPoly
from theta_spectra.enumeration import brute_force_bicyclic_certificates, enumerate_bicyclic
from theta_spectra.graphs import SignedCompleteGraph, SimpleGraph, adjacency_matrix
from theta_spectra.perturb import Hypothesis, SwapMove, checked_swap, random_bicyclic
from theta_spectra.spectra import eig_symmetric, interlace_check

GRID_N = (12, 16, 20, 24, 28, 32, 36)
GRID_K = tuple(range(8, 15))
SIGN_K = (15, 16, 17, 18)
LOWER_TOL = 1e-8          # n - k + 1 - 1e-8 <= index
UPPER_SLACK = 1e-9        # index <= n - 1 - 1e-9
PERTURB_TOL = 1e-9
INTERLACE_SLACK = 1e-9
COMPLETE_TOL = 1e-10
RESIDUAL_FACTOR = 1e-10   # residual <= 1e-10 * n
LONG_N, LONG_K = 35, 15


@pytest.fixture
def emit(capsys):
    def _emit(criterion: int, ok: bool, msg: str, seconds: float) -> None:
        with capsys.disabled():
            print(f"\n[criterion {criterion:2d}] {'PASS' if ok else 'FAIL'} ({seconds:.1f}s) {msg}")
    return _emit


def grid_pairs():
    return [(n, k) for n in GRID_N for k in GRID_K if n >= k]


@lru_cache(maxsize=None)
def factorization_report():
    return V.verify_factorizations([(n, k, s) for n, k in grid_pairs() for s in range(k - 5)])


@lru_cache(maxsize=None)
def theorem_report():
    workers = int(os.environ.get("THETA_SPECTRA_WORKERS", "1"))
    return V.verify_theorem(LONG_N, LONG_K, workers=workers)


def _family_points(rep, family):
    return [p for p in rep.points if p.params["family"] == family]


def test_criterion_01_theta1_factorization(emit):
    t0 = time.perf_counter()
    pts = _family_points(factorization_report(), "theta1")
    bad = [p.params for p in pts if p.status != "exact-pass"]
    expected = sum(k - 5 for _, k in grid_pairs())
    ok = not bad and len(pts) == expected
    emit(1, ok, f"{len(pts) - len(bad)}/{expected} theta1 points coefficient-exact", time.perf_counter() - t0)
    assert ok, bad[:5]


def test_criterion_02_theta2_factorization(emit):
    t0 = time.perf_counter()
    pts = _family_points(factorization_report(), "theta2")
    bad = [p.params for p in pts if p.status != "exact-pass"]
    ok = not bad and len(pts) == len(grid_pairs())
    emit(2, ok, f"{len(pts) - len(bad)}/{len(grid_pairs())} theta2 points coefficient-exact", time.perf_counter() - t0)
    assert ok, bad[:5]


def k2_coeff(n: int, k: int) -> int:
    return k * k - k * n - 8 * k + 10 * n - 11


def test_criterion_03_appendix_identities(emit):
    t0 = time.perf_counter()
    rep = V.verify_appendix_identities(grid_pairs())
    failed = sorted({p.params["identity"] for p in rep.failures()})
    msg = f"{rep.totals['exact-pass']}/{len(rep.points)} exact"
    if failed:
        msg += "; failing: " + ", ".join(failed)
        # diagnostic only: every discrepancy follows one closed form per identity
        X = IntPoly.x()
        fits = sum(p.detail["derived_minus_printed"] == (
            IntPoly.constant(40 * p.params["n"]) if p.params["identity"].endswith("s")
            else (IntPoly.constant(k2_coeff(p.params["n"], p.params["k"])) * X * X
                  + IntPoly.constant(20 * p.params["n"])))
            for p in rep.failures())
        msg += (f"; {fits}/{len(rep.failures())} discrepancies equal derived-printed = 40n (s) "
                f"or (k^2-kn-8k+10n-11)x^2+20n (S)")
    emit(3, rep.passed, msg, time.perf_counter() - t0)
    assert rep.passed, failed


def test_criterion_04_appendix_signs(emit):
    t0 = time.perf_counter()
    pairs = [(n, k) for k in SIGN_K for n in (k + 20, k + 25)]
    rep = V.verify_appendix_signs(pairs)
    ok = rep.passed and rep.totals["exact-pass"] == len(rep.points) > 0
    emit(4, ok, f"{rep.totals['exact-pass']}/{len(rep.points)} strict signs exact", time.perf_counter() - t0)
    assert ok, [p.params for p in rep.failures()][:5]


def test_criterion_05_dominance(emit):
    t0 = time.perf_counter()
    reps = [V.verify_theta2_dominates(k + 20, k) for k in SIGN_K]
    pts = [p for r in reps for p in r.points]
    ok = all(p.status == "exact-pass" for p in pts) and len(pts) == 8
    gap = min(p.detail["gap"] for p in pts)
    emit(5, ok, f"{sum(p.status == 'exact-pass' for p in pts)}/8 disjoint, smallest gap {gap:.3g}",
         time.perf_counter() - t0)
    assert ok


def test_criterion_06_ordering(emit):
    t0 = time.perf_counter()
    reps = [V.verify_ordering_lemma(35, 15), V.verify_ordering_lemma(36, 16)]
    pts = [r.points[0] for r in reps]
    ok = all(p.status == "exact-pass" for p in pts)
    desc = ", ".join(f"(k={p.params['k']}) argmax s={p.detail['argmax_s']} margin {float(p.detail['margin']):.3g}"
                     for p in pts)
    emit(6, ok, desc, time.perf_counter() - t0)
    assert ok


@pytest.mark.slow
@pytest.mark.skipif(os.environ.get("THETA_SPECTRA_SKIP_LONG") == "1", reason="long exhaustive run skipped")
def test_criterion_07_theorem_exhaustive(emit):
    t0 = time.perf_counter()
    rep = theorem_report()
    win = rep.points[0]
    ok = win.status == "numeric-pass"
    d = win.detail
    emit(7, ok, f"(n={LONG_N}, k={LONG_K}) {d['classes']} classes, winner {d['winner'].decode()} "
                f"is theta2(0,{LONG_K - 5}): {d['winner_is_theta2']}, runner-up margin {d['runner_up_margin']:.6g}",
         time.perf_counter() - t0)
    assert ok, d


@pytest.mark.parametrize("n,k", [(28, 8), (29, 9), (30, 10)])
def test_criterion_07_companions(n, k, emit):
    t0 = time.perf_counter()
    rep = V.verify_theorem(n, k)
    d = rep.points[0].detail
    # informational: the winner is recorded, not asserted
    assert rep.points[0].status == "informational" and len(rep.table) == 10
    emit(7, True, f"companion (n={n}, k={k}) informational: {d['classes']} classes, "
                  f"theta2 wins: {d['winner_is_theta2']}, margin {d['runner_up_margin']:.6g}",
         time.perf_counter() - t0)


def test_criterion_08_enumeration_oracle(emit):
    t0 = time.perf_counter()
    counts = []
    ok = True
    for v in (4, 5, 6, 7):
        got = [c.certificate for c in enumerate_bicyclic(v)]
        brute = brute_force_bicyclic_certificates(v)
        ok &= set(got) == brute and len(got) == len(brute)
        counts.append(f"v={v}: {len(got)}/{len(brute)}")
    emit(8, ok, "; ".join(counts), time.perf_counter() - t0)
    assert ok


def _random_negative_part(n: int, r: random.Random) -> SimpleGraph:
    if r.random() < 0.5:
        k = r.randint(5, n + 1)
        return SimpleGraph(n, random_bicyclic(k, r).edges)
    p = r.uniform(0.1, 0.6)
    return SimpleGraph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n) if r.random() < p))


def test_criterion_09_perturbation_property(emit):
    t0 = time.perf_counter()
    r = random.Random(909)
    trials, worst = 0, float("inf")
    while trials < 1000:
        n = r.randint(8, 16)
        g = SignedCompleteGraph(n, _random_negative_part(n, r))
        if not g.negative_edges.edges:
            continue
        a, b = r.choice(sorted(g.negative_edges.edges))
        rr, s = (a, b) if r.random() < 0.5 else (b, a)
        ts = [t for t in range(n) if t not in (rr, s) and g.sign(rr, t) == 1]
        if not ts:
            continue
        res = checked_swap(g, SwapMove(rr, s, r.choice(ts)), tol=PERTURB_TOL)
        if res.hypothesis is Hypothesis.FAILS:
            continue
        trials += 1
        worst = min(worst, res.margin)
    ok = worst >= -PERTURB_TOL
    emit(9, ok, f"{trials} weak-hypothesis moves, smallest change {worst:.3g}", time.perf_counter() - t0)
    assert ok


def test_criterion_10_eigensolver(emit):
    t0 = time.perf_counter()
    worst_ratio = 0.0
    insts = V.family_instances([(n, k, s) for n, k in grid_pairs() for s in range(k - 5)])
    for inst in insts:
        res = eig_symmetric(adjacency_matrix(inst.graph))
        worst_ratio = max(worst_ratio, res.residual / (RESIDUAL_FACTOR * inst.graph.n))
    if os.environ.get("THETA_SPECTRA_SKIP_LONG") != "1":
        d = theorem_report().points[1].detail
        worst_ratio = max(worst_ratio, d["max_residual"] / (RESIDUAL_FACTOR * LONG_N))
    r = random.Random(1010)
    interlace_ok = 0
    for _ in range(500):
        n = r.randint(2, 14)
        p = r.random()
        neg = SimpleGraph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n) if r.random() < p))
        a = adjacency_matrix(SignedCompleteGraph(n, neg))
        sub = r.sample(range(n), r.randint(1, n))
        interlace_ok += interlace_check(a, sub, tol=INTERLACE_SLACK)[0]
    complete_err = max(abs(eig_symmetric(adjacency_matrix(SignedCompleteGraph(n, SimpleGraph(n)))).index - (n - 1))
                       for n in range(2, 41))
    ok = worst_ratio <= 1 and interlace_ok == 500 and complete_err <= COMPLETE_TOL
    emit(10, ok, f"worst residual / (1e-10 n) = {worst_ratio:.3g} over {len(insts)} family instances"
                 f"{'' if os.environ.get('THETA_SPECTRA_SKIP_LONG') == '1' else ' and the exhaustive run'}; "
                 f"interlacing {interlace_ok}/500; |index(K_n) - (n-1)| <= {complete_err:.2g}",
         time.perf_counter() - t0)
    assert ok


def test_criterion_11_bounds(emit):
    t0 = time.perf_counter()
    insts = V.family_instances([(n, k, s) for n, k in grid_pairs() for s in range(k - 5)])
    bad = []
    for inst in insts:
        lam = eig_symmetric(adjacency_matrix(inst.graph)).index
        n, k = inst.graph.n, inst.graph.k
        if not (n - k + 1 - LOWER_TOL <= lam <= n - 1 - UPPER_SLACK):
            bad.append((inst.label, lam))
    msg = f"{len(insts) - len(bad)}/{len(insts)} family instances in [n-k+1-1e-8, n-1-1e-9]"
    if os.environ.get("THETA_SPECTRA_SKIP_LONG") != "1":
        pt = theorem_report().points[1]
        if pt.status != "numeric-pass":
            bad.append(("exhaustive", pt.detail))
        msg += (f"; all {theorem_report().points[0].detail['classes']} exhaustive instances in "
                f"[{pt.detail['min_index']:.6f}, {pt.detail['max_index']:.6f}]")
    ok = not bad
    emit(11, ok, msg, time.perf_counter() - t0)
    assert ok, bad[:5]
