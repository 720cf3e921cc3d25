from __future__ import annotations

from fractions import Fraction

from theta_spectra import families as fam
from theta_spectra import verify as V
from theta_spectra.exactpoly import IntPoly
from theta_spectra.graphs import SignedCompleteGraph, SimpleGraph
from theta_spectra.reports import report_json


def test_factorizations_pass_including_boundaries():
    rep = V.verify_factorizations([(12, 8, 0), (12, 8, 1), (12, 8, 2), (16, 10, 4)])
    assert rep.passed and rep.totals["exact-pass"] == 6
    detail = next(p.detail for p in rep.points if p.params.get("s") == 1)
    assert detail["quotient_route"] is True


def test_factorizations_negative_control():
    def corrupt(n, k, s):
        f = fam.F_poly(n, k, s)
        return f + IntPoly((0, 0, 1))
    rep = V.verify_factorizations([(12, 8, 1)], F=corrupt)
    bad = rep.failures()
    assert len(bad) == 1 and bad[0].params["family"] == "theta1"
    assert "first_difference" in bad[0].detail
    rep = V.verify_factorizations([(12, 8, 1)], P=lambda n, k: fam.P_poly(n, k) * 2)
    assert [p.params["family"] for p in rep.failures()] == ["theta2"]


def test_identity_one_and_splits_pass():
    rep = V.verify_appendix_identities([(20, 9)])
    ok = {p.params["identity"] for p in rep.points if p.status == "exact-pass"}
    assert "theta1(s-1,t+1)-theta1(s,t)=8(x+1)^(n-7)p" in ok
    assert {"p=p1+p2=P1+P2", "s=s1+s2", "S=S1+S2"} <= ok


def test_printed_identities_two_and_three_carry_witnesses():
    rep = V.verify_appendix_identities([(35, 15)])
    bad = {p.params["identity"]: p.detail for p in rep.failures()}
    # the printed s and S disagree with the exact differences; the witness is the delta
    assert set(bad) == {"theta2-theta1(0,k-6)=-8(x+1)^(n-7)s", "theta2-theta1(k-6,0)=-16(x+1)^(n-7)S"}
    assert bad["theta2-theta1(0,k-6)=-8(x+1)^(n-7)s"]["derived_minus_printed"] == IntPoly((40 * 35,))
    assert bad["theta2-theta1(k-6,0)=-16(x+1)^(n-7)S"]["derived_minus_printed"] == IntPoly((20 * 35, 0, -81))


def test_signs_region_and_values():
    rep = V.verify_appendix_signs([(35, 15)])
    assert rep.passed and rep.totals["exact-pass"] == 12
    s0 = next(p for p in rep.points if p.params.get("s") == 0)
    assert s0.detail["value"] < 0
    out = V.verify_appendix_signs([(20, 8)])
    assert out.totals["exact-pass"] == 0 and out.totals["informational"] == len(out.points)


def test_ordering_and_dominance():
    rep = V.verify_ordering_lemma(35, 15)
    assert rep.passed and rep.points[0].detail["argmax_s"] == 0
    assert rep.points[0].detail["margin"] > Fraction(1, 10 ** 9)
    assert rep.points[0].detail["reversed_sequence"] == rep.points[0].detail["sequence"][::-1]
    rep = V.verify_theta2_dominates(38, 18)
    assert rep.passed and rep.totals["exact-pass"] == 2
    rep = V.verify_theta2_dominates(30, 10)
    assert rep.totals["informational"] == 2


def test_bounds():
    insts = V.family_instances([(35, 8, 1), (20, 10, 0)])
    insts.append(V.BoundInstance("K_9", SignedCompleteGraph(9, SimpleGraph(9))))
    rep = V.verify_bounds(insts)
    assert rep.passed
    # check_bounds on its own, fed deliberately out-of-range values
    fake = V.BoundInstance("fake", fam.theta2(12, 8), "theta1", 0, 2)
    assert V.check_bounds(fake, 4.0) == ["lower n-k+1", "lower n-4", "lower n-3"]
    assert V.check_bounds(fake, 11.0) == ["upper n-1 (strict)"]


def test_theorem_informational_and_worker_independent():
    a = V.verify_theorem(28, 8)
    b = V.verify_theorem(28, 8, workers=2)
    assert report_json(a, include_meta=False) == report_json(b, include_meta=False)
    pt = a.points[0]
    assert pt.status == "informational" and pt.detail["classes"] == 67
    assert pt.detail["winner_is_theta2"]
    assert [row["rank"] for row in a.table] == list(range(1, 11))
    assert a.table[0]["margin_to_winner"] == 0.0
    bounds = a.points[1]
    assert bounds.status == "numeric-pass"
    assert 21 - 1e-8 <= bounds.detail["min_index"] <= bounds.detail["max_index"] < 27


def test_exact_tie_tools():
    g = SimpleGraph(7, frozenset(fam.theta2_edges(8)))
    h = g.relabel([6, 5, 4, 3, 2, 1, 0])
    t = SimpleGraph(7, frozenset(fam.theta1_edges(1, 1)))
    assert V.exact_index_compare(g, h, 12) == 0
    assert V.exact_index_compare(g, t, 12) == 1
    assert V.resolve_near_ties([t, g, h], 12) == [1, 2, 0]
