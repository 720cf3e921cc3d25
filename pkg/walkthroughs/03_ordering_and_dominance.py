"""How the index moves along the theta1 family, and why theta2 beats it.

For fixed n and k the graphs theta1(s, t) with s + t = k - 6 form a path of
shapes. Their largest eigenvalues are isolated here by Sturm sequences on the
exact factor F, so the comparisons are certified rather than floating point.

Run:  python3 walkthroughs/03_ordering_and_dominance.py
"""
from __future__ import annotations

from theta_spectra import verify as V

n, k = 35, 15
rep = V.verify_ordering_lemma(n, k)
pt = rep.points[0]
print(f"index of theta1(s, {k - 6} - s) inside K_{n}:")
for s, lam in enumerate(pt.detail["sequence"]):
    print(f"  s={s:2d}  {lam:.10f}")
print(f"\nlargest at s={pt.detail['argmax_s']}, ahead by {float(pt.detail['margin']):.4g}")
for note in rep.notes:
    print(note)

# theta2 against the two end points of that path. The isolating intervals are
# disjoint, so the order is proved, not estimated.
dom = V.verify_theta2_dominates(n, k)
print()
for p in dom.points:
    lo, hi = p.detail["theta2_interval"]
    print(f"theta2 vs {p.params['versus']}: theta2 index in [{float(lo):.12f}, {float(hi):.12f}], gap {p.detail['gap']:.4g}")
