"""Where the characteristic polynomial of a theta graph comes from.

A signed complete graph K_n carries a +1 on every edge except a small set of
negative edges. When those negative edges form the theta graph theta1(s, t),
a special vertex partition collapses the n x n adjacency matrix to a tiny
quotient. This script walks through that on one example and checks it
against the full determinant.

Run:  python3 walkthroughs/01_factorization.py
"""
from __future__ import annotations

from theta_spectra import families as fam
from theta_spectra.exactpoly import IntPoly, char_poly_exact
from theta_spectra.graphs import adjacency_matrix
from theta_spectra.quotient import char_poly_from_quotient, quotient_matrix

n, s, t = 20, 2, 1
k = s + t + 6
g = fam.theta1(n, s, t)
print(f"theta1(s={s}, t={t}) inside K_{n}: {len(g.negative_edges.edges)} negative edges, k = {k}")

# The partition: vertices of the theta graph that see identical sign
# patterns are grouped, and everything off the theta graph forms one block.
part = fam.theta1_partition(n, s, t)
q = quotient_matrix(g, part)
print(f"\nquotient has {len(q)} blocks:")
for row in q:
    print("   ", " ".join(f"{v:3d}" for v in row))

# Full route: Faddeev-LeVerrier on the whole integer matrix.
full = char_poly_exact(adjacency_matrix(g).tolist())
via_quotient = char_poly_from_quotient(g, part)
print(f"\nfull charpoly degree {full.degree}, quotient route agrees: {full == via_quotient}")

# The charpoly splits as a power of (x + 1) times a low degree factor F.
F = fam.F_poly(n, k, s)
one = IntPoly((1, 1))
print(f"(x+1)^(n-7) * F == charpoly: {one ** (n - 7) * F == full}")
print(f"F = {F}")

# theta2 has a smaller quotient, so more of the spectrum sits at -1.
g2 = fam.theta2(n, k)
full2 = char_poly_exact(adjacency_matrix(g2).tolist())
print(f"\ntheta2(k={k}) charpoly == (x+1)^(n-5) * P: {one ** (n - 5) * fam.P_poly(n, k) == full2}")
