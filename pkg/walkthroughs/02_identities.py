"""Checking the printed difference identities against exact arithmetic.

Three identities compare charpolys of neighbouring theta graphs. Each says the
difference is a power of (x + 1) times a short polynomial whose coefficients
are printed in closed form. Here both sides are computed exactly so any
mismatch shows up as a nonzero polynomial, not a rounding artefact.

Run:  python3 walkthroughs/02_identities.py
"""
from __future__ import annotations

from theta_spectra import verify as V

rep = V.verify_appendix_identities([(20, 9), (35, 15)])
print(f"{rep.totals['exact-pass']} of {len(rep.points)} identity points hold exactly\n")

# The step identity between theta1(s-1, t+1) and theta1(s, t) holds for every s.
# The two identities relating theta2 to the extreme theta1 shapes do not hold
# as printed; the difference derived minus printed is tiny and regular.
for p in rep.failures():
    n, k = p.params["n"], p.params["k"]
    print(f"(n={n}, k={k})  {p.params['identity']}")
    print(f"    derived - printed = {p.detail['derived_minus_printed']}")

print("\nThe pattern over the whole grid is 40n for s and")
print("(k^2 - kn - 8k + 10n - 11) x^2 + 20n for S.")

# What matters downstream is the sign of s and S at the theta1 index. The sign
# suite evaluates both the printed splits and the derived polynomials there.
signs = V.verify_appendix_signs([(35, 15)])
for p in signs.points:
    if "derived_sign_at_index" in p.detail:
        print(f"{p.params['case']:>22}: printed sign {p.detail['sign_at_index']:+d}, "
              f"derived sign {p.detail['derived_sign_at_index']:+d}")
