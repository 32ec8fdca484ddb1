"""Conformal moduli of the quadrilaterals (0, 1, m+in, i).

Each modulus comes from solving one scalar equation for the prevertex
1/r^2 and then taking K(r')/K(r).  The truncated values are compared with
a six-decimal reference table, and the diagonal shows two quick sanity
properties: the unit square has modulus 1, and swapping m and n gives the
reciprocal.
"""

import time

from gelliptic import quadmod

t0 = time.perf_counter()
tab = quadmod.qm_table(5, 5)
elapsed = time.perf_counter() - t0

print(f"QM(m+in, i), computed in {elapsed * 1e3:.1f} ms\n")
print("      " + "".join(f"   n={n}    " for n in range(1, 6)))
worst = 0.0
for m in range(5):
    cells = []
    for n in range(5):
        v = quadmod.truncate6(tab[m, n])
        worst = max(worst, abs(v - quadmod.REFERENCE_TABLE[m][n]))
        cells.append(f"{v:.6f}  ")
    print(f"m={m + 1}  " + " ".join(cells))
print(f"\nlargest difference from the reference table: {worst:.1e}")

print("\nreciprocity QM(m+in, i) * QM(n+im, i):")
for m, n in ((1, 2), (2, 5), (3, 4)):
    print(f"  ({m},{n}): {tab[m - 1, n - 1] * tab[n - 1, m - 1]:.15f}")

# a quadrilateral that is not convex: the symmetric kite with a reflex angle
res = quadmod.qm(0.5 * (1 + 1j) / abs(1 + 1j), 1j)
print(f"\nnon-convex symmetric quadrilateral: QM = {res.modulus:.15f} "
      f"(convex: {quadmod.QuadSpec(0.5 * (1 + 1j) / abs(1 + 1j), 1j).convex})")
