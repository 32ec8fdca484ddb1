"""Run the monotonicity catalogue for the generalized elliptic integrals.

Every entry is a function of r built from K and E.  For each one the script
checks the direction of monotonicity on a grid, the limits at both ends of
(0, 1) and, where claimed, the signs of the Maclaurin coefficients.
"""

from gelliptic import elliptic

rep = elliptic.verify_catalogue(tol=1e-3, escalate=False)
by_id: dict[str, list] = {}
for chk in rep.checks:
    pid, _, name = chk.name.partition(": ")
    by_id.setdefault(pid, []).append(chk)

for pid in elliptic.PROPERTY_IDS:
    checks = by_id[pid]
    ok = all(c.passed for c in checks)
    trip = elliptic.SAMPLE_TRIPLES[pid]
    print(f"{pid:5s} {'ok ' if ok else 'BAD'} (a,b,c)=({trip[0]:.4g},{trip[1]:.4g},{trip[2]:.4g})  "
          f"{len(checks)} checks")
print(f"\n{len(rep.checks) - len(rep.failures)}/{len(rep.checks)} checks passed")
