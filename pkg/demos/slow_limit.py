"""How fast does the scaled M approach its limit at x = 0?

In four of the five regimes the scaled M is within 1e-4 of its limit by
x = 1e-6.  When c = a + b + 1 the scaled quantity M/(x log(1/x)) carries a
correction proportional to 1/log(1/x), so at x = 1e-15, the smallest x
for which 1 - x is still distinct from 1 in double precision, it is about
3 percent away.  A one-term correction accounts for the gap.
"""

import math

from gelliptic import mfunc, specfun

a, b, c = 0.5, 1.0, 2.5
lim = mfunc.limit_constant(a, b, c)
k = 1 / c + specfun.ramanujan_R(a + 1, b + 1)
print(f"(a,b,c) = ({a}, {b}, {c}), limit {lim}")
print(f"{'x':>8} {'scaled M':>18} {'relative gap':>14} {'k/log(1/x)':>12}")
for e in (3, 6, 9, 12, 15):
    x = 10.0 ** -e
    s = mfunc.scaled_m(a, b, c, x)
    print(f"{x:8.0e} {s:18.12f} {s / lim - 1:14.3e} {k / math.log(1 / x):12.3e}")

print("\nthe other regimes at x = 1e-6:")
for t in ((0.3, 0.4, 1.0), (0.3, 0.4, 2.5), (0.7, 0.8, 1.2), (0.3, 0.4, 0.7)):
    s, L = mfunc.scaled_m(*t, 1e-6), mfunc.limit_constant(*t)
    print(f"  {mfunc.regime(*t):14s} {t}: relative gap {s / L - 1:+.2e}")
