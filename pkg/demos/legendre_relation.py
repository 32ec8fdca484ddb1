"""Legendre's relation and its generalization through M.

For the classical integrals E K' + E' K - K K' = pi/2.  Written in
hypergeometric form this says that a certain bilinear combination M of
F(a,b;c;x), F(a-1,b;c;x) and the same functions at 1-x is constant.  For
a + b = c = 1 the constant is sin(pi a)/pi; away from that family M varies
with x, and the script shows both.
"""

import math

from gelliptic import mfunc
from gelliptic.classical import ellipe, ellipk

print("classical check, E K' + E' K - K K' - pi/2:")
for r in (0.1, 0.5, 0.9, 0.999):
    rc = math.sqrt(1 - r * r)
    K, E, Kp, Ep = ellipk(r), ellipe(r), ellipk(rc), ellipe(rc)
    print(f"  r = {r:<6g} {E * Kp + Ep * K - K * Kp - math.pi / 2:+.2e}")

print("\nM on the family a + b = c = 1 (constant sin(pi a)/pi):")
for a in (1 / 2, 1 / 3, 1 / 4, 1 / 6):
    vals = [mfunc.m_value(a, 1 - a, 1.0, x) for x in (0.1, 0.5, 0.9)]
    spread = max(vals) - min(vals)
    print(f"  a = {a:.4f}: M = {vals[1]:.15f}, sin(pi a)/pi = {math.sin(math.pi * a) / math.pi:.15f},"
          f" spread over x {spread:.1e}")

print("\nM off the family varies with x but stays symmetric about x = 1/2:")
for x in (0.1, 0.3, 0.5, 0.7, 0.9):
    print(f"  M(0.4, 0.8, 1.1, {x}) = {mfunc.m_value(0.4, 0.8, 1.1, x):.12f}")
