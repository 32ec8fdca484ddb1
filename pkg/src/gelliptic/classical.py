"""Classical complete elliptic integrals via the arithmetic-geometric mean.

These are independent of the hypergeometric series and serve both as the
K in the quadrilateral-modulus quotient and as test oracles.
"""

from __future__ import annotations

import math

from .errors import DomainError, InfinityAtOne


def agm(x: float, y: float) -> float:
    if x < 0 or y < 0:
        raise DomainError("agm needs non-negative arguments")
    if x == 0.0 or y == 0.0:
        return 0.0
    for _ in range(64):
        if abs(x - y) <= 1e-16 * x:
            break
        x, y = 0.5 * (x + y), math.sqrt(x * y)
    return 0.5 * (x + y)


def _comp(r: float, rc: float | None) -> float:
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"r must lie in [0, 1], got {r!r}")
    return math.sqrt((1.0 - r) * (1.0 + r)) if rc is None else rc


def ellipk(r: float, rc: float | None = None) -> float:
    """K(r) = pi / (2 AGM(1, r')), r the modulus (not the parameter r**2)."""
    rc = _comp(r, rc)
    if rc == 0.0:
        raise InfinityAtOne("K(1) is infinite")
    return math.pi / (2.0 * agm(1.0, rc))


def ellipe(r: float, rc: float | None = None) -> float:
    """E(r) from the AGM sequence with the Gauss-Legendre correction sum."""
    rc = _comp(r, rc)
    if rc == 0.0:
        return 1.0
    x, y = 1.0, rc
    s = 0.5 * r * r
    p = 0.5
    for _ in range(64):
        c = 0.5 * (x - y)
        x, y = 0.5 * (x + y), math.sqrt(x * y)
        p *= 2.0
        s += p * c * c
        if abs(c) <= 1e-15 * x:
            break
    return math.pi / (2.0 * x) * (1.0 - s)


def agm_quotient(r: float, rc: float | None = None) -> float:
    """K(r')/K(r) = AGM(1, r') / AGM(1, r)."""
    rc = _comp(r, rc)
    if r == 0.0 or rc == 0.0:
        raise DomainError("quotient K(r')/K(r) is degenerate at r in {0, 1}")
    return agm(1.0, rc) / agm(1.0, r)
