"""Gamma-family kernels: gamma, digamma, trigamma, beta, Pochhammer symbols.

All functions take and return Python floats.  Poles of the gamma function
(0, -1, -2, ...) are reported with :class:`PoleError` instead of returning
an infinity.
"""

from __future__ import annotations

import math

from .errors import DomainError, PoleError

EULER_GAMMA = 0.57721566490153286061
POLE_TOL = 1e-12

# Bernoulli-number coefficients B_{2k}/(2k) for the digamma expansion and
# B_{2k} for the trigamma expansion, k = 1..8.
_DIGAMMA_ASY = (
    1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240, 1.0 / 132,
    -691.0 / 32760, 1.0 / 12, -3617.0 / 8160,
)
_TRIGAMMA_ASY = (
    1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66,
    -691.0 / 2730, 7.0 / 6, -3617.0 / 510,
)
_ASY_MIN = 10.0


def _check_pole(x: float) -> None:
    if not math.isfinite(x):
        raise DomainError(f"argument must be finite, got {x!r}")
    if x <= POLE_TOL and abs(x - round(x)) <= POLE_TOL:
        raise PoleError(f"{x!r} is a pole of the gamma function")


def is_pole(x: float) -> bool:
    """True when ``x`` is within the pole tolerance of 0, -1, -2, ..."""
    return x <= POLE_TOL and abs(x - round(x)) <= POLE_TOL


def gamma(x: float) -> float:
    _check_pole(x)
    try:
        return math.gamma(x)
    except OverflowError:
        raise OverflowError(f"gamma({x!r}) exceeds the double range") from None


def rgamma(x: float) -> float:
    """Reciprocal gamma function, zero at the poles."""
    if is_pole(x):
        return 0.0
    if x > 171.6:
        return math.exp(-math.lgamma(x))
    return 1.0 / math.gamma(x)


def lgamma(x: float) -> float:
    """log|Gamma(x)|."""
    _check_pole(x)
    return math.lgamma(x)


def digamma(x: float) -> float:
    """Logarithmic derivative of the gamma function.

    Uses reflection for x < 0, upward recurrence to x >= 10 and the
    asymptotic Bernoulli expansion there.
    """
    _check_pole(x)
    if x < 0.0:
        return digamma(1.0 - x) - math.pi / math.tan(math.pi * x)
    acc = 0.0
    while x < _ASY_MIN:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    tail = 0.0
    for coef in reversed(_DIGAMMA_ASY):
        tail = (tail + coef) * inv2
    return acc + math.log(x) - 0.5 / x - tail


def trigamma(x: float) -> float:
    """Derivative of the digamma function."""
    _check_pole(x)
    if x < 0.0:
        s = math.sin(math.pi * x)
        return -trigamma(1.0 - x) + (math.pi / s) ** 2
    acc = 0.0
    while x < _ASY_MIN:
        acc += 1.0 / (x * x)
        x += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    tail = 0.0
    for coef in reversed(_TRIGAMMA_ASY):
        tail = (tail + coef) * inv2
    return acc + inv + 0.5 * inv2 + tail * inv


def beta(x: float, y: float) -> float:
    """Euler beta function B(x, y) for x, y > 0."""
    if not (x > 0.0 and y > 0.0):
        raise DomainError(f"beta requires x, y > 0, got ({x!r}, {y!r})")
    s = x + y
    if s < 170.0:
        # Order the product so that beta(x, y) == beta(y, x) bit for bit.
        lo, hi = (x, y) if x <= y else (y, x)
        return math.gamma(lo) * (math.gamma(hi) / math.gamma(s))
    lo, hi = (x, y) if x <= y else (y, x)
    return math.exp(math.lgamma(lo) + math.lgamma(hi) - math.lgamma(s))


def pochhammer(a: float, n: int) -> float:
    """Rising factorial (a, n) = a (a+1) ... (a+n-1), with (a, 0) = 1."""
    if n < 0 or int(n) != n:
        raise DomainError(f"pochhammer needs a natural index, got {n!r}")
    p = 1.0
    for k in range(int(n)):
        p *= a + k
    return p


def pochhammer_ext(a: float, t: float) -> float:
    """(a, t) = Gamma(a + t) / Gamma(a) for real shift t."""
    if t == 0.0:
        _check_pole(a)
        return 1.0
    if float(t).is_integer() and 0 < t <= 64:
        _check_pole(a)
        return pochhammer(a, int(t))
    _check_pole(a)
    _check_pole(a + t)
    if a > 0 and a + t > 0 and max(a, a + t) > 150:
        return math.exp(math.lgamma(a + t) - math.lgamma(a))
    return math.gamma(a + t) / math.gamma(a)


def ramanujan_R(a: float, b: float) -> float:
    """R(a, b) = -psi(a) - psi(b) - 2*gamma, the zero-balanced constant."""
    if not (a > 0.0 and b > 0.0):
        raise DomainError(f"ramanujan_R requires a, b > 0, got ({a!r}, {b!r})")
    return -digamma(a) - digamma(b) - 2.0 * EULER_GAMMA
