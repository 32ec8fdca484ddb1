"""The bilinear form M(a,b,c,x) built from F(a,b;c;.) and its contiguous
neighbour F(a-1,b;c;.), evaluated at x and at 1-x.

    M = (c-a)(u v1 + u1 v - v v1) + (a+b-c) v v1

with u = F(a-1,b;c;x), v = F(a,b;c;x) and u1, v1 the same at 1-x.  M is
symmetric under x -> 1-x and reduces to the Legendre constant 1/pi for
a = b = 1/2, c = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import specfun
from .elliptic import EllipticParams, K_abc
from .errors import DomainError
from .hyp2f1 import hyp2f1
from .modulus import mu, phi_K
from .report import Report

LIMIT_X = 1e-6
LIMIT_TOL = 1e-2
FORM_RTOL = 1e-11


@dataclass(frozen=True)
class MEval:
    value: float
    x: float
    u: float
    v: float
    u1: float
    v1: float
    positive: float

    @property
    def forms_agree(self) -> bool:
        return abs(self.value - self.positive) <= FORM_RTOL * max(abs(self.positive), 1e-300)


def _check(a, b, c, x, y):
    if not (a > 0 and b > 0 and c > 0):
        raise DomainError(f"M needs a, b, c > 0, got ({a}, {b}, {c})")
    if not (0.0 < x < 1.0 and 0.0 < y < 1.0):
        raise DomainError(f"x must lie in (0, 1), got {x!r}")


def _comp(x: float, y: float | None) -> float:
    return 1.0 - x if y is None else y


def m_positive(a: float, b: float, c: float, x: float, y: float | None = None) -> float:
    """Manifestly positive form; no cancellation as x -> 0 or 1."""
    y = _comp(x, y)
    _check(a, b, c, x, y)
    g = hyp2f1(a + 1, b + 1, c + 1, x, y) * hyp2f1(a, b, c, y, x)
    h = hyp2f1(a + 1, b + 1, c + 1, y, x) * hyp2f1(a, b, c, x, y)
    return a * b * x * y / c * (g + h)


def m_eval(a: float, b: float, c: float, x: float, y: float | None = None) -> MEval:
    y = _comp(x, y)
    _check(a, b, c, x, y)
    u, v = hyp2f1(a - 1, b, c, x, y), hyp2f1(a, b, c, x, y)
    u1, v1 = hyp2f1(a - 1, b, c, y, x), hyp2f1(a, b, c, y, x)
    val = (c - a) * (u * v1 + u1 * v - v * v1) + (a + b - c) * v * v1
    return MEval(val, x, u, v, u1, v1, m_positive(a, b, c, x, y))


def m_value(a: float, b: float, c: float, x: float) -> float:
    return m_eval(a, b, c, x).value


def m_derivative(a: float, b: float, c: float, x: float, y: float | None = None) -> float:
    """dM/dx in closed form from u, v, u1, v1."""
    y = _comp(x, y)
    e = m_eval(a, b, c, x, y)
    t = a + b - 1
    num = (c - a) * ((1 - c + t * x) * e.u * e.v1 + (c - a - b + t * x) * e.u1 * e.v)
    num += (y - x) * ((c - a) * (a + 2 * b - 1) - b * b) * e.v * e.v1
    return num / (x * y)


# ---------------------------------------------------------------------------
# limits at the endpoints


def regime(a: float, b: float, c: float, tol: float = 1e-12) -> str:
    s = a + b - c
    if abs(s) <= tol:
        return "zero-balanced"
    if s > 0:
        return "a+b>c"
    if abs(c - a - b - 1) <= tol:
        return "c=a+b+1"
    if c < a + b + 1:
        return "a+b<c<a+b+1"
    return "c>a+b+1"


def limit_constant(a: float, b: float, c: float) -> float:
    """The constant the scaled M tends to at x -> 0+ (and 1-)."""
    kind = regime(a, b, c)
    B = specfun.beta
    if kind == "zero-balanced":
        return 1.0 / B(a, b)
    if kind == "a+b<c<a+b+1":
        return specfun.gamma(c) * specfun.gamma(a + b + 1 - c) / (specfun.gamma(a) * specfun.gamma(b))
    if kind == "c=a+b+1":
        return (a + b) / B(a, b)
    if kind == "c>a+b+1":
        d = c - a - b
        return a * b * (2 * c - a - b - 1) * B(c, d) / (c * (d - 1) * B(c - a, c - b))
    s = a + b - c
    return s * B(c, s) / B(a, b)


def scaled_m(a: float, b: float, c: float, x: float) -> float:
    """M(x) times the regime's scale factor, i.e. the quantity with a finite limit at 0+."""
    kind = regime(a, b, c)
    m = m_positive(a, b, c, x)
    if kind == "zero-balanced":
        return m
    if kind == "c=a+b+1":
        return m / (x * math.log(1 / x))
    if kind == "c>a+b+1":
        return m / x
    return x ** (a + b - c) * m


def m_limit_check(a: float, b: float, c: float, x: float = LIMIT_X, tol: float = LIMIT_TOL) -> Report:
    """Scaled M at x and at 1-x against the limit constant of its regime."""
    kind = regime(a, b, c)
    rep = Report(f"M limits, (a,b,c)=({a:g},{b:g},{c:g}), regime {kind}")
    lim = limit_constant(a, b, c)
    note = ""
    corr = 0.0
    if kind == "c=a+b+1":
        # leading correction is (1/c + R(a+1,b+1)) / log(1/x)
        corr = (1 / c + specfun.ramanujan_R(a + 1, b + 1)) / math.log(1 / x)
        note = f"predicted relative gap from the 1/log(1/x) term: {corr:.3e}"
    left = scaled_m(a, b, c, x)
    rep.close(f"scaled M at x={x:g}", left, lim, tol, relative=True, note=note)
    if kind == "c=a+b+1":
        rep.close(f"scaled M with 1/log correction at x={x:g}", left, lim * (1 + corr), tol,
                  relative=True, note="diagnostic")
    right = m_positive(a, b, c, 1 - x, x)
    rep.close(f"M symmetric at x={x:g}", right, m_positive(a, b, c, x, 1 - x),
              1e-12 * max(abs(right), 1e-300))
    if kind == "zero-balanced":
        if abs(c - 1) < 1e-12:
            sa = math.sin(math.pi * a) / math.pi
            rep.close(f"M constant sin(pi a)/pi at x={x:g}", m_positive(a, b, c, x), sa, 1e-10)
    elif kind in ("a+b<c<a+b+1", "c=a+b+1", "c>a+b+1"):
        # M(0+) = 0, but only at the rate x^min(c-a-b, 1)
        xs = (x ** 0.5, x, x * x)
        ms = [m_positive(a, b, c, t) for t in xs]
        rep.add(f"M decreases to 0 along x={xs[0]:g}, {xs[1]:g}, {xs[2]:g}",
                ms[0] > ms[1] > ms[2] and ms[2] <= 1e-3, value=ms[2])
    return rep


# ---------------------------------------------------------------------------
# modulus derivative through M


def mu_derivative(a: float, b: float, c: float, r: float) -> float:
    """d mu / dr = -B^3 M(r^2) / (4 r r'^2 K^2)."""
    if not 0.0 < r < 1.0:
        raise DomainError(f"r must lie in (0, 1), got {r!r}")
    p = EllipticParams(a, b, c)
    z, y = r * r, (1 - r) * (1 + r)
    k = K_abc(p, r, check=False)
    return -p.B ** 3 * m_positive(a, b, c, z, y) / (4 * r * y * k * k)


def _central(f, r, h):
    return (f(r + h) - f(r - h)) / (2 * h)


def check_mu_derivative(a: float, b: float, c: float,
                        rs: Sequence[float] = (0.1, 0.3, 0.5, 0.7, 0.9),
                        h: float = 1e-5, tol: float = 1e-6) -> Report:
    rep = Report(f"d mu/dr through M, (a,b,c)=({a:g},{b:g},{c:g})")
    for r in rs:
        fd = _central(lambda t: mu(a, b, c, t), r, h)
        rep.close(f"d mu/dr at r={r:g}", mu_derivative(a, b, c, r), fd, tol, relative=True)
    return rep


def modular_derivative_ratio(a: float, b: float, c: float, K: float, r: float,
                             h: float = 1e-5) -> tuple[float, float]:
    """Both sides of (M(s^2)/M(r^2)) ds/dr = (1/K) s s'^2 K(s)^2 / (r r'^2 K(r)^2)."""
    p = EllipticParams(a, b, c)
    s = phi_K(a, b, c, K, r)
    ds = _central(lambda t: phi_K(a, b, c, K, t), r, h)
    rc2, sc2 = (1 - r) * (1 + r), (1 - s) * (1 + s)
    lhs = m_positive(a, b, c, s * s, sc2) / m_positive(a, b, c, r * r, rc2) * ds
    ks, kr = K_abc(p, s, check=False), K_abc(p, r, check=False)
    rhs = s * sc2 * ks * ks / (K * r * rc2 * kr * kr)
    return lhs, rhs


def check_modular_derivative(a: float, b: float, c: float, K: float = 2.0,
                             rs: Sequence[float] = (0.1, 0.3, 0.5, 0.7, 0.9),
                             tol: float = 1e-6) -> Report:
    rep = Report(f"phi_K derivative through M, (a,b,c)=({a:g},{b:g},{c:g}), K={K:g}")
    for r in rs:
        lhs, rhs = modular_derivative_ratio(a, b, c, K, r)
        rep.close(f"phi_K relation at r={r:g}", lhs, rhs, tol, relative=True)
    return rep
