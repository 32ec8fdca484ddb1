"""Generalized modulus mu_{a,b,c}, its inverse and the modular function phi_K.

    mu_{a,b,c}(r) = B(a,b)/2 * F(a,b;c;r'^2) / F(a,b;c;r^2)

Root solves run in the variable s = log(r/r'), so that r^2 = expit(2s)
and r'^2 = expit(-2s) are both available to full relative precision.  In
this variable the symmetry mu(r') = (B/2)^2 / mu(r) is s -> -s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from scipy.optimize import brentq
from scipy.special import expit

from . import specfun
from .errors import DomainError, NoConvergence, OutOfRange, PreconditionError
from .hyp2f1 import hyp2f1
from .report import Report, monotone_checks

SOLVE_RTOL = 1e-11
S_LIMIT = 340.0          # expit(-2*340) ~ 1e-296
MAX_ITER = 200


@dataclass(frozen=True)
class InverseSolveReport:
    r: float
    r_comp: float
    iterations: int
    residual: float
    bracket: tuple[float, float]
    s: float = 0.0


def _check_params(a: float, b: float, c: float) -> None:
    if not (a > 0 and b > 0 and c > 0):
        raise DomainError(f"mu needs a, b, c > 0, got ({a}, {b}, {c})")


def _mu_zy(a: float, b: float, c: float, z: float, y: float) -> float:
    return 0.5 * specfun.beta(a, b) * hyp2f1(a, b, c, y, z) / hyp2f1(a, b, c, z, y)


def _mu_s(a: float, b: float, c: float, s: float) -> float:
    return _mu_zy(a, b, c, float(expit(2 * s)), float(expit(-2 * s)))


def mu(a: float, b: float, c: float, r: float, rc: float | None = None) -> float:
    """Generalized modulus at r in (0, 1); ``rc`` optionally gives r' exactly."""
    _check_params(a, b, c)
    if rc is None:
        if not 0.0 < r < 1.0:
            raise DomainError(f"r must lie in (0, 1), got {r!r}")
        z, y = r * r, (1.0 - r) * (1.0 + r)
    else:
        z, y = r * r, rc * rc
        if z == 0.0 or y == 0.0:
            raise DomainError("r must lie strictly inside (0, 1)")
    return _mu_zy(a, b, c, z, y)


def mu_range(a: float, b: float, c: float) -> tuple[float, float]:
    """(mu(1-), mu(0+)); infinite ends when a + b >= c."""
    _check_params(a, b, c)
    half = 0.5 * specfun.beta(a, b)
    if a + b >= c:
        return 0.0, math.inf
    d = specfun.gamma(c) * specfun.gamma(c - a - b) / (specfun.gamma(c - a) * specfun.gamma(c - b))
    return half / d, half * d


def mu_inv(a: float, b: float, c: float, y: float) -> InverseSolveReport:
    """Solve mu_{a,b,c}(r) = y by a bracketing root finder."""
    _check_params(a, b, c)
    if not (y > 0 and math.isfinite(y)):
        raise DomainError(f"mu_inv needs a finite y > 0, got {y!r}")
    lo_val, hi_val = mu_range(a, b, c)
    if not lo_val <= y <= hi_val:
        raise OutOfRange(f"y = {y!r} outside the range [{lo_val!r}, {hi_val!r}] of mu")
    target = math.log(y)

    def g(s):
        return math.log(_mu_s(a, b, c, s)) - target

    lo, hi = -1.0, 1.0
    glo, ghi = g(lo), g(hi)
    while glo < 0:
        lo *= 2
        if lo < -S_LIMIT:
            lo = -S_LIMIT
            glo = g(lo)
            if glo < 0:
                raise OutOfRange(f"y = {y!r} needs r below the double-precision range")
            break
        glo = g(lo)
    while ghi > 0:
        hi *= 2
        if hi > S_LIMIT:
            hi = S_LIMIT
            ghi = g(hi)
            if ghi > 0:
                raise OutOfRange(f"y = {y!r} needs r' below the double-precision range")
            break
        ghi = g(hi)
    if glo == 0.0:
        s, iters = lo, 0
    elif ghi == 0.0:
        s, iters = hi, 0
    else:
        try:
            s, info = brentq(g, lo, hi, xtol=1e-15, rtol=1e-15, maxiter=MAX_ITER,
                             full_output=True)
        except RuntimeError as exc:
            raise NoConvergence(str(exc)) from None
        iters = info.iterations
    z, yc = float(expit(2 * s)), float(expit(-2 * s))
    r, rc = math.sqrt(z), math.sqrt(yc)
    val = _mu_zy(a, b, c, z, yc)
    resid = abs(val - y)
    if resid > SOLVE_RTOL * max(1.0, y):
        raise NoConvergence(f"mu_inv residual {resid:.3e} above tolerance")
    blo, bhi = math.sqrt(float(expit(2 * lo))), math.sqrt(float(expit(2 * hi)))
    return InverseSolveReport(r, rc, iters, resid, (blo, bhi), s)


def phi_K(a: float, b: float, c: float, K: float, r: float, rc: float | None = None) -> float:
    """s = mu^{-1}(mu(r) / K)."""
    return phi_K_full(a, b, c, K, r, rc).r


def phi_K_full(a: float, b: float, c: float, K: float, r: float,
               rc: float | None = None) -> InverseSolveReport:
    if not (K > 0 and math.isfinite(K)):
        raise DomainError(f"K must be a positive finite number, got {K!r}")
    m = mu(a, b, c, r, rc)
    if K == 1.0:
        rc = math.sqrt((1.0 - r) * (1.0 + r)) if rc is None else rc
        return InverseSolveReport(r, rc, 0, 0.0, (r, r), math.log(r / rc))
    return mu_inv(a, b, c, m / K)


# ---------------------------------------------------------------------------


def _mu_tilde_inverse(a, b, c, t):
    """Invert the unnormalized quotient F(r'^2)/F(r^2) directly in r."""
    def g(r):
        z, y = r * r, (1 - r) * (1 + r)
        return hyp2f1(a, b, c, y, z) / hyp2f1(a, b, c, z, y) - t
    return brentq(g, 1e-12, 1 - 1e-12, xtol=1e-15, rtol=1e-15, maxiter=MAX_ITER)


def identity_suite(a: float, b: float, c: float, samples: Iterable[float],
                   Ks: Sequence[float] = (1.5, 2.0, 5.0), tol: float = 1e-9) -> Report:
    """Check the reflection, inverse, modular-equation and transfer identities."""
    _check_params(a, b, c)
    samples = list(samples)
    half_b = 0.5 * specfun.beta(a, b)
    rep = Report(f"modulus identities, (a,b,c)=({a:g},{b:g},{c:g})")
    for r in samples:
        rc = math.sqrt((1 - r) * (1 + r))
        m, mc = mu(a, b, c, r, rc), mu(a, b, c, rc, r)
        rep.close(f"mu(r) mu(r') = (B/2)^2 at r={r:g}", m * mc, half_b ** 2, tol)
        # inverse pair: mu^{-1}(x)^2 + mu^{-1}(y)^2 = 1 when x y = (B/2)^2
        if a + b >= c:
            x1 = mu_inv(a, b, c, m)
            x2 = mu_inv(a, b, c, half_b ** 2 / m)
            rep.close(f"mu^-1(x)^2 + mu^-1(y)^2 = 1 at r={r:g}", x1.r ** 2 + x2.r ** 2, 1.0, tol)
            for K in Ks:
                s1 = phi_K(a, b, c, K, r, rc)
                s2 = phi_K(a, b, c, 1.0 / K, rc, r)
                rep.close(f"phi_K(r)^2 + phi_1/K(r')^2 = 1 at r={r:g}, K={K:g}",
                          s1 * s1 + s2 * s2, 1.0, tol)
                if a + b > c and K > 1:
                    upper = K ** (1.0 / (2 * (a + b - c))) * r
                    rep.add(f"r < phi_K(r) < K^(1/(2(a+b-c))) r at r={r:g}, K={K:g}",
                            r < s1 < upper, value=s1)
                t = hyp2f1(a, b, c, rc * rc, r * r) / hyp2f1(a, b, c, r * r, rc * rc) / K
                try:
                    st = _mu_tilde_inverse(a, b, c, t)
                except ValueError:
                    rep.add(f"unnormalized phi at r={r:g}, K={K:g}", False, note="bracket failed")
                else:
                    rep.close(f"unnormalized phi = phi at r={r:g}, K={K:g}", st, s1, tol)
        if c < a + b and c > a and c > b:
            e = c - a - b
            lhs = rc ** (2 * e) * m
            other = mu(c - a, c - b, c, r, rc)
            ratio = specfun.beta(a, b) / specfun.beta(c - a, c - b)
            rhs = ratio * r ** (2 * e) * other
            literal = r ** (2 * e) * other
            rep.close(f"transfer identity at r={r:g}", lhs, rhs, tol,
                      note=f"without the B(a,b)/B(c-a,c-b) factor the gap is {abs(lhs - literal):.3e}")
    grid = sorted(samples)
    if len(grid) > 1:
        monotone_checks(rep, "mu", grid, [mu(a, b, c, r) for r in grid], "decreasing")
        if a + b >= c:
            for K in Ks:
                monotone_checks(rep, f"phi_{K:g}", grid, [phi_K(a, b, c, K, r) for r in grid],
                                "increasing")
    return rep


def scaled_mu_check(a: float, b: float, c: float, grid: Sequence[float] | None = None,
                    tol: float = 1e-3) -> Report:
    """(r/r')^{2(a+b-c)} mu(r) decreases from B(c,a+b-c)/2 to B(a,b)^2/(2B(c,a+b-c))."""
    s = a + b - c
    if not s > 0:
        raise PreconditionError("requires a + b > c")
    if not c > max(a, b):
        # the rewrite through F(c-a, c-b; c; .) is monotone only for c > max(a, b)
        raise PreconditionError("requires c > max(a, b) in addition to a + b > c")
    grid = sorted(grid) if grid is not None else [0.02 * k for k in range(1, 50)]
    bcs = specfun.beta(c, s)
    bab = specfun.beta(a, b)
    rep = Report(f"(r/r')^(2(a+b-c)) mu(r), (a,b,c)=({a:g},{b:g},{c:g})")

    def h(r, rc=None):
        rc = math.sqrt((1 - r) * (1 + r)) if rc is None else rc
        return (r / rc) ** (2 * s) * mu(a, b, c, r, rc)

    monotone_checks(rep, "scaled mu", grid, [h(r) for r in grid], "decreasing")
    slow = f"correction decays like r^(2 min(s, 1)), s={s:g}" if s < 0.5 else ""
    rep.close("value at r=1e-4", h(1e-4), bcs / 2, tol, relative=True, note=slow)
    d = 1e-6
    rep.close("value at r=1-1e-6", h(1 - d, math.sqrt(d * (2 - d))), bab ** 2 / (2 * bcs), tol,
              relative=True, note=slow)
    return rep


def classical_mu(r: float) -> float:
    """(pi/2) K(r')/K(r) through the AGM, an oracle independent of the series."""
    from .classical import agm_quotient
    return 0.5 * math.pi * agm_quotient(r)
