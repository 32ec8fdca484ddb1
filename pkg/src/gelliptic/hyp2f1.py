"""Gaussian hypergeometric function F(a, b; c; x) for real parameters, 0 <= x <= 1.

Evaluation paths
----------------
``direct_series``
    Maclaurin series, used for x <= 0.75 and for terminating series.
``euler_transform``
    F(a,b;c;x) = (1-x)**(c-a-b) F(c-a,c-b;c;x), summed directly.
``connection``
    The 1 - x connection formula for non-integer c - a - b.  Both
    series run in powers of 1 - x, so x close to 1 costs only a few terms.
``log_connection``
    The logarithmic connection series for integer c - a - b (including the
    zero-balanced case c = a + b).
``closed_form_at_one``
    Gauss' value at x = 1 when c > a + b.

Every routine accepts the complement ``1 - x`` separately, so that arguments
such as ``1 - r**2`` with tiny ``r`` keep full relative accuracy.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterable

from . import specfun
from .errors import DivergesAtOne, DomainError, NoConvergence, PreconditionError
from .report import Report, monotone_checks

DEFAULT_TOL = 1e-14
DEFAULT_MAX_TERMS = 200_000
ZERO_BALANCE_TOL = 1e-12
SWITCH_X = 0.75
NEAR_INT_BAND = 0.05
_EPS = 2.220446049250313e-16


def max_terms() -> int:
    """Series term cap; the ``GELLIPTIC_MAX_TERMS`` variable overrides it."""
    env = os.environ.get("GELLIPTIC_MAX_TERMS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return DEFAULT_MAX_TERMS


@dataclass(frozen=True)
class HypParams:
    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise DomainError(f"{name} must be finite, got {v!r}")
        if specfun.is_pole(self.c):
            raise DomainError(f"c = {self.c!r} is a non-positive integer")

    @property
    def excess(self) -> float:
        """c - a - b."""
        return self.c - self.a - self.b

    @property
    def regime(self) -> str:
        s = self.excess
        if abs(s) <= ZERO_BALANCE_TOL:
            return "zero_balanced"
        return "c>a+b" if s > 0 else "c<a+b"

    @property
    def zero_balanced(self) -> bool:
        return self.regime == "zero_balanced"


@dataclass(frozen=True)
class HypResult:
    """Value plus provenance.

    ``error_estimate`` bounds the relative series truncation error and never
    exceeds the requested tolerance on success.  ``rounding_estimate`` is a
    separate relative bound on floating-point cancellation (large for the
    connection formula when c - a - b is close to an integer).
    """

    value: float
    method: str
    terms_used: int
    error_estimate: float
    rounding_estimate: float = 0.0

    def __float__(self) -> float:
        return self.value


def _terminating(a: float, b: float) -> bool:
    return (a <= 0 and a == round(a)) or (b <= 0 and b == round(b))


def _series(a, b, c, x, tol, cap):
    """Sum the Maclaurin series; returns (sum, terms, truncation, rounding)."""
    if x == 0.0:
        return 1.0, 1, 0.0, 0.0
    s = 1.0
    t = 1.0
    abs_sum = 1.0
    small = 0
    n = 0
    while True:
        t *= (a + n) * (b + n) / ((c + n) * (n + 1)) * x
        n += 1
        if t == 0.0:
            return s, n, 0.0, 4 * _EPS * abs_sum / max(abs(s), 1e-300)
        s += t
        abs_sum += abs(t)
        if abs(t) <= tol * abs(s):
            small += 1
        else:
            small = 0
        if small >= 3:
            rho = max(abs((a + n) * (b + n) / ((c + n) * (n + 1))) * x, x)
            if rho < 1.0:
                tail = abs(t) * rho / (1.0 - rho) / abs(s)
                if tail <= 0.25 * tol:
                    return s, n + 1, tail, 4 * _EPS * abs_sum / abs(s)
        if n >= cap:
            raise NoConvergence(
                f"F({a}, {b}; {c}; {x}) did not converge in {cap} terms")


def _connection(a, b, c, y, tol, cap):
    """1 - x connection formula, non-integer s = c - a - b; y = 1 - x."""
    s = c - a - b
    f1, n1, e1, r1 = _series(a, b, 1.0 - s, y, tol, cap)
    f2, n2, e2, r2 = _series(c - a, c - b, 1.0 + s, y, tol, cap)
    gc = specfun.gamma(c)
    a1 = gc * specfun.gamma(s) * specfun.rgamma(c - a) * specfun.rgamma(c - b)
    a2 = gc * specfun.gamma(-s) * specfun.rgamma(a) * specfun.rgamma(b)
    t1 = a1 * f1
    t2 = a2 * y ** s * f2 if a2 != 0.0 else 0.0
    val = t1 + t2
    den = max(abs(val), 1e-300)
    trunc = (abs(t1) * e1 + abs(t2) * e2) / den
    rnd = (abs(t1) * (r1 + 8 * _EPS) + abs(t2) * (r2 + 8 * _EPS)) / den
    return val, n1 + n2, trunc, rnd


def _log_connection(a, b, m, y, tol, cap):
    """Connection series for c = a + b + m with integer m >= 0; y = 1 - x."""
    gab = specfun.gamma(a + b + m)
    head = 0.0
    if m >= 1:
        coef = specfun.gamma(m) * gab * specfun.rgamma(a + m) * specfun.rgamma(b + m)
        t = 1.0
        acc = 1.0
        for n in range(m - 1):
            t *= (a + n) * (b + n) / ((n + 1) * (1 - m + n)) * y
            acc += t
        head = coef * acc
    pref = -((-1.0) ** m) * y ** m * gab * specfun.rgamma(a) * specfun.rgamma(b)
    logy = math.log(y)
    # psi(n+1), psi(n+m+1), psi(a+n+m), psi(b+n+m) advanced by recurrence
    p1 = -specfun.EULER_GAMMA
    p2 = specfun.digamma(m + 1.0)
    pa = specfun.digamma(a + m)
    pb = specfun.digamma(b + m)
    w = 1.0 / math.factorial(m)
    total = 0.0
    abs_total = 0.0
    n = 0
    small = 0
    while True:
        term = w * (logy - p1 - p2 + pa + pb)
        total += term
        abs_total += abs(term)
        if abs(term) <= tol * abs(total):
            small += 1
            tail = abs(term) * 2 * y / (1 - y) / abs(total)
            if small >= 3 and tail <= 0.25 * tol:
                break
        else:
            small = 0
        w *= (a + m + n) * (b + m + n) / ((n + 1) * (n + m + 1)) * y
        p1 += 1.0 / (n + 1)
        p2 += 1.0 / (n + m + 1)
        pa += 1.0 / (a + n + m)
        pb += 1.0 / (b + n + m)
        n += 1
        if n >= cap:
            raise NoConvergence(f"logarithmic connection series for m={m} did not converge")
    val = head + pref * total
    den = max(abs(val), 1e-300)
    trunc = abs(pref * total) * tail / den
    rnd = 16 * _EPS * (abs(head) + abs(pref) * abs_total) / den
    return val, n + m, trunc, rnd


def _near_one(a, b, c, y, tol, cap):
    """Evaluate for x = 1 - y close to 1 by the appropriate connection formula."""
    s = c - a - b
    m = round(s)
    if abs(s - m) <= ZERO_BALANCE_TOL:
        if m >= 0:
            return ("log_connection",) + _log_connection(a, b, int(m), y, tol, cap)
        v, n, e, r = _log_connection(c - a, c - b, int(-m), y, tol, cap)
        return "log_connection", y ** s * v, n, e, r + 2 * _EPS
    return ("connection",) + _connection(a, b, c, y, tol, cap)


def f21(p: HypParams, x: float, *, complement: float | None = None,
        tol: float = DEFAULT_TOL, max_terms_: int | None = None,
        method: str = "auto") -> HypResult:
    """Evaluate F(a, b; c; x) for 0 <= x <= 1.

    Parameters
    ----------
    p : HypParams
    x : float
        Argument in [0, 1].
    complement : float, optional
        1 - x supplied exactly; improves accuracy when x is near 1.
    method : str
        ``"auto"`` or one of the path names listed in the module docstring.
    """
    if not isinstance(p, HypParams):
        p = HypParams(*p)
    a, b, c = p.a, p.b, p.c
    y = (1.0 - x) if complement is None else float(complement)
    if not (0.0 <= x <= 1.0) or not (0.0 <= y <= 1.0):
        raise DomainError(f"x must lie in [0, 1], got {x!r}")
    cap = max_terms() if max_terms_ is None else max_terms_

    def at_one():
        return HypResult(f21_at_one(p), "closed_form_at_one", 0, 0.0, 8 * _EPS)

    if method == "auto":
        if x == 0.0:
            return HypResult(1.0, "direct_series", 0, 0.0)
        if _terminating(a, b):
            method = "direct_series"
        elif y == 0.0:
            return at_one()
        elif x <= SWITCH_X:
            method = "direct_series"
        else:
            s = p.excess
            near_int = abs(s - round(s))
            # the connection formula cancels badly when c-a-b is almost an integer
            if ZERO_BALANCE_TOL < near_int < NEAR_INT_BAND and x <= 0.999:
                method = "direct_series"
            else:
                method = "connection"

    if method == "direct_series":
        if y == 0.0 and not _terminating(a, b):
            return at_one()
        v, n, e, r = _series(a, b, c, x, tol, cap)
        return HypResult(v, "direct_series", n, e, r)
    if method == "euler_transform":
        if y == 0.0:
            raise DomainError("Euler transform is not defined at x = 1")
        v, n, e, r = _series(c - a, c - b, c, x, tol, cap)
        return HypResult(y ** p.excess * v, "euler_transform", n, e, r + 2 * _EPS)
    if method in ("connection", "log_connection"):
        if y == 0.0:
            return at_one()
        meth, v, n, e, r = _near_one(a, b, c, y, tol, cap)
        return HypResult(v, meth, n, e, r)
    if method == "closed_form_at_one":
        return at_one()
    raise DomainError(f"unknown method {method!r}")


def hyp2f1(a: float, b: float, c: float, x: float, complement: float | None = None) -> float:
    """Shorthand returning only the value of F(a, b; c; x)."""
    return f21(HypParams(a, b, c), x, complement=complement).value


def f21_at_one(p: HypParams) -> float:
    """Gauss' closed form Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)), c > a + b."""
    if not isinstance(p, HypParams):
        p = HypParams(*p)
    a, b, c = p.a, p.b, p.c
    if _terminating(a, b):
        v = _series(a, b, c, 1.0, DEFAULT_TOL, max_terms())[0]
        return v
    s = p.excess
    if s <= ZERO_BALANCE_TOL:
        raise DivergesAtOne(f"F({a}, {b}; {c}; 1) diverges: c - a - b = {s:g} <= 0")
    return (specfun.gamma(c) * specfun.gamma(s)
            * specfun.rgamma(c - a) * specfun.rgamma(c - b))


def zero_balanced_near_one(p: HypParams, x: float) -> float:
    """Leading-order value (R(a,b) - log(1-x)) / B(a,b) for c = a + b."""
    if not isinstance(p, HypParams):
        p = HypParams(*p)
    if not p.zero_balanced:
        raise DomainError("zero_balanced_near_one requires c = a + b")
    return ((specfun.ramanujan_R(p.a, p.b) - math.log1p(-x))
            / specfun.beta(p.a, p.b))


def dF_dx(p: HypParams, x: float, complement: float | None = None) -> float:
    """dF/dx = (ab/c) F(a+1, b+1; c+1; x)."""
    if not isinstance(p, HypParams):
        p = HypParams(*p)
    a, b, c = p.a, p.b, p.c
    return a * b / c * hyp2f1(a + 1, b + 1, c + 1, x, complement)


def d2F_dx2(p: HypParams, x: float, complement: float | None = None) -> float:
    """Second derivative, from differentiating the series twice."""
    if not isinstance(p, HypParams):
        p = HypParams(*p)
    a, b, c = p.a, p.b, p.c
    return (a * (a + 1) * b * (b + 1) / (c * (c + 1))
            * hyp2f1(a + 2, b + 2, c + 2, x, complement))


@dataclass(frozen=True)
class ContiguousUV:
    u: float
    v: float
    du: float
    dv: float


def contiguous_uv(p: HypParams, x: float, complement: float | None = None) -> ContiguousUV:
    """v = F(a,b;c;x), u = F(a-1,b;c;x) and their x-derivatives via contiguity."""
    if not isinstance(p, HypParams):
        p = HypParams(*p)
    y = 1.0 - x if complement is None else complement
    if not (0.0 < x < 1.0 and 0.0 < y < 1.0):
        raise DomainError("contiguous_uv needs 0 < x < 1")
    a, b, c = p.a, p.b, p.c
    v = hyp2f1(a, b, c, x, y)
    u = hyp2f1(a - 1, b, c, x, y)
    dv = ((c - a) * u + (a - c + b * x) * v) / (x * y)
    du = (a - 1) * (v - u) / x
    return ContiguousUV(u, v, du, dv)


def _grid(grid: Iterable[float]) -> list[float]:
    return sorted(float(g) for g in grid)


def check_exp_substitution(a: float, b: float, c: float, grid: Iterable[float]) -> Report:
    """Monotonicity of f(x) = F(a,b;c;1-e^-x), g = f e^{-(a+b-c)x} and h = f' e^{-(a+b-c)x}."""
    if not (0 < a < c and 0 < b < c):
        raise PreconditionError("requires 0 < a, b < c")
    xs = _grid(grid)
    rep = Report(f"F(a,b;c;1-e^-x) monotonicity, (a,b,c)=({a:g},{b:g},{c:g})")
    k = a + b - c

    def f(x):
        return hyp2f1(a, b, c, -math.expm1(-x), math.exp(-x))

    def h(x):
        return a * b / c * hyp2f1(c - a, c - b, c + 1, -math.expm1(-x), math.exp(-x))

    fs = [f(x) for x in xs]
    gs = [fv * math.exp(-k * x) for fv, x in zip(fs, xs)]
    hs = [h(x) for x in xs]
    monotone_checks(rep, "f", xs, fs, "increasing", strict=False)
    monotone_checks(rep, "g", xs, gs, "increasing", strict=False)
    monotone_checks(rep, "h", xs, hs, "increasing", strict=False)
    # h agrees with the derivative route f'(x) e^{-kx}
    worst = 0.0
    for x, hv in zip(xs, hs):
        fp = a * b / c * math.exp(-x) * hyp2f1(a + 1, b + 1, c + 1, -math.expm1(-x), math.exp(-x))
        worst = max(worst, abs(fp * math.exp(-k * x) - hv) / abs(hv))
    rep.add("h equals f'(x) exp(-(a+b-c)x)", worst <= 1e-10, error=worst, tol=1e-10)
    rep.close("f(0) = 1", f(0.0), 1.0, 1e-15)
    rep.close("h(0) = ab/c", h(0.0), a * b / c, 1e-14)
    big = 40.0
    if k < 0:
        lim = specfun.beta(c, c - a - b) / specfun.beta(c - a, c - b)
        rep.close("f(inf) = B(c,c-a-b)/B(c-a,c-b)", f(big), lim, 1e-6, relative=True)
    if a + b + 1 > c:
        lim = specfun.gamma(c) * specfun.gamma(a + b + 1 - c) / (specfun.gamma(a) * specfun.gamma(b))
        rep.close("h(inf) = G(c)G(a+b+1-c)/(G(a)G(b))", h(big), lim, 1e-6, relative=True)
    return rep


def check_power_substitution(a: float, b: float, c: float, d: float, grid: Iterable[float]) -> Report:
    """Monotonicity of g(x) = (1+x)^{(c+d-a-b)/d} f'(x), f(x) = F(a,b;c;1-(1+x)^{-1/d})."""
    if not (a > 0 and b > 0 and c > 0 and d > 0 and a + b > c > max(a, b)):
        raise PreconditionError("requires a,b,c,d > 0 and a+b > c > max(a,b)")
    xs = _grid(grid)
    rep = Report(f"(1+x)^p f'(x) monotonicity, (a,b,c,d)=({a:g},{b:g},{c:g},{d:g})")

    def g(x):
        w = (1.0 + x) ** (-1.0 / d)
        return a * b / (c * d) * hyp2f1(c - a, c - b, c + 1, 1.0 - w, w)

    gs = [g(x) for x in xs]
    monotone_checks(rep, "g", xs, gs, "increasing", strict=False)
    worst = 0.0
    for x, gv in zip(xs, gs):
        w = (1.0 + x) ** (-1.0 / d)
        fp = a * b / (c * d) * (1 + x) ** (-1 - 1 / d) * hyp2f1(a + 1, b + 1, c + 1, 1 - w, w)
        worst = max(worst, abs((1 + x) ** ((c + d - a - b) / d) * fp - gv) / abs(gv))
    rep.add("g equals (1+x)^p f'(x)", worst <= 1e-10, error=worst, tol=1e-10)
    rep.close("g(0) = ab/(cd)", g(0.0), a * b / (c * d), 1e-14)
    lim = ((a + b - c) * specfun.gamma(c) * specfun.gamma(a + b - c)
           / (d * specfun.gamma(a) * specfun.gamma(b)))
    rep.close("g(inf) limit at x=1e6", g(1e6), lim, 1e-3, relative=True)
    return rep
