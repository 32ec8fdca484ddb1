"""Generalized complete elliptic integrals K_{a,b,c}, E_{a,b,c} and their complements.

    K_{a,b,c}(r) = B(a,b)/2 * F(a, b; c; r**2)
    E_{a,b,c}(r) = B(a,b)/2 * F(a-1, b; c; r**2)

The two-parameter family K_{a,c} = K_{a,c-a,c} is the zero-balanced case.
Besides evaluation the module provides the r-derivative formulas, residuals
of the second-order differential equations satisfied by K, K', E, E', the
Schwarzian checks for the modulus and for E'/E, and a table-driven verifier
for a catalogue of monotonicity properties (``PROPERTY_IDS``).

Every evaluator takes an optional ``rc`` (the complementary modulus r') so
that points very close to r = 1 can be specified without rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from . import specfun
from .errors import DomainError, InfinityAtOne, PreconditionError
from .hyp2f1 import hyp2f1
from .report import Report, monotone_checks

BALANCE_TOL = 1e-12


@dataclass(frozen=True)
class EllipticParams:
    a: float
    b: float
    c: float

    @classmethod
    def two(cls, a: float, c: float) -> "EllipticParams":
        """The two-parameter family b = c - a."""
        return cls(a, c - a, c)

    @property
    def kdef_valid(self) -> bool:
        a, b, c = self.a, self.b, self.c
        return 0 < a < min(c, 1.0) and 0 < b < c and c <= a + b + BALANCE_TOL

    @property
    def two_param(self) -> bool:
        return abs(self.b - (self.c - self.a)) <= BALANCE_TOL

    @property
    def s(self) -> float:
        """Excess a + b - c (non-negative under kdef_valid)."""
        return self.a + self.b - self.c

    @property
    def zero_balanced(self) -> bool:
        return abs(self.s) <= BALANCE_TOL

    @property
    def B(self) -> float:
        return specfun.beta(self.a, self.b)

    def require_kdef(self) -> None:
        if not self.kdef_valid:
            raise DomainError(
                f"(a,b,c)=({self.a},{self.b},{self.c}) violates "
                "0<a<min(c,1), 0<b<c<=a+b")


def _coerce(p) -> EllipticParams:
    return p if isinstance(p, EllipticParams) else EllipticParams(*p)


def _zy(r: float, rc: float | None) -> tuple[float, float]:
    """Return (r**2, r'**2) with the complement computed stably."""
    if rc is None:
        if not 0.0 <= r <= 1.0:
            raise DomainError(f"r must lie in [0, 1], got {r!r}")
        return r * r, (1.0 - r) * (1.0 + r)
    if not (0.0 <= r <= 1.0 and 0.0 <= rc <= 1.0):
        raise DomainError("r and r' must lie in [0, 1]")
    return r * r, rc * rc


def comp(r: float) -> float:
    """r' = sqrt(1 - r**2) without cancellation near r = 1."""
    return math.sqrt((1.0 - r) * (1.0 + r))


def _K(a, b, c, z, y):
    return 0.5 * specfun.beta(a, b) * hyp2f1(a, b, c, z, y)


def _E(a, b, c, z, y):
    return 0.5 * specfun.beta(a, b) * hyp2f1(a - 1.0, b, c, z, y)


def K_abc(p: EllipticParams, r: float, rc: float | None = None, *, check: bool = True) -> float:
    """K_{a,b,c}(r).  Raises InfinityAtOne at r = 1 when c <= a + b."""
    p = _coerce(p)
    if check:
        p.require_kdef()
    z, y = _zy(r, rc)
    if y == 0.0 and p.c <= p.a + p.b + BALANCE_TOL:
        raise InfinityAtOne("K_{a,b,c}(1) is infinite for c <= a+b")
    return _K(p.a, p.b, p.c, z, y)


def E_abc(p: EllipticParams, r: float, rc: float | None = None, *, check: bool = True) -> float:
    p = _coerce(p)
    if check:
        p.require_kdef()
    z, y = _zy(r, rc)
    if y == 0.0:
        return E_at_one(p)
    return _E(p.a, p.b, p.c, z, y)


def E_at_one(p: EllipticParams) -> float:
    """E(1) = B(a,b) B(c, c+1-a-b) / (2 B(c+1-a, c-b))."""
    p = _coerce(p)
    a, b, c = p.a, p.b, p.c
    return 0.5 * specfun.beta(a, b) * specfun.beta(c, c + 1 - a - b) / specfun.beta(c + 1 - a, c - b)


def K_comp(p: EllipticParams, r: float, rc: float | None = None, **kw) -> float:
    """K'(r) = K(r')."""
    rc = comp(r) if rc is None else rc
    return K_abc(p, rc, r, **kw)


def E_comp(p: EllipticParams, r: float, rc: float | None = None, **kw) -> float:
    rc = comp(r) if rc is None else rc
    return E_abc(p, rc, r, **kw)


def _interior(r: float, rc: float | None) -> tuple[float, float]:
    z, y = _zy(r, rc)
    if z == 0.0 or y == 0.0:
        raise DomainError("derivative formulas need 0 < r < 1")
    return z, y


def dK_dr(p: EllipticParams, r: float, rc: float | None = None) -> float:
    """(2/(r r'^2)) ((c-a) E + (b r^2 + a - c) K)."""
    p = _coerce(p)
    p.require_kdef()
    z, y = _interior(r, rc)
    a, b, c = p.a, p.b, p.c
    K, E = _K(a, b, c, z, y), _E(a, b, c, z, y)
    return 2.0 / (r * y) * ((c - a) * E + (b * z + a - c) * K)


def dE_dr(p: EllipticParams, r: float, rc: float | None = None) -> float:
    """(2(a-1)/r) (K - E)."""
    p = _coerce(p)
    p.require_kdef()
    z, y = _interior(r, rc)
    a, b, c = p.a, p.b, p.c
    return 2.0 * (a - 1.0) / r * (_K(a, b, c, z, y) - _E(a, b, c, z, y))


def d_KminusE_dr(p: EllipticParams, r: float, rc: float | None = None) -> float:
    p = _coerce(p)
    p.require_kdef()
    z, y = _interior(r, rc)
    a, b, c = p.a, p.b, p.c
    K, E = _K(a, b, c, z, y), _E(a, b, c, z, y)
    return 2.0 / (r * y) * (((c - a) - (1 - a) * y) * E + ((a + b) * z - c + y) * K)


def d_EminusrpK_dr(p: EllipticParams, r: float, rc: float | None = None) -> float:
    """d/dr (E - r'^2 K) = (2/r)((1-c) E + (c - 1 - (b-1) r^2) K)."""
    p = _coerce(p)
    p.require_kdef()
    z, y = _interior(r, rc)
    a, b, c = p.a, p.b, p.c
    K, E = _K(a, b, c, z, y), _E(a, b, c, z, y)
    return 2.0 / r * ((1 - c) * E + (c - 1 - (b - 1) * z) * K)


# ---------------------------------------------------------------------------
# differential equations

ODE_KINDS = ("K", "Kcomp", "E", "Ecomp")


def _ode_coeffs(kind: str, a: float, c: float, r: float, z: float, y: float, form: str):
    """Coefficients (P, Q) of  r r'^2 w'' + P w' + Q w = 0."""
    if kind == "K":
        return 2 * c - 1 - (2 * c + 1) * z, -4 * a * (c - a) * r
    if kind == "Kcomp":
        sign = -1.0 if form == "printed" else 1.0
        return sign * (1 - (2 * c + 1) * z), -4 * a * (c - a) * r
    if kind == "E":
        sign = -1.0 if form == "printed" else 1.0
        return sign * (2 * c - 1) * y, 4 * (1 - a) * (c - a) * r
    if kind == "Ecomp":
        return -(1 + (2 * c - 1) * z), 4 * (1 - a) * (c - a) * r
    raise DomainError(f"unknown ODE kind {kind!r}")


def _w_derivs(alpha, beta, c, r, z, y, complementary):
    """w, w', w'' for w(r) = F(alpha, beta; c; r^2) or F(...; r'^2)."""
    if complementary:
        x, xc, sgn = y, z, -1.0
    else:
        x, xc, sgn = z, y, 1.0
    f0 = hyp2f1(alpha, beta, c, x, xc)
    f1 = alpha * beta / c * hyp2f1(alpha + 1, beta + 1, c + 1, x, xc)
    f2 = (alpha * (alpha + 1) * beta * (beta + 1) / (c * (c + 1))
          * hyp2f1(alpha + 2, beta + 2, c + 2, x, xc))
    # d/dr x = 2 r sgn, d2/dr2 x = 2 sgn
    w1 = 2.0 * r * sgn * f1
    w2 = 2.0 * sgn * f1 + 4.0 * z * f2
    return f0, w1, w2


def ode_residual(kind: str, a: float, c: float, r: float, *, form: str = "corrected") -> float:
    """Normalized residual of the second-order equation for K_{a,c}, K', E_{a,c}, E'.

    The scale is the largest of the three terms.  ``form="printed"`` uses the
    literal signs as commonly printed for the K' and E equations; the default
    uses signs re-derived from the hypergeometric equation (see README).
    """
    if not 0 < a < c:
        raise DomainError("two-parameter family needs 0 < a < c")
    if not 0.0 < r < 1.0:
        raise DomainError("r must lie in (0, 1)")
    if form not in ("corrected", "printed"):
        raise DomainError(f"unknown form {form!r}")
    z, y = r * r, (1.0 - r) * (1.0 + r)
    b = c - a
    alpha = a if kind in ("K", "Kcomp") else a - 1.0
    w, w1, w2 = _w_derivs(alpha, b, c, r, z, y, kind.endswith("comp"))
    half_b = 0.5 * specfun.beta(a, b)
    w, w1, w2 = half_b * w, half_b * w1, half_b * w2
    P, Q = _ode_coeffs(kind, a, c, r, z, y, form)
    terms = (r * y * w2, P * w1, Q * w)
    scale = max(abs(t) for t in terms)
    return abs(sum(terms)) / scale


# ---------------------------------------------------------------------------
# Schwarzian derivative checks

def _fd_derivs(fun: Callable[[float], float], r: float, h: float):
    m2, m1, p1, p2 = fun(r - 2 * h), fun(r - h), fun(r + h), fun(r + 2 * h)
    f0 = fun(r)
    d1 = (m2 - 8 * m1 + 8 * p1 - p2) / (12 * h)
    d2 = (-m2 + 16 * m1 - 30 * f0 + 16 * p1 - p2) / (12 * h * h)
    d3 = (-m2 + 2 * m1 - 2 * p1 + p2) / (2 * h ** 3)
    return d1, d2, d3


def schwarzian(fun: Callable[[float], float], r: float, h: float = 1e-3) -> float:
    """S_w = (w''/w')' - (w''/w')^2 / 2 by five-point differences."""
    d1, d2, d3 = _fd_derivs(fun, r, h)
    return d3 / d1 - 1.5 * (d2 / d1) ** 2


def schwarzian_target(c: float, q_num: float, r: float) -> float:
    """2q - p' - p^2/2 for p = (2c-1-(4c-1)r^2)/(r r'^2), q = q_num / r'^2."""
    z = r * r
    y = 1.0 - z
    N = 2 * c - 1 - (4 * c - 1) * z
    D = r * y
    p = N / D
    dp = (-2 * (4 * c - 1) * r * D - N * (1 - 3 * z)) / (D * D)
    q = q_num / y
    return 2 * q - dp - 0.5 * p * p


def schwarzian_check(which: str, a: float, b: float, c: float,
                     rs: Iterable[float] = (0.3, 0.5, 0.7), *, h: float = 1e-3,
                     tol: float = 1e-3) -> Report:
    """Compare the Schwarzian of mu (2c = a+b+1) or of E'/E (2c = a+b) with 2q - p' - p^2/2."""
    if not (0 < a < 1 and 0 < b < 1):
        raise PreconditionError("requires 0 < a, b < 1")
    if which == "mu":
        if abs(2 * c - (a + b + 1)) > 1e-12:
            raise PreconditionError("modulus check requires 2c = a + b + 1")
        alpha, q_num = a, -4 * a * b
    elif which == "nu":
        if abs(2 * c - (a + b)) > 1e-12:
            raise PreconditionError("E'/E check requires 2c = a + b")
        alpha, q_num = a - 1.0, -4 * (a - 1) * b
    else:
        raise DomainError(f"unknown Schwarzian check {which!r}")

    def w(r):
        z, y = r * r, (1.0 - r) * (1.0 + r)
        return hyp2f1(alpha, b, c, y, z) / hyp2f1(alpha, b, c, z, y)

    label = "mu" if which == "mu" else "E'/E"
    rep = Report(f"Schwarzian of {label}, (a,b,c)=({a:g},{b:g},{c:g})")
    for r in rs:
        S = schwarzian(w, r, h)
        T = schwarzian_target(c, q_num, r)
        rep.close(f"S(r) = 2q - p' - p^2/2 at r={r:g}", S, T, tol, relative=True)
    return rep


# ---------------------------------------------------------------------------
# truncated power series in z = r^2, used for Maclaurin-coefficient claims

class _PS:
    __slots__ = ("c",)
    N = 40

    def __init__(self, coeffs):
        self.c = np.asarray(coeffs, dtype=float)

    @classmethod
    def const(cls, v):
        out = np.zeros(cls.N)
        out[0] = v
        return cls(out)

    def _other(self, o):
        return o.c if isinstance(o, _PS) else _PS.const(o).c

    def __add__(self, o):
        return _PS(self.c + self._other(o))

    __radd__ = __add__

    def __sub__(self, o):
        return _PS(self.c - self._other(o))

    def __rsub__(self, o):
        return _PS(self._other(o) - self.c)

    def __neg__(self):
        return _PS(-self.c)

    def __mul__(self, o):
        if not isinstance(o, _PS):
            return _PS(self.c * o)
        return _PS(np.convolve(self.c, o.c)[: self.N])

    __rmul__ = __mul__

    def __truediv__(self, o):
        if not isinstance(o, _PS):
            return _PS(self.c / o)
        d = o.c
        if d[0] == 0.0:
            raise ZeroDivisionError("series division by a series with zero constant term")
        q = np.zeros(self.N)
        for n in range(self.N):
            q[n] = (self.c[n] - np.dot(q[:n], d[n:0:-1])) / d[0]
        return _PS(q)

    def __rtruediv__(self, o):
        return _PS.const(o) / self

    def deriv(self):
        out = np.zeros(self.N)
        out[:-1] = self.c[1:] * np.arange(1, self.N)
        return _PS(out)


def _hyp_coeffs(a, b, c, n):
    out = np.empty(n)
    t = 1.0
    for k in range(n):
        out[k] = t
        t *= (a + k) * (b + k) / ((c + k) * (k + 1))
    return out


class _SeriesEnv:
    """Maclaurin coefficients in z = r^2 of the building blocks."""

    def __init__(self, p: EllipticParams):
        N = _PS.N
        half_b = 0.5 * p.B
        self.K = _PS(half_b * _hyp_coeffs(p.a, p.b, p.c, N))
        self.E = _PS(half_b * _hyp_coeffs(p.a - 1, p.b, p.c, N))
        zc = np.zeros(N)
        zc[1] = 1.0
        self.z = _PS(zc)
        self.y = 1.0 - self.z
        lc = np.zeros(N)
        lc[1:] = 0.5 / np.arange(1, N)
        self.L = _PS(lc)
        self.r = None
        self.arth = None

    @staticmethod
    def powy(alpha):
        out = np.empty(_PS.N)
        t = 1.0
        for k in range(_PS.N):
            out[k] = t
            t *= (k - alpha) / (k + 1)
        return _PS(out)

    @staticmethod
    def divz(s: _PS):
        if abs(s.c[0]) > 1e-13 * max(1.0, np.max(np.abs(s.c))):
            raise ZeroDivisionError("divz on a series with nonzero constant term")
        out = np.zeros(_PS.N)
        out[:-1] = s.c[1:]
        out[-1] = np.nan
        return _PS(out)


class _FloatEnv:
    """Point values of the building blocks at a given (r, r')."""

    def __init__(self, p: EllipticParams, r: float, z: float, y: float):
        self.r, self.z, self.y = r, z, y
        self.K = _K(p.a, p.b, p.c, z, y)
        self.E = _E(p.a, p.b, p.c, z, y)
        self.L = -0.5 * math.log1p(-z) if z < 0.5 else -0.5 * math.log(y)
        if r < 0.5:
            self.arth = math.atanh(r)
        else:
            self.arth = math.log1p(r) + self.L
        self._y = y

    def powy(self, alpha):
        if self.z < 0.5:
            return math.exp(alpha * math.log1p(-self.z))
        return self._y ** alpha

    def divz(self, v):
        return v / self.z

    @classmethod
    def at(cls, p, r, rc=None):
        z, y = _zy(r, rc)
        return cls(p, r, z, y)

    @classmethod
    def near_one(cls, p, delta):
        """Point with 1 - r = delta, delta possibly far below machine epsilon."""
        y = delta * (2.0 - delta)
        z = 1.0 - y
        r = 1.0 - delta
        return cls(p, r, z, y)


# ---------------------------------------------------------------------------
# the property catalogue


@dataclass(frozen=True)
class Property:
    pid: str
    title: str
    fn: Callable
    direction: str
    left: Callable                       # expected f(0+)
    right: Callable                      # expected limit of the right-end quantity
    right_expr: Callable | None = None   # transform evaluated at the right end
    right_label: str = "f(1-)"
    coeff: str | None = None             # "+", "-c" (negative except constant)
    coeff_fn: Callable | None = None     # series to test when different from fn
    extra_pre: Callable | None = None
    family: str = "lemma"
    abs_right: bool = False


def _consts(p: EllipticParams) -> dict:
    a, b, c = p.a, p.b, p.c
    k = {"a": a, "b": b, "c": c, "s": p.s, "B": p.B, "E1": E_at_one(p)}
    if p.s > BALANCE_TOL:
        k["Bcs"] = 0.5 * specfun.beta(c, p.s)
    if p.zero_balanced and a > 0 and b > 0:
        k["R"] = specfun.ramanujan_R(a, b)
    return k


def _pre_lemma(p: EllipticParams) -> str | None:
    a, b, c = p.a, p.b, p.c
    if not (0 < a < min(c, 1) and 0 < b < min(c, 1) and c <= a + b + BALANCE_TOL):
        return "requires 0 < a, b < min(c, 1) and c <= a + b"
    return None


def _pre_zb_family(p: EllipticParams) -> str | None:
    a, b, c = p.a, p.b, p.c
    if not p.two_param:
        return "requires b = c - a"
    if not (0 < a < c <= 1):
        return "requires 0 < a < c <= 1"
    return None


def _pre_g1(p):
    a, b, c = p.a, p.b, p.c
    if not p.kdef_valid:
        return "requires 0 < a < min(c,1), 0 < b < c <= a+b"
    if not (2 * a * b < c <= a + b + BALANCE_TOL and a + b < c + 0.5):
        return "requires 2ab < c <= a+b < c + 1/2"
    return None


def _pre_g2(p):
    a, b, c = p.a, p.b, p.c
    if not p.kdef_valid or not (0 < a < c and 0 < b < c and c < a + b - BALANCE_TOL):
        return "requires 0 < a < min(c,1), 0 < b < c < a+b"
    return None


def _pre_g3(p):
    a, b, c = p.a, p.b, p.c
    if not (0 < a < 1 and 0 < b < 1 and p.zero_balanced):
        return "requires 0 < a, b < 1 and c = a + b"
    if not (a * (2 * b + 1) < b + 1 < 1 / a):
        return "requires a(2b+1) < b+1 < 1/a"
    return None


def _pre_arth(p):
    a, b, c = p.a, p.b, p.c
    if not p.two_param:
        return "requires b = c - a"
    if not (0 < a < min(c, 1) and c <= a + 0.5):
        return "requires 0 < a < min(c,1) and c <= a + 1/2"
    return None


def _pre_positive_s(p):
    return None if p.s > BALANCE_TOL else "requires a + b > c"


def _zb_or_s(zb_fn, s_fn):
    """Pick the right-end transform by regime."""
    def pick(e, k):
        return zb_fn(e, k) if "R" in k else s_fn(e, k)
    return pick


def _K_tail(e, k):
    # K - log(1/r') -> R/2 (zero-balanced) or K r'^{2s} -> B(c,s)/2
    return e.K - e.L if "R" in k else e.K * e.powy(k["s"])


def _K_tail_limit(k):
    return k["R"] / 2 if "R" in k else k["Bcs"]


def _K_tail_label(k):
    return "K - log(1/r')" if "R" in k else "K r'^(2(a+b-c))"


_CATALOGUE: list[Property] = [
    Property("f1", "f1 = (K - E)/(r^2 K)",
             lambda e, k: e.divz((e.K - e.E) / e.K), "increasing",
             lambda k: k["b"] / k["c"], lambda k: k["E1"],
             lambda e, k: e.E - e.y * e.K, "(1 - f1) r^2 K"),
    Property("f2", "f2 = (E - r'^2 K)/r^2",
             lambda e, k: e.divz(e.E - e.y * e.K), "increasing",
             lambda k: k["B"] * (k["c"] - k["b"]) / (2 * k["c"]), lambda k: k["E1"],
             coeff="+"),
    Property("f3", "f3 = r'^(-2(c+1-a-b)) E",
             lambda e, k: e.E * e.powy(k["s"] - 1), "increasing",
             lambda k: k["B"] / 2, lambda k: k["E1"],
             lambda e, k: e.E, "f3 r'^(2(c+1-a-b))", coeff="+"),
    Property("f4", "f4 = r'^(2(a+b-c)) K",
             lambda e, k: e.K * e.powy(k["s"]), "increasing",
             lambda k: k["B"] / 2, _K_tail_limit, _K_tail, "K r'^(2s) or K - log(1/r')",
             coeff="+"),
    Property("f5", "f5 = r'^(-2) E",
             lambda e, k: e.E * e.powy(-1.0), "increasing",
             lambda k: k["B"] / 2, lambda k: k["E1"],
             lambda e, k: e.E, "f5 r'^2", coeff="+"),
    Property("f6", "f6 = r'^2 K",
             lambda e, k: e.y * e.K, "decreasing",
             lambda k: k["B"] / 2, _K_tail_limit, _K_tail, "f6 / r'^2 rescaled",
             coeff="-c"),
    Property("f7", "f7 = K",
             lambda e, k: e.K, "increasing",
             lambda k: k["B"] / 2, _K_tail_limit, _K_tail, "K rescaled",
             coeff="+"),
    Property("f8", "f8 = (E - r'^2 K)/(r^2 K)",
             lambda e, k: e.divz(e.E - e.y * e.K) / e.K, "decreasing",
             lambda k: 1 - k["b"] / k["c"], lambda k: k["E1"],
             lambda e, k: e.E - e.y * e.K, "f8 r^2 K"),
    Property("f9", "f9 = (K - E)/(E - r'^2 K)",
             lambda e, k: e.divz(e.K - e.E) / e.divz(e.E - e.y * e.K), "increasing",
             lambda k: k["b"] / (k["c"] - k["b"]),
             lambda k: -k["E1"] if "R" in k else 1.0,
             lambda e, k: (k["E1"] * (e.K - e.E) / (e.E - e.y * e.K) - e.K if "R" in k
                           else k["E1"] * (e.K - e.E) / ((e.E - e.y * e.K) * e.K)),
             "E(1) f9 - K  or  E(1) f9 / K"),
    Property("f10", "f10 = (K - B/2)/log(1/r')",
             lambda e, k: e.divz(e.K - k["B"] / 2) / e.divz(e.L), "increasing",
             lambda k: k["a"] * k["b"] * k["B"] / k["c"],
             lambda k: (k["R"] - k["B"]) / 2 if "R" in k else k["Bcs"],
             lambda e, k: (e.K - k["B"] / 2 - e.L if "R" in k
                           else (e.K - k["B"] / 2) * e.powy(k["s"])),
             "(f10 - 1) log(1/r')  or  f10 log(1/r') r'^(2s)"),
    Property("f11", "f11 = (B/2 - r'^2 K)/r^2",
             lambda e, k: e.divz(k["B"] / 2 - e.y * e.K), "increasing",
             lambda k: k["B"] * (k["c"] - k["a"] * k["b"]) / (2 * k["c"]),
             lambda k: k["B"] / 2, coeff="+"),
    Property("f12", "f12 = (K - B/2)/(r'^(2(c-a-b)) - 1)",
             lambda e, k: e.divz(e.K - k["B"] / 2) / e.divz(e.powy(-k["s"]) - 1.0), "increasing",
             lambda k: k["a"] * k["b"] * k["B"] / (2 * k["c"] * k["s"]),
             lambda k: k["Bcs"], extra_pre=_pre_positive_s),
    Property("f13", "f13 = ((1-a-(b-c)r^2) E - (1-a) r'^2 K)/r^2",
             lambda e, k: e.divz((1 - k["a"] - (k["b"] - k["c"]) * e.z) * e.E
                                 - (1 - k["a"]) * e.y * e.K), "decreasing",
             lambda k: (k["c"] + 1 - k["a"]) * (k["c"] - k["b"]) * k["B"] / (2 * k["c"]),
             lambda k: (k["c"] + 1 - k["a"] - k["b"]) * k["E1"], coeff="-c"),
    Property("f14", "f14 = (c-a) E - (b-a) r'^2 K",
             lambda e, k: (k["c"] - k["a"]) * e.E - (k["b"] - k["a"]) * e.y * e.K, "decreasing",
             lambda k: (k["c"] - k["b"]) * k["B"] / 2,
             lambda k: (k["c"] - k["a"]) * k["E1"], coeff="-c"),
    Property("zb1", "K_{a,c} + log r'",
             lambda e, k: e.K - e.L, "decreasing",
             lambda k: k["B"] / 2, lambda k: k["R"] / 2, coeff="-c", family="zb"),
    Property("zb2", "K_{a,c} + log(r')/r^2",
             lambda e, k: e.K - e.divz(e.L), "increasing",
             lambda k: (k["B"] - 1) / 2, lambda k: k["R"] / 2, coeff="+", family="zb"),
    Property("zb3", "r^2 K_{a,c} / log(1/r')",
             lambda e, k: e.K / e.divz(e.L), "decreasing",
             lambda k: k["B"], lambda k: k["R"] / 2,
             lambda e, k: e.z * e.K - e.L, "(h - 1) log(1/r')", family="zb"),
    Property("zb4", "K_{a,c} / log(e^(R/2)/r')",
             lambda e, k: e.K / (k["R"] / 2 + e.L), "decreasing",
             lambda k: k["B"] / k["R"], lambda k: 0.0,
             lambda e, k: e.K - e.L - k["R"] / 2, "(k - 1) log(e^(R/2)/r')",
             family="zb", abs_right=True),
    Property("g1", "r' K",
             lambda e, k: e.powy(0.5) * e.K, "decreasing",
             lambda k: k["B"] / 2, _K_tail_limit, _K_tail, "f r'^(2s-1) or f/r' - log(1/r')",
             family="g1"),
    Property("g2", "r'^(2(a+b-c)) (K - E)/r^2",
             lambda e, k: e.powy(k["s"]) * e.divz(e.K - e.E), "increasing",
             lambda k: k["b"] * k["B"] / (2 * k["c"]), lambda k: k["Bcs"],
             coeff="+", family="g2"),
    Property("g3", "(K - E)/log(1/r')",
             lambda e, k: e.divz(e.K - e.E) / e.divz(e.L), "decreasing",
             lambda k: k["b"] * k["B"] / k["c"], lambda k: k["R"] / 2 - k["E1"],
             lambda e, k: e.K - e.E - e.L, "(h - 1) log(1/r')", family="g3"),
    Property("arth", "r K_{a,c} / arth r",
             lambda e, k: e.r * e.K / e.arth, "decreasing",
             lambda k: k["B"] / 2, lambda k: k["R"] / 2 - math.log(2.0),
             lambda e, k: e.r * e.K - e.arth, "(f - 1) arth r", family="arth"),
]

PROPERTY_IDS: tuple[str, ...] = tuple(pr.pid for pr in _CATALOGUE)
_BY_ID = {pr.pid: pr for pr in _CATALOGUE}

_FAMILY_PRE = {
    "lemma": _pre_lemma,
    "zb": _pre_zb_family,
    "g1": _pre_g1,
    "g2": _pre_g2,
    "g3": _pre_g3,
    "arth": _pre_arth,
}

# right-end evaluation points 1 - r; the first is the fixed test point
_RIGHT_DELTAS = (1e-6, 1e-12, 1e-24, 1e-48, 1e-96, 1e-192)


def property_precondition(property_id: str, p: EllipticParams) -> str | None:
    """Reason the parameters are inadmissible for the property, or None."""
    pr = _BY_ID.get(property_id)
    if pr is None:
        raise DomainError(f"unknown property id {property_id!r}")
    p = _coerce(p)
    msg = _FAMILY_PRE[pr.family](p)
    if msg is None and pr.extra_pre is not None:
        msg = pr.extra_pre(p)
    return msg


def default_grid(n: int = 50) -> list[float]:
    return list(np.linspace(0.02, 0.98, n))


def _coeff_check(rep: Report, pr: Property, p: EllipticParams, k: dict, nterms: int = 30):
    env = _SeriesEnv(p)
    ser = pr.fn(env, k)
    c = ser.c[:nterms]
    scale = float(np.max(np.abs(c)))
    tol = 1e-12 * scale
    if pr.coeff == "+":
        bad = [i for i, v in enumerate(c) if not v > tol]
        label = "positive Maclaurin coefficients"
    else:
        bad = [i for i, v in enumerate(c[1:], start=1) if not v < -tol]
        label = "negative Maclaurin coefficients except the constant"
    rep.add(f"{label} (first {nterms})", not bad,
            note="" if not bad else f"violations at indices {bad[:5]}")


def verify_inequality(property_id: str, p: EllipticParams, grid: Sequence[float] | None = None,
                      *, tol: float = 1e-4, left_r: float = 1e-4, escalate: bool = True) -> Report:
    """Check one catalogue property: monotone direction, endpoint limits, coefficient signs.

    The right-end limit is checked at 1 - r = 1e-6 through the property's
    asymptotic transform.  With ``escalate`` the point moves further toward
    r = 1 (down to 1 - r = 1e-192) when slow algebraic convergence leaves
    the first point outside tolerance; the report records the point used.
    """
    pr = _BY_ID.get(property_id)
    if pr is None:
        raise DomainError(f"unknown property id {property_id!r}")
    p = _coerce(p)
    msg = property_precondition(property_id, p)
    if msg:
        raise PreconditionError(f"{property_id}: {msg}")
    k = _consts(p)
    grid = default_grid() if grid is None else sorted(grid)
    rep = Report(f"{property_id} {pr.title}, (a,b,c)=({p.a:g},{p.b:g},{p.c:g})")

    vals = [pr.fn(_FloatEnv.at(p, r), k) for r in grid]
    monotone_checks(rep, "f", grid, vals, pr.direction, strict=True)
    if property_id == "f7":
        logs = np.log(vals)
        slopes = np.diff(logs) / np.diff(grid)
        rep.add("log K convex on grid", bool(np.all(np.diff(slopes) > 0)))

    left_val = pr.fn(_FloatEnv.at(p, left_r), k)
    rep.close(f"f(0+) at r={left_r:g}", left_val, pr.left(k), tol, relative=True)

    expr = pr.right_expr or pr.fn
    expected = pr.right(k)
    label = pr.right_label if pr.right_expr else "f(1-)"
    deltas = _RIGHT_DELTAS if escalate else _RIGHT_DELTAS[:1]
    for i, d in enumerate(deltas):
        val = expr(_FloatEnv.near_one(p, d), k)
        scale = 1.0 if pr.abs_right else max(1.0, abs(expected))
        ok = abs(val - expected) <= tol * scale
        if ok or i == len(deltas) - 1:
            rep.add(f"{label} at 1-r={d:g}", ok, value=val, expected=expected,
                    error=abs(val - expected), tol=tol * scale)
            break

    if pr.coeff:
        _coeff_check(rep, pr, p, k)
    if property_id == "f7":
        env = _SeriesEnv(p)
        dlog = env.K.deriv() / env.K
        c = dlog.c[:30]
        rep.add("(log K)' has positive Maclaurin coefficients (first 30)",
                bool(np.all(c > 1e-12 * np.max(np.abs(c)))))
    return rep


def verify_catalogue(samples: dict[str, tuple[float, float, float]] | None = None,
                     grid: Sequence[float] | None = None, **kw) -> Report:
    """Run every catalogue entry on its sample triple."""
    samples = SAMPLE_TRIPLES if samples is None else samples
    rep = Report("monotonicity catalogue")
    for pid in PROPERTY_IDS:
        rep.extend(verify_inequality(pid, EllipticParams(*samples[pid]), grid, **kw), prefix=pid + ": ")
    return rep


# one admissible triple per property; chosen so that the fixed test point
# 1 - r = 1e-6 already lies in the asymptotic regime
SAMPLE_TRIPLES: dict[str, tuple[float, float, float]] = {
    "f1": (0.4, 0.5, 0.8),
    "f2": (0.4, 0.5, 0.8),
    "f3": (0.4, 0.5, 0.8),
    "f4": (0.95, 0.95, 1.0),
    "f5": (0.4, 0.5, 0.8),
    "f6": (0.5, 0.5, 1.0),
    "f7": (0.5, 0.5, 1.0),
    "f8": (0.4, 0.5, 0.8),
    "f9": (0.5, 0.5, 1.0),
    "f10": (0.5, 0.5, 1.0),
    "f11": (0.5, 0.5, 1.0),
    "f12": (0.95, 0.95, 1.0),
    "f13": (0.5, 0.5, 1.0),
    "f14": (0.5, 0.5, 1.0),
    "zb1": (1 / 3, 2 / 3, 1.0),
    "zb2": (1 / 3, 2 / 3, 1.0),
    "zb3": (1 / 3, 2 / 3, 1.0),
    "zb4": (1 / 3, 2 / 3, 1.0),
    "g1": (0.5, 0.5, 1.0),
    "g2": (0.95, 0.95, 1.0),
    "g3": (0.5, 0.5, 1.0),
    "arth": (0.5, 0.5, 1.0),
}
