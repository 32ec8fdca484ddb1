"""Conformal modulus of the quadrilateral with vertices 0, 1, A, B.

The interior angles give the map parameters

    b = arg(B)/pi,  c = (pi - arg(A-1) + arg(B))/pi,  a = 1 - (arg(A-1) - arg(A-B))/pi,

and the prevertex 1/r^2 of A is fixed by |A - 1| = |L| G(r) with

    G(r) = r'^(2(c-a-b)) F(c-a, c-b; c+1-a-b; r'^2) / F(a, b; c; r^2).

The modulus is K(r')/K(r) with the classical K computed by the AGM.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq
from scipy.special import expit

from . import specfun
from .classical import agm_quotient
from .errors import AngleConstraintError, DomainError, NoConvergence, OutOfRange, PhaseMismatch
from .hyp2f1 import hyp2f1
from .modulus import mu_inv
from .report import Report

PHASE_TOL = 1e-9
ANGLE_TOL = 1e-12
S_LIMIT = 340.0
SOLVE_RTOL = 1e-11

REFERENCE_TABLE = (
    (1.000000, 1.279261, 1.354244, 1.383086, 1.397799),
    (0.781700, 1.000000, 1.127663, 1.201627, 1.248066),
    (0.738419, 0.886789, 1.000000, 1.080783, 1.138566),
    (0.723020, 0.832204, 0.925254, 1.000000, 1.058739),
    (0.715410, 0.801239, 0.878297, 0.944519, 1.000000),
)


@dataclass(frozen=True)
class QuadSpec:
    A: complex
    B: complex

    def __post_init__(self):
        A, B = complex(self.A), complex(self.B)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        if not (A.imag > 0 and B.imag > 0):
            raise DomainError(f"A and B must lie in the upper half-plane, got {A}, {B}")
        a, b, c = self.params
        angles = (b, c - b, 1 - a, 1 + a - c)
        if not all(ANGLE_TOL < x < 2 - ANGLE_TOL for x in angles):
            raise AngleConstraintError(f"interior angles {angles} (units of pi) do not form a simple quadrilateral")

    @property
    def params(self) -> tuple[float, float, float]:
        A, B = self.A, self.B
        argA1 = cmath.phase(A - 1)
        b = cmath.phase(B) / math.pi
        c = (math.pi - argA1 + cmath.phase(B)) / math.pi
        a = 1 - (argA1 - cmath.phase(A - B)) / math.pi
        return a, b, c

    @property
    def angles(self) -> tuple[float, float, float, float]:
        a, b, c = self.params
        return (b, c - b, 1 - a, 1 + a - c)

    @property
    def strict_hypotheses(self) -> bool:
        """0 < a, b < 1 and max(a+b, 1) <= c <= 1 + min(a, b)."""
        a, b, c = self.params
        t = ANGLE_TOL
        return 0 < a < 1 and 0 < b < 1 and max(a + b, 1) - t <= c <= 1 + min(a, b) + t

    @property
    def convex(self) -> bool:
        return all(x < 1 + ANGLE_TOL for x in self.angles)


@dataclass(frozen=True)
class QMResult:
    modulus: float
    r: float
    a: float
    b: float
    c: float
    L: complex
    residual: float
    iterations: int
    r_comp: float = 0.0
    strict_hypotheses: bool = True


def mapping_constant(a: float, b: float, c: float) -> complex:
    return specfun.beta(c - b, 1 - a) / specfun.beta(b, c - b) * cmath.exp(1j * math.pi * (b + 1 - c))


def G(a: float, b: float, c: float, r: float, rc: float | None = None) -> float:
    rc = math.sqrt((1 - r) * (1 + r)) if rc is None else rc
    z, y = r * r, rc * rc
    return y ** (c - a - b) * hyp2f1(c - a, c - b, c + 1 - a - b, y, z) / hyp2f1(a, b, c, z, y)


def _G_s(a, b, c, s):
    z, y = float(expit(2 * s)), float(expit(-2 * s))
    return y ** (c - a - b) * hyp2f1(c - a, c - b, c + 1 - a - b, y, z) / hyp2f1(a, b, c, z, y)


def _as_spec(A, B=None) -> QuadSpec:
    if isinstance(A, QuadSpec):
        return A
    return QuadSpec(complex(A), complex(B))


def qm(A, B=None) -> QMResult:
    """Modulus of the quadrilateral (0, 1, A, B); accepts a QuadSpec or the two vertices."""
    spec = _as_spec(A, B)
    a, b, c = spec.params
    L = mapping_constant(a, b, c)
    d = spec.A - 1
    if abs(cmath.phase(d) - cmath.phase(L)) > PHASE_TOL:
        raise PhaseMismatch(f"arg(A-1) = {cmath.phase(d)!r} but arg(L) = {cmath.phase(L)!r}")
    target = (d / L).real
    if not target > 0:
        raise PhaseMismatch("(A-1)/L is not a positive real")
    lt = math.log(target)

    def g(s):
        return math.log(_G_s(a, b, c, s)) - lt

    # G decreases in s = log(r/r'); expand a bracket until it straddles the target
    lo, hi = -1.0, 1.0
    glo, ghi = g(lo), g(hi)
    while glo < 0:
        if lo <= -S_LIMIT:
            raise OutOfRange(f"|A-1|/|L| = {target!r} above the range of G")
        lo = max(2 * lo, -S_LIMIT)
        glo = g(lo)
    while ghi > 0:
        if hi >= S_LIMIT:
            raise OutOfRange(f"|A-1|/|L| = {target!r} below the range of G")
        hi = min(2 * hi, S_LIMIT)
        ghi = g(hi)
    try:
        s, info = brentq(g, lo, hi, xtol=1e-15, rtol=1e-15, maxiter=200, full_output=True)
    except RuntimeError as exc:
        raise NoConvergence(str(exc)) from None
    z, y = float(expit(2 * s)), float(expit(-2 * s))
    r, rc = math.sqrt(z), math.sqrt(y)
    resid = abs(_G_s(a, b, c, s) - target)
    if resid > SOLVE_RTOL * max(1.0, target):
        raise NoConvergence(f"G(r) residual {resid:.2e}")
    return QMResult(agm_quotient(r, rc), r, a, b, c, L, resid, info.iterations, rc,
                    spec.strict_hypotheses)


def qm_points(z0: complex, z1: complex, z2: complex, z3: complex) -> float:
    """Modulus of the quadrilateral with counterclockwise vertices z0..z3.

    The affine map T(z) = (z - z0)/(z1 - z0) moves it to (0, 1, A, B); the
    modulus is invariant under T.
    """
    z0, z1, z2, z3 = map(complex, (z0, z1, z2, z3))
    if z1 == z0:
        raise DomainError("z0 and z1 coincide")
    t = lambda z: (z - z0) / (z1 - z0)
    return qm(t(z2), t(z3)).modulus


def qm_relabeled(A, B=None, shift: int = 1) -> float:
    """Modulus of (0, 1, A, B) computed from a cyclic relabelling of its vertices.

    Starting the vertex list one place later swaps the roles of the sides, so
    an odd shift gives the reciprocal modulus.
    """
    spec = _as_spec(A, B)
    pts = [0j, 1 + 0j, spec.A, spec.B]
    k = shift % 4
    q = qm_points(*(pts[(k + j) % 4] for j in range(4)))
    return q if k % 2 == 0 else 1.0 / q


def qm_table(m_max: int = 5, n_max: int = 5) -> np.ndarray:
    if m_max < 1 or n_max < 1:
        raise DomainError("table dimensions must be at least 1")
    out = np.empty((m_max, n_max))
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            out[m - 1, n - 1] = qm(complex(m, n), 1j).modulus
    return out


def truncate6(x: float) -> float:
    """Truncate to six decimals; values within 1e-11 below a cut are treated as on it."""
    return math.floor(x * 1e6 + 1e-5) / 1e6


def table_check(tol: float = 2e-6) -> Report:
    rep = Report("QM(m+in, i) against the six-decimal table")
    vals = qm_table(5, 5)
    for m in range(5):
        for n in range(5):
            v = vals[m, n]
            rep.close(f"QM({m + 1}+{n + 1}i, i)", truncate6(v), REFERENCE_TABLE[m][n], tol,
                      note=f"untruncated {v:.9f}")
    for m in range(5):
        for n in range(m + 1, 5):
            rep.close(f"QM({m + 1}+{n + 1}i, i) QM({n + 1}+{m + 1}i, i) = 1",
                      vals[m, n] * vals[n, m], 1.0, 1e-5)
    return rep


def symmetric_check(ts=(0.5, 1.0, 2.0, 4.0), tol: float = 1e-8) -> Report:
    """A = t e^{i pi/4}, B = i is symmetric about arg z = pi/4; its modulus is 1."""
    if isinstance(ts, (int, float)):
        ts = (ts,)
    rep = Report("symmetric quadrilaterals")
    for t in ts:
        if not t > 0:
            raise DomainError("t must be positive")
        q = qm(t * cmath.exp(1j * math.pi / 4), 1j).modulus
        rep.close(f"QM(t e^(i pi/4), i) at t={t:g}", q, 1.0, tol)
    return rep


def reciprocal_check(t: float, alpha: float, tol: float = 1e-7) -> Report:
    """Mirror images across arg z = pi/4 have reciprocal moduli."""
    if not (t > 0 and 0 < alpha < math.pi / 4):
        raise DomainError("need t > 0 and 0 < alpha < pi/4")
    q1 = qm(t * cmath.exp(1j * (math.pi / 4 - alpha)), 1j).modulus
    q2 = qm(t * cmath.exp(1j * (math.pi / 4 + alpha)), 1j).modulus
    rep = Report(f"reflected quadrilaterals, t={t:g}, alpha={alpha:g}")
    rep.close("product of moduli", q1 * q2, 1.0, tol)
    return rep


def duplication_sides(h: float, k: float) -> tuple[float, float]:
    c = 1 + 1j * (k - h)
    lhs = qm((1 + 1j * (h + k)) / c, 2j * k / c).modulus
    rhs = qm(1 + 1j * h, 1j * k).modulus
    return lhs, 2 * rhs


def duplication_check(h: float, k: float, tol: float = 1e-7) -> Report:
    if not (h > 0 and k > 0):
        raise DomainError("need h, k > 0")
    lhs, rhs = duplication_sides(h, k)
    rep = Report(f"duplication, h={h:g}, k={k:g}")
    rep.close("QM((1+i(h+k))/c, 2ik/c) = 2 QM(1+ih, ik)", lhs, rhs, tol)
    return rep


def bowman_modulus(h: float) -> float:
    """K(r)/K(r') with r = ((t1-t2)/(t1+t2))^2, t1 = mu^{-1}(pi/(2c)), t2 = mu^{-1}(pi c/2), c = 2h-1."""
    if not h > 1:
        raise DomainError("h must exceed 1")
    c = 2 * h - 1
    t1 = mu_inv(0.5, 0.5, 1.0, math.pi / (2 * c)).r
    t2 = mu_inv(0.5, 0.5, 1.0, math.pi * c / 2).r
    r = ((t1 - t2) / (t1 + t2)) ** 2
    return 1.0 / agm_quotient(r)


def bowman_check(hs=(1.5, 2.0, 3.0), tol: float = 1e-8) -> Report:
    """Compare the closed formula with the solver for (0, 1, 1+ih, i(h-1))."""
    rep = Report("closed formula for (0, 1, 1+ih, i(h-1))")
    for h in hs:
        q = qm(1 + 1j * h, 1j * (h - 1)).modulus
        bw = bowman_modulus(h)
        rep.close(f"formula = QM at h={h:g}", bw, q, tol)
        rep.add(f"h-1 <= QM <= h at h={h:g}", h - 1 <= q <= h, value=q, note="exploratory")
    return rep
