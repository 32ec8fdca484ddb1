"""Named verification suites, each a list of Reports.

The CLI ``verify`` subcommand runs these; the acceptance tests call the
underlying module routines directly.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from . import elliptic, mfunc, modulus, quadmod, scmap, seriesmono
from .elliptic import EllipticParams
from .hyp2f1 import check_exp_substitution, check_power_substitution
from .report import Report

IDENTITY_TRIPLES = ((0.5, 0.5, 1.0), (0.5, 0.7, 1.1), (0.3, 0.9, 1.1))
IDENTITY_RADII = (0.1, 0.3, 0.5, 0.7, 0.9)
DERIVATIVE_TRIPLES = ((0.5, 0.5, 1.0), (0.4, 0.7, 1.1), (0.3, 0.9, 1.2))
DERIVATIVE_RADII = tuple(k / 10 for k in range(1, 10))
ODE_PAIRS = ((0.5, 1.0), (1 / 3, 1.0), (0.4, 0.9))
ODE_RADII = (0.2, 0.5, 0.8)
# one triple per regime of M near x = 0
MLIMIT_TRIPLES = ((0.5, 0.5, 1.0), (0.7, 0.8, 1.2), (0.3, 0.4, 1.0), (0.5, 1.0, 2.5), (0.3, 0.4, 2.5))
SC_PARAMS = ((0.2, 0.3, 1.0, 0.7), (0.4, 0.5, 1.1, 0.5), (0.5, 0.5, 1.0, 0.6), (0.3, 0.7, 1.0, 0.5))


def _fd_check(rep: Report, name: str, f, df, r: float, h: float = 1e-5, tol: float = 1e-6):
    fd = (f(r + h) - f(r - h)) / (2 * h)
    rep.close(f"{name} at r={r:g}", df(r), fd, tol, relative=True)


def derivative_report(a: float, b: float, c: float, radii=DERIVATIVE_RADII) -> Report:
    """Analytic derivatives of K, E, K - E, E - r'^2 K and mu against central differences."""
    p = EllipticParams(a, b, c)
    rep = Report(f"derivatives against central differences, (a,b,c)=({a:g},{b:g},{c:g})")
    K = lambda r: elliptic.K_abc(p, r)
    E = lambda r: elliptic.E_abc(p, r)
    pairs = [
        ("dK/dr", K, lambda r: elliptic.dK_dr(p, r)),
        ("dE/dr", E, lambda r: elliptic.dE_dr(p, r)),
        ("d(K-E)/dr", lambda r: K(r) - E(r), lambda r: elliptic.d_KminusE_dr(p, r)),
        ("d(E-r'^2 K)/dr", lambda r: E(r) - (1 - r * r) * K(r), lambda r: elliptic.d_EminusrpK_dr(p, r)),
        ("dmu/dr", lambda r: modulus.mu(a, b, c, r), lambda r: mfunc.mu_derivative(a, b, c, r)),
    ]
    for name, f, df in pairs:
        for r in radii:
            if name == "dE/dr" and a == 1:
                continue
            _fd_check(rep, name, f, df, r)
    return rep


def legendre_report(xs=tuple(k / 10 for k in range(1, 10))) -> Report:
    rep = Report("M constant on the Legendre family")
    for x in xs:
        rep.close(f"M(1/2,1/2,1,{x:g}) = 1/pi", mfunc.m_value(0.5, 0.5, 1.0, x), 1 / math.pi, 1e-10)
    for a in (1 / 3, 1 / 4, 1 / 6):
        for x in xs:
            rep.close(f"M({a:.4g},{1 - a:.4g},1,{x:g}) = sin(pi a)/pi", mfunc.m_value(a, 1 - a, 1.0, x),
                      math.sin(math.pi * a) / math.pi, 1e-9)
    return rep


def identities(seed: int = 0) -> list[Report]:
    out = [modulus.identity_suite(a, b, c, IDENTITY_RADII) for a, b, c in IDENTITY_TRIPLES]
    out.append(legendre_report())
    out.extend(derivative_report(*t) for t in DERIVATIVE_TRIPLES)
    for t in DERIVATIVE_TRIPLES:
        out.append(mfunc.check_modular_derivative(*t))
    return out


def inequalities(seed: int = 0) -> list[Report]:
    out = [elliptic.verify_catalogue()]
    grid = list(np.linspace(0.05, 5.0, 40))
    out.append(modulus.scaled_mu_check(0.8, 0.9, 1.0))
    out.append(check_exp_substitution(0.4, 0.7, 0.9, grid))
    out.append(check_power_substitution(0.7, 0.8, 1.2, 1.5, grid))
    return out


def odes(seed: int = 0) -> list[Report]:
    rep = Report("ODE residuals (normalized)")
    for a, c in ODE_PAIRS:
        for kind in elliptic.ODE_KINDS:
            for r in ODE_RADII:
                res = elliptic.ode_residual(kind, a, c, r)
                rep.add(f"{kind} (a,c)=({a:.4g},{c:g}) r={r:g}", res <= 1e-8, value=res,
                        error=res, tol=1e-8)
    return [rep,
            elliptic.schwarzian_check("mu", 0.3, 0.5, 0.9),
            elliptic.schwarzian_check("nu", 0.3, 0.5, 0.4)]


def mlimits(seed: int = 0) -> list[Report]:
    return [mfunc.m_limit_check(*t) for t in MLIMIT_TRIPLES]


def random_ratio_pairs(rng: np.random.Generator, count: int = 20, increasing: bool = True):
    """Pairs (f, g) of polynomials of degree <= 10 with g_n > 0 and f_n/g_n monotone."""
    for _ in range(count):
        d = int(rng.integers(1, 11))
        g = rng.uniform(0.1, 2.0, d + 1)
        steps = np.cumsum(rng.uniform(0.01, 1.0, d + 1))
        ratio = steps if increasing else steps[-1] + 1.0 - steps
        yield g * ratio, g


def seriesmono_suite(seed: int = 0) -> list[Report]:
    rng = np.random.default_rng(seed)
    out = []
    for inc in (True, False):
        for k, (f, g) in enumerate(random_ratio_pairs(rng, 20, inc)):
            rep = Report(f"{'increasing' if inc else 'decreasing'} pair {k}, degree {len(f) - 1}")
            rep.extend(seriesmono.quotient_monotone_certificate(f, g))
            rep.extend(seriesmono.poly_quotient_certificate(f, g))
            out.append(rep)
    return out


def sc_report(params=SC_PARAMS) -> list[Report]:
    out = []
    for a, b, c, r in params:
        p = scmap.SCParams(a, b, c, r)
        v = scmap.sc_vertices(p)
        rep = Report(f"SC vertices, (a,b,c,r)=({a:g},{b:g},{c:g},{r:g})")
        w1 = scmap.sc_forward(p, 1.0)
        w2 = scmap.sc_forward(p, 1.0 / (r * r))
        rep.close("quadrature at 1 = closed form", abs(w1 - v.w1), 0.0, 1e-7)
        rep.close("quadrature at 1/r^2 = closed form", abs(w2 - v.w2), 0.0, 1e-7)
        rep.add("vertex polygon convex", v.is_convex)
        rep.add("trapezoid detected iff c = 1 or c = a+b",
                v.is_trapezoid() == (abs(c - 1) < 1e-12 or abs(c - a - b) < 1e-12))
        rep.add("parallelogram detected iff c = 1 = a+b",
                v.is_parallelogram() == (abs(c - 1) < 1e-12 and abs(a + b - 1) < 1e-12))
        rep.add("rectangle detected iff a = b = 1/2, c = 1",
                v.is_rectangle() == (a == b == 0.5 and c == 1.0))
        out.append(rep)
    return out


def quadmod_suite(seed: int = 0) -> list[Report]:
    out = [quadmod.table_check(), quadmod.symmetric_check()]
    for h, k in ((1, 1), (1, 2), (2, 1), (0.7, 1.6)):
        out.append(quadmod.duplication_check(h, k))
    out.append(quadmod.reciprocal_check(1.5, 0.3))
    out.append(quadmod.bowman_check())
    out.extend(sc_report())
    return out


SUITES: dict[str, Callable[[int], list[Report]]] = {
    "identities": identities,
    "inequalities": inequalities,
    "odes": odes,
    "mlimits": mlimits,
    "seriesmono": seriesmono_suite,
    "quadmod": quadmod_suite,
}
