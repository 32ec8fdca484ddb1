"""Schwarz-Christoffel map of the upper half-plane onto a quadrilateral.

    f(z) = C * int_0^z t^(b-1) (1-t)^(c-b-1) (1-r^2 t)^(-a) dt,   C = 1/B(b, c-b)

Prevertices 0, 1, 1/r^2 and infinity go to vertices with interior angles
b, c-b, 1-a and 1+a-c (in units of pi).  Powers use the boundary values of
the branches continuous in the closed upper half-plane: arg t in [0, pi],
arg(1-t) and arg(1-r^2 t) in [-pi, 0].
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy import integrate

from . import specfun
from .errors import (AngleConstraintError, BranchError, DomainError, NoConvergence,
                     OutsideImage, QuadratureFailure)
from .hyp2f1 import hyp2f1

ComplexPoint = complex

PARAM_TOL = 1e-12
SNAP_TOL = 1e-12
NEAR_PREVERTEX = 1e-2
QUAD_EPSABS = 1e-13
QUAD_EPSREL = 1e-12
QUAD_LIMIT = 200
NEWTON_MAX = 60
NEWTON_TOL = 1e-10


@dataclass(frozen=True)
class SCParams:
    a: float
    b: float
    c: float
    r: float

    def __post_init__(self):
        a, b, c, r = self.a, self.b, self.c, self.r
        if not (0 < a < 1 and 0 < b < 1):
            raise AngleConstraintError(f"need 0 < a, b < 1, got a={a}, b={b}")
        if not (max(a + b, 1.0) - PARAM_TOL <= c <= 1 + min(a, b) + PARAM_TOL):
            raise AngleConstraintError(f"need max(a+b, 1) <= c <= 1 + min(a, b), got c={c}")
        if not 0 < r < 1:
            raise DomainError(f"r must lie in (0, 1), got {r}")

    @property
    def C(self) -> float:
        return 1.0 / specfun.beta(self.b, self.c - self.b)

    @property
    def prevertices(self) -> tuple[float, float]:
        return 1.0, 1.0 / (self.r * self.r)

    @property
    def rc2(self) -> float:
        return (1.0 - self.r) * (1.0 + self.r)

    @property
    def angles(self) -> tuple[float, float, float, float]:
        a, b, c = self.a, self.b, self.c
        return (b, c - b, 1 - a, 1 + a - c)


@dataclass(frozen=True)
class QuadVertices:
    w0: complex
    w1: complex
    w2: complex
    w3: complex
    angles: tuple[float, float, float, float]

    @property
    def points(self) -> tuple[complex, complex, complex, complex]:
        return (self.w0, self.w1, self.w2, self.w3)

    def geometric_angles(self) -> tuple[float, ...]:
        """Interior angles measured from the vertex positions, in units of pi."""
        pts = self.points
        out = []
        for k in range(4):
            prev, cur, nxt = pts[k - 1], pts[k], pts[(k + 1) % 4]
            turn = cmath.phase((prev - cur) / (nxt - cur))
            out.append((turn % (2 * math.pi)) / math.pi)
        return tuple(out)

    def cross_products(self) -> tuple[float, ...]:
        pts = self.points
        out = []
        for k in range(4):
            e1 = pts[(k + 1) % 4] - pts[k]
            e2 = pts[(k + 2) % 4] - pts[(k + 1) % 4]
            out.append(e1.real * e2.imag - e1.imag * e2.real)
        return tuple(out)

    def is_convex(self) -> bool:
        cp = self.cross_products()
        return all(x > 0 for x in cp) or all(x < 0 for x in cp)

    def is_parallelogram(self, tol: float = 1e-8) -> bool:
        return abs((self.w2 - self.w1) - (self.w3 - self.w0)) <= tol * max(1.0, abs(self.w1))

    def is_rectangle(self, tol: float = 1e-8) -> bool:
        side = self.w1 - self.w0
        up = self.w2 - self.w1
        return self.is_parallelogram(tol) and abs((side.conjugate() * up).real) <= tol * abs(side) * abs(up)

    def is_trapezoid(self, tol: float = 1e-8) -> bool:
        def parallel(u, v):
            return abs((u.conjugate() * v).imag) <= tol * abs(u) * abs(v)
        p = self.points
        return parallel(p[1] - p[0], p[3] - p[2]) or parallel(p[2] - p[1], p[0] - p[3])

    def contains(self, w: complex, tol: float = 0.0) -> bool:
        """Point-in-convex-polygon test (counterclockwise vertices)."""
        pts = self.points
        for k in range(4):
            e = pts[(k + 1) % 4] - pts[k]
            d = w - pts[k]
            if e.real * d.imag - e.imag * d.real < -tol * abs(e):
                return False
        return True

    def boundary_distance(self, w: complex) -> float:
        pts = self.points
        return min(_segment_distance(w, pts[k], pts[(k + 1) % 4]) for k in range(4))


@dataclass
class GridImage:
    polylines: list[list[complex]]
    source: dict = field(default_factory=dict)
    vertices: QuadVertices | None = None


# ---------------------------------------------------------------------------
# integrand and path integration


def _log_upper(w: complex) -> complex:
    """log with arg in [0, pi]: the branch of log t on the closed upper half-plane."""
    return complex(math.log(abs(w)), math.atan2(max(w.imag, 0.0), w.real))


def _log_lower(w: complex) -> complex:
    """log with arg in [-pi, 0]: the branch of log(1 - t) and log(1 - r^2 t)."""
    im = w.imag if w.imag < 0 else -0.0
    return complex(math.log(abs(w)), math.atan2(im, w.real))


def _factors(p: SCParams):
    """(linear factor, exponent, log branch, zero) for each finite prevertex."""
    a, b, c, r2 = p.a, p.b, p.c, p.r * p.r
    return (
        (lambda t: t, b - 1, _log_upper, 0.0),
        (lambda t: 1 - t, c - b - 1, _log_lower, 1.0),
        (lambda t: 1 - r2 * t, -a, _log_lower, 1.0 / r2),
    )


def _segment_distance(p: complex, u: complex, v: complex) -> float:
    d = v - u
    if d == 0:
        return abs(p - u)
    s = ((p - u) * d.conjugate()).real / abs(d) ** 2
    s = min(1.0, max(0.0, s))
    return abs(p - (u + s * d))


def _split(p: SCParams, u: complex, v: complex) -> list[complex]:
    """Route the segment u -> v through any prevertex it passes close to."""
    stops = []
    d = v - u
    for z0 in (0.0, *p.prevertices):
        if abs(u - z0) == 0 or abs(v - z0) == 0:
            continue
        if _segment_distance(z0, u, v) < NEAR_PREVERTEX:
            s = ((z0 - u) * d.conjugate()).real / abs(d) ** 2
            stops.append((s, complex(z0)))
    stops.sort(key=lambda x: x[0])
    return [u] + [z for _, z in stops] + [v]


def _quad_complex(fun, alpha: float, beta: float) -> complex:
    kw = dict(epsabs=QUAD_EPSABS, epsrel=QUAD_EPSREL, limit=QUAD_LIMIT, full_output=1)
    if alpha != 0.0 or beta != 0.0:
        kw.update(weight="alg", wvar=(alpha, beta))
    out = []
    for part in (lambda s: fun(s).real, lambda s: fun(s).imag):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", integrate.IntegrationWarning)
            res = integrate.quad(part, 0.0, 1.0, **kw)
        val, err = res[0], res[1]
        if len(res) > 3 and err > 1e-9:
            raise QuadratureFailure(f"quadrature error estimate {err:.2e}: {res[3]}")
        out.append(val)
    return complex(out[0], out[1])


def _segment_integral(p: SCParams, u: complex, v: complex) -> complex:
    """int_u^v g_r(t) dt along the straight segment, singular endpoints as weights."""
    if u == v:
        return 0j
    facs = _factors(p)
    alpha = beta = 0.0
    parts = []
    for lin, e, lg, z0 in facs:
        if u == z0:
            alpha += e
            parts.append(("left", cmath.exp(e * lg(lin(v))), None, None))
        elif v == z0:
            beta += e
            parts.append(("right", cmath.exp(e * lg(lin(u))), None, None))
        else:
            parts.append(("free", None, lin, (e, lg)))
    d = v - u

    def fun(s):
        t = u + d * s
        val = d
        for kind, const, lin, el in parts:
            if kind == "free":
                e, lg = el
                w = lin(t)
                if w == 0:
                    raise BranchError("path meets a prevertex in its interior")
                val *= cmath.exp(e * lg(w))
            else:
                val *= const
        return val

    return _quad_complex(fun, alpha, beta)


def _check_point(p: SCParams, z: complex) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError("z must be finite; the vertex at infinity comes from sc_vertices")
    if z.imag < 0:
        raise BranchError(f"z = {z} lies below the real axis")
    for z0 in (0.0, *p.prevertices):
        dz = abs(z - z0)
        if 0 < dz <= SNAP_TOL:
            raise DomainError(f"z = {z} within {SNAP_TOL:g} of the prevertex {z0:g}")
    return z


def integrate_path(p: SCParams, u: complex, v: complex) -> complex:
    """C * int_u^v g_r(t) dt along a path in the closed upper half-plane."""
    nodes = _split(p, complex(u), complex(v))
    total = 0j
    for x, y in zip(nodes[:-1], nodes[1:]):
        total += _segment_integral(p, x, y)
    return p.C * total


def sc_forward(p: SCParams, z: complex) -> complex:
    z = _check_point(p, z)
    if z == 0:
        return 0j
    return integrate_path(p, 0j, z)


def sc_derivative(p: SCParams, z: complex) -> complex:
    """f'(z) = C g_r(z)."""
    z = complex(z)
    val = complex(p.C)
    for lin, e, lg, _ in _factors(p):
        val *= cmath.exp(e * lg(lin(z)))
    return val


# ---------------------------------------------------------------------------
# vertices in closed form


def _vertex_terms(p: SCParams):
    a, b, c, r = p.a, p.b, p.c, p.r
    z, y = r * r, p.rc2
    bb = specfun.beta(b, c - b)
    w1 = hyp2f1(a, b, c, z, y)
    L = specfun.beta(c - b, 1 - a) / bb * cmath.exp(1j * math.pi * (b + 1 - c))
    edge12 = L * y ** (c - a - b) * hyp2f1(c - a, c - b, c + 1 - a - b, y, z)
    tail = (specfun.beta(1 - a, 1 + a - c) / bb * cmath.exp(1j * math.pi * (a + b + 1 - c))
            * y ** (c - a - b) * z ** (1 - c) * hyp2f1(1 - b, 1 - a, 2 - c, z, y))
    return w1, L, edge12, tail


def sc_vertices(p: SCParams) -> QuadVertices:
    w1, _, edge12, tail = _vertex_terms(p)
    w2 = w1 + edge12
    return QuadVertices(0j, complex(w1), w2, w2 + tail, p.angles)


def second_vertex_alternative(p: SCParams) -> complex:
    """f(1/r^2) from the Euler-transformed form of the edge term."""
    a, b, c, r = p.a, p.b, p.c, p.r
    z, y = r * r, p.rc2
    w1, L, _, _ = _vertex_terms(p)
    return w1 + L * y ** (c - a - b) * z ** (1 - c) * hyp2f1(1 - b, 1 - a, c + 1 - a - b, y, z)


# ---------------------------------------------------------------------------
# inverse map


@lru_cache(maxsize=32)
def _seed_table(p: SCParams):
    """Forward images of a coarse net in H, parametrised through the unit disk."""
    zs, ws = [], []
    for rho in (0.15, 0.35, 0.55, 0.7, 0.82, 0.9):
        for k in range(24):
            zeta = rho * cmath.exp(2j * math.pi * (k + 0.5) / 24)
            zz = 1j * (1 + zeta) / (1 - zeta)
            zs.append(zz)
            ws.append(sc_forward(p, zz))
    return np.array(zs), np.array(ws)


def sn(p: SCParams, w: complex, *, tol: float = NEWTON_TOL, z0: complex | None = None) -> complex:
    """Inverse of the forward map by damped complex Newton iteration."""
    w = complex(w)
    verts = sc_vertices(p)
    if w == 0:
        return 0j
    if not verts.contains(w) or verts.boundary_distance(w) <= 1e-12:
        raise OutsideImage(f"w = {w} is not inside the image quadrilateral")
    if z0 is None:
        zs, ws = _seed_table(p)
        z = complex(zs[int(np.argmin(np.abs(ws - w)))])
    else:
        z = complex(z0)
    res = sc_forward(p, z) - w
    for _ in range(NEWTON_MAX):
        if abs(res) <= tol:
            return z
        step = res / sc_derivative(p, z)
        lam = 1.0
        for _ in range(40):
            cand = z - lam * step
            if cand.imag >= 0 and abs(cand) > 0:
                new_res = sc_forward(p, cand) - w
                if abs(new_res) < abs(res):
                    break
            lam *= 0.5
        else:
            raise NoConvergence(f"sn: line search failed at z = {z}")
        z, res = cand, new_res
    if abs(res) <= tol:
        return z
    raise NoConvergence(f"sn: residual {abs(res):.2e} after {NEWTON_MAX} Newton steps")


# ---------------------------------------------------------------------------
# grids


def _snap(p: SCParams, z: complex) -> complex:
    for z0 in (0.0, *p.prevertices):
        if abs(z - z0) <= SNAP_TOL:
            return complex(z0)
    return z


def map_polyline(p: SCParams, zs) -> list[complex]:
    """Images of consecutive points, integrating segment by segment."""
    zs = [_snap(p, complex(z)) for z in zs]
    out = [sc_forward(p, zs[0])]
    for u, v in zip(zs[:-1], zs[1:]):
        out.append(out[-1] + integrate_path(p, u, v))
    return out


def grid_image(p: SCParams, n_lines: int = 8, samples_per_line: int = 40,
               region: tuple[float, float, float, float] | None = None) -> GridImage:
    """Images of horizontal and vertical lines of a rectangle in H.

    The default rectangle is [0, 1/r^2 + 1] x [0, 3]; its bottom edge runs
    along the real axis and maps onto the polygon boundary.
    """
    if n_lines < 2:
        raise DomainError("n_lines must be at least 2")
    if samples_per_line < 8:
        raise DomainError("samples_per_line must be at least 8")
    x0, x1, y0, y1 = region if region is not None else (0.0, p.prevertices[1] + 1.0, 0.0, 3.0)
    if y0 < 0:
        raise BranchError("grid region must lie in the closed upper half-plane")
    xs = np.linspace(x0, x1, samples_per_line)
    ys = np.linspace(y0, y1, samples_per_line)
    lines = []
    kinds = []
    for yk in np.linspace(y0, y1, n_lines):
        lines.append(map_polyline(p, [complex(x, yk) for x in xs]))
        kinds.append(("horizontal", float(yk)))
    for xk in np.linspace(x0, x1, n_lines):
        lines.append(map_polyline(p, [complex(xk, y) for y in ys]))
        kinds.append(("vertical", float(xk)))
    src = dict(region=(x0, x1, y0, y1), n_lines=n_lines, samples_per_line=samples_per_line,
               lines=kinds, params=(p.a, p.b, p.c, p.r))
    return GridImage(lines, src, sc_vertices(p))
