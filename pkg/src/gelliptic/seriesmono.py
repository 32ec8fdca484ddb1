"""Monotonicity of quotients of power series and polynomials.

If a_n/b_n is increasing (decreasing) with b_n > 0, then the quotient
sum a_n x^n / sum b_n x^n is increasing (decreasing) wherever both series
converge.  The routines here compute the quantities that witness this
(T_n sums, Maclaurin coefficients of f' g^2, gf' - fg') and sample the
quotient on a grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError, LengthError
from .report import Report, monotone_checks

COEFF_RTOL = 1e-12


@dataclass(frozen=True)
class CoeffSeq:
    coefficients: tuple[float, ...]
    positivity_required: bool = False

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(float(x) for x in self.coefficients))
        if self.positivity_required and not all(x > 0 for x in self.coefficients):
            raise DomainError("coefficient sequence must be strictly positive")

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, k):
        return self.coefficients[k]

    def array(self) -> np.ndarray:
        return np.asarray(self.coefficients)


def _seq(s, positive=False) -> CoeffSeq:
    if isinstance(s, CoeffSeq):
        if positive and not all(x > 0 for x in s.coefficients):
            raise DomainError("denominator coefficients must be positive")
        return s
    return CoeffSeq(tuple(s), positive)


def t_sum(a_seq, b_seq, n: int) -> float:
    """T_n = sum_{k=0}^{n} (n-k)(a_{n-k} b_k - a_k b_{n-k})."""
    a, b = _seq(a_seq), _seq(b_seq, positive=True)
    if n < 0:
        raise DomainError("n must be a natural number")
    if len(a) < n + 1 or len(b) < n + 1:
        raise LengthError(f"T_{n} needs sequences of length {n + 1}")
    return float(sum((n - k) * (a[n - k] * b[k] - a[k] * b[n - k]) for k in range(n + 1)))


def ratio_trend(a_seq, b_seq, rtol: float = COEFF_RTOL) -> str:
    """'increasing', 'decreasing', 'constant' or 'none' for the ratio a_n/b_n."""
    a, b = _seq(a_seq), _seq(b_seq, positive=True)
    r = np.asarray(a.coefficients[:len(b)]) / np.asarray(b.coefficients[:len(a)])
    d = np.diff(r)
    slack = rtol * max(np.max(np.abs(r)), 1e-300)
    if np.all(np.abs(d) <= slack):
        return "constant"
    if np.all(d > -slack):
        return "increasing"
    if np.all(d < slack):
        return "decreasing"
    return "none"


def _sign_ok(coeffs: np.ndarray, sign: int) -> tuple[bool, int]:
    """All coefficients of the given sign, up to relative noise; index of the first offender."""
    slack = COEFF_RTOL * max(float(np.max(np.abs(coeffs))) if coeffs.size else 0.0, 1e-300)
    for i, c in enumerate(coeffs):
        if sign > 0 and c < -slack or sign < 0 and c > slack or sign == 0 and abs(c) > slack:
            return False, i
    return True, -1


def _sign_for(trend: str) -> int:
    return {"increasing": 1, "decreasing": -1, "constant": 0}[trend]


def quotient_monotone_certificate(a_seq, b_seq, N: int | None = None,
                                  grid: Sequence[float] | None = None, R: float = 1.0) -> Report:
    """Classify a_n/b_n, then check the truncated quotient and f'(sum b x^n)^2 coefficients."""
    a, b = _seq(a_seq), _seq(b_seq, positive=True)
    n = min(len(a), len(b)) if N is None else N
    if len(a) < n or len(b) < n:
        raise LengthError(f"need {n} coefficients of each series")
    A, B = a.array()[:n], b.array()[:n]
    trend = ratio_trend(A, B)
    rep = Report(f"series quotient certificate, N={n}")
    if trend == "none":
        rep.add("ratio sequence monotone", False, note="inconclusive: a_n/b_n is not monotone")
        return rep
    rep.add("ratio sequence monotone", True, value=trend)
    sign = _sign_for(trend)

    # f = A/B as a power series; its derivative times B^2 is B A' - A B'
    d = np.polynomial.polynomial
    num = d.polysub(d.polymul(B, d.polyder(A)), d.polymul(A, d.polyder(B)))[: n - 1]
    ok, bad = _sign_ok(np.atleast_1d(num), sign)
    rep.add(f"first {n - 1} coefficients of f' (sum b x^n)^2 have sign {sign:+d}", ok,
            note="" if ok else f"first offender at index {bad}")
    ts = np.array([t_sum(A, B, k) for k in range(1, n)])
    ok, bad = _sign_ok(ts, sign)
    rep.add(f"T_n sign {sign:+d} for n=1..{n - 1}", ok, note="" if ok else f"T_{bad + 1}")

    xs = sorted(grid) if grid is not None else list(np.linspace(0, R, 102)[1:-1])
    q = d.polyval(np.asarray(xs), A) / d.polyval(np.asarray(xs), B)
    if sign == 0:
        rep.close("truncated quotient constant", float(np.ptp(q)), 0.0,
                  COEFF_RTOL * max(float(np.max(np.abs(q))), 1.0))
    else:
        monotone_checks(rep, "truncated quotient", xs, list(q), trend, rtol=COEFF_RTOL)
    return rep


def poly_quotient_certificate(f_coeffs, g_coeffs) -> Report:
    """Sign of every coefficient of g f' - f g' against the ratio trend."""
    f, g = _seq(f_coeffs), _seq(g_coeffs, positive=True)
    if len(f) != len(g):
        raise LengthError("polynomials must have equal length")
    F, G = f.array(), g.array()
    trend = ratio_trend(F, G)
    rep = Report(f"polynomial quotient certificate, degree {len(F) - 1}")
    w = wronskian_coeffs(F, G)
    if trend == "none":
        rep.add("ratio sequence monotone", False, note="inconclusive: f_n/g_n is not monotone")
        return rep
    rep.add("ratio sequence monotone", True, value=trend)
    sign = _sign_for(trend)
    ok, bad = _sign_ok(w, sign)
    rep.add(f"coefficients of g f' - f g' have sign {sign:+d}", ok, value=len(w),
            note="" if ok else f"first offender at index {bad}")
    return rep


def wronskian_coeffs(f_coeffs, g_coeffs) -> np.ndarray:
    """Coefficients of g f' - f g' (lowest degree first)."""
    d = np.polynomial.polynomial
    F, G = np.asarray(f_coeffs, float), np.asarray(g_coeffs, float)
    w = np.atleast_1d(d.polysub(d.polymul(G, d.polyder(F)), d.polymul(F, d.polyder(G))))
    # the degree 2n-1 term cancels identically; keep degrees 0..2n-2
    n = len(F) - 1
    w = np.concatenate([w, np.zeros(max(0, 2 * n - len(w)))])
    return w[: max(2 * n - 1, 1)]
