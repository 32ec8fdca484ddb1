import math

import numpy as np
import pytest

from gelliptic.errors import DivergesAtOne, DomainError, NoConvergence, PreconditionError
from gelliptic.hyp2f1 import (HypParams, check_exp_substitution, check_power_substitution,
                              contiguous_uv, dF_dx, d2F_dx2, f21, f21_at_one, hyp2f1,
                              max_terms, zero_balanced_near_one)
from gelliptic.specfun import ramanujan_R

# mpmath.hyp2f1 at 40 digits (tests/oracle_gen.py)
MPMATH = [
    (0.5, 0.5, 1.0, 0.3, 1.0910959103627815623),
    (0.5, 0.5, 1.0, 0.9, 1.6412644143423707998),
    (0.5, 0.5, 1.0, 0.999999, 5.2801571547627130945),
    (1 / 3, 2 / 3, 1.0, 0.99, 2.1813526420418220318),
    (0.4, 0.7, 1.1, 0.8, 1.4475822530466304088),
    (0.4, 0.7, 1.1, 0.5, 1.1841278392453696164),
    (1.5, 2.0, 2.5, 0.95, 28.050220843077796423),
    (0.3, 0.4, 1.7, 0.97, 1.1259530806570846615),
    (0.3, 0.4, 1.72, 0.9, 1.1034386144800578851),
    (-2.0, 1.5, 3.0, 0.9, 0.35312499999999999029),
    (2.0, 3.0, 4.5, 0.6, 3.1175862052078353754),
    (0.25, 0.25, 1.5, 1.0, 1.0787052023767587133),
    (0.5, 1.0, 2.5, 0.999, 1.4952719974925682471),
    (0.7, 0.8, 0.5, 0.85, 7.5338810517803188566),
    (1.2, 0.9, 3.1, 0.99, 1.9924068235253717455),
]


@pytest.mark.parametrize("a,b,c,x,expected", MPMATH)
def test_against_mpmath(a, b, c, x, expected):
    assert hyp2f1(a, b, c, x) == pytest.approx(expected, rel=1e-12)


def test_result_fields():
    res = f21(HypParams(1, 1, 2), 0.5)
    assert res.value == pytest.approx(2 * math.log(2), rel=1e-14)  # -log(1-x)/x
    assert res.method == "direct_series"
    assert res.terms_used > 0
    assert res.error_estimate <= 1e-14
    assert f21(HypParams(0.5, 0.5, 1), 0.0).value == 1.0


def test_methods_agree():
    p = HypParams(0.4, 0.7, 1.3)
    vals = [f21(p, 0.6, method=m).value for m in ("direct_series", "euler_transform", "connection")]
    assert max(vals) - min(vals) < 1e-13
    assert f21(p, 0.9).method == "connection"
    assert f21(HypParams(0.4, 0.7, 1.1), 0.9).method == "log_connection"
    assert f21(HypParams(0.5, 0.5, 1), 0.9).method == "log_connection"


def test_complement_improves_accuracy_near_one():
    y = 1e-12
    v = hyp2f1(0.5, 0.5, 1.0, 1 - y, y)
    # K(r) ~ log(4/r') for the classical case: F = (2/pi) K
    expected = 2 / math.pi * (math.log(4 / math.sqrt(y)))
    assert v == pytest.approx(expected, rel=1e-10)


def test_at_one():
    assert f21_at_one(HypParams(0.25, 0.25, 1.5)) == pytest.approx(1.0787052023767587133, rel=1e-14)
    assert f21(HypParams(0.3, 0.4, 1.2), 1.0).method == "closed_form_at_one"
    with pytest.raises(DivergesAtOne):
        f21_at_one(HypParams(0.5, 0.5, 1.0))
    with pytest.raises(DivergesAtOne):
        hyp2f1(0.7, 0.8, 1.2, 1.0)


def test_domain():
    with pytest.raises(DomainError):
        HypParams(0.5, 0.5, -1.0)
    with pytest.raises(DomainError):
        hyp2f1(0.5, 0.5, 1.0, 1.5)
    with pytest.raises(DomainError):
        hyp2f1(0.5, 0.5, 1.0, -0.1)


def test_zero_balanced_asymptotic():
    a, b = 0.3, 0.7
    x = 1 - 1e-8
    approx = zero_balanced_near_one(HypParams(a, b, 1.0), x)
    exact = hyp2f1(a, b, 1.0, x, 1e-8)
    assert approx == pytest.approx(exact, rel=1e-6)
    # leading behaviour B(a,b) F ~ R - log(1-x)
    from gelliptic.specfun import beta
    assert beta(a, b) * exact == pytest.approx(ramanujan_R(a, b) - math.log(1e-8), rel=1e-6)
    with pytest.raises(DomainError):
        zero_balanced_near_one(HypParams(0.3, 0.7, 1.1), x)


def test_max_terms_env(monkeypatch):
    monkeypatch.setenv("GELLIPTIC_MAX_TERMS", "5")
    assert max_terms() == 5
    with pytest.raises(NoConvergence):
        hyp2f1(0.5, 0.5, 1.0, 0.7)
    monkeypatch.delenv("GELLIPTIC_MAX_TERMS")
    assert max_terms() > 1000


@pytest.mark.parametrize("x", [0.1, 0.5, 0.85])
def test_derivatives_against_differences(x):
    p = HypParams(0.4, 0.7, 1.1)
    h = 1e-5
    f = lambda t: hyp2f1(0.4, 0.7, 1.1, t)
    assert dF_dx(p, x) == pytest.approx((f(x + h) - f(x - h)) / (2 * h), rel=1e-8)
    assert d2F_dx2(p, x) == pytest.approx((dF_dx(p, x + h) - dF_dx(p, x - h)) / (2 * h), rel=1e-7)


def test_derivative_near_one_against_mpmath():
    # mpmath.diff of hyp2f1(0.4, 0.7, 1.1, x); differences lose accuracy at the log singularity
    p = HypParams(0.4, 0.7, 1.1)
    assert dF_dx(p, 0.97) == pytest.approx(10.7055786316581, rel=1e-12)
    assert dF_dx(p, 0.99) == pytest.approx(32.6379587208462, rel=1e-12)


def test_contiguous_uv():
    a, b, c, x = 0.4, 0.7, 1.1, 0.3
    cu = contiguous_uv(HypParams(a, b, c), x)
    assert cu.v == pytest.approx(hyp2f1(a, b, c, x), rel=1e-14)
    assert cu.u == pytest.approx(hyp2f1(a - 1, b, c, x), rel=1e-14)
    h = 1e-5
    assert cu.du == pytest.approx((hyp2f1(a - 1, b, c, x + h) - hyp2f1(a - 1, b, c, x - h)) / (2 * h), rel=1e-8)
    assert cu.dv == pytest.approx((hyp2f1(a, b, c, x + h) - hyp2f1(a, b, c, x - h)) / (2 * h), rel=1e-8)


def test_substitution_monotonicity_reports():
    grid = np.linspace(0.05, 5, 30)
    assert check_exp_substitution(0.4, 0.7, 0.9, grid).passed
    assert check_power_substitution(0.7, 0.8, 1.2, 1.5, grid).passed
    with pytest.raises(PreconditionError):
        check_exp_substitution(0.4, 1.7, 0.9, grid)
    with pytest.raises(PreconditionError):
        check_power_substitution(0.2, 0.3, 1.2, 1.0, grid)
