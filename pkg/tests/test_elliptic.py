import math

import mpmath as mp
import numpy as np
import pytest

from gelliptic import elliptic as el
from gelliptic.classical import ellipe, ellipk
from gelliptic.elliptic import EllipticParams
from gelliptic.errors import DomainError, InfinityAtOne, PreconditionError

mp.mp.dps = 30

LEG = EllipticParams(0.5, 0.5, 1.0)
TRIPLES = [(0.5, 0.5, 1.0), (0.4, 0.7, 1.1), (0.3, 0.9, 1.2)]


def test_classical_values():
    assert el.K_abc(LEG, 0.0) == pytest.approx(math.pi / 2, rel=1e-15)
    assert el.K_abc(LEG, 0.8) == pytest.approx(1.9953027776, rel=1e-10)
    assert el.E_abc(LEG, 0.6) == pytest.approx(1.4180833944, rel=1e-10)
    assert el.E_abc(LEG, 1.0) == pytest.approx(1.0, rel=1e-14)
    with pytest.raises(InfinityAtOne):
        el.K_abc(LEG, 1.0)


@pytest.mark.parametrize("r", [0.05, 0.3, 0.7, 0.99, 0.999999])
def test_against_agm(r):
    assert el.K_abc(LEG, r) == pytest.approx(ellipk(r), rel=1e-13)
    assert el.E_abc(LEG, r) == pytest.approx(ellipe(r), rel=1e-13)
    # and AGM against mpmath (parameter m = r^2)
    m = mp.mpf(r) ** 2
    assert ellipk(r) == pytest.approx(float(mp.ellipk(m)), rel=1e-13)
    assert ellipe(r) == pytest.approx(float(mp.ellipe(m)), rel=1e-13)


def test_generalized_against_mpmath():
    p = EllipticParams(0.4, 0.7, 1.1)
    r = 0.6
    expected = float(mp.beta(0.4, 0.7) / 2 * mp.hyp2f1(0.4, 0.7, 1.1, r * r))
    assert el.K_abc(p, r) == pytest.approx(expected, rel=1e-13)
    expected = float(mp.beta(0.4, 0.7) / 2 * mp.hyp2f1(-0.6, 0.7, 1.1, r * r))
    assert el.E_abc(p, r) == pytest.approx(expected, rel=1e-13)


def test_endpoints_and_complements():
    p = EllipticParams(0.4, 0.7, 1.1)
    B = el.specfun.beta(0.4, 0.7)
    assert el.K_abc(p, 0) == el.E_abc(p, 0) == pytest.approx(B / 2)
    expected_E1 = float(mp.beta(0.4, 0.7) / 2 * mp.hyp2f1(-0.6, 0.7, 1.1, 1))
    assert el.E_abc(p, 1.0) == pytest.approx(expected_E1, rel=1e-13)
    assert el.E_at_one(p) == pytest.approx(expected_E1, rel=1e-13)
    s = 1 / math.sqrt(2)
    assert el.K_comp(p, s) == pytest.approx(el.K_abc(p, s), rel=1e-14)
    assert el.K_comp(p, 1.0) == pytest.approx(B / 2)
    assert el.E_comp(p, 0.6) == pytest.approx(el.E_abc(p, 0.8), rel=1e-14)
    with pytest.raises(InfinityAtOne):
        el.K_comp(p, 0.0)


def test_flags_and_domain():
    assert LEG.kdef_valid and LEG.two_param and LEG.zero_balanced
    assert not EllipticParams(0.4, 0.7, 1.2).kdef_valid
    with pytest.raises(DomainError):
        el.K_abc(EllipticParams(1.5, 0.5, 1.0), 0.5)
    with pytest.raises(DomainError):
        el.K_abc(LEG, 1.2)


@pytest.mark.parametrize("triple", TRIPLES)
@pytest.mark.parametrize("r", [0.1, 0.5, 0.9])
def test_derivatives_against_differences(triple, r):
    p = EllipticParams(*triple)
    h = 1e-5
    K = lambda t: el.K_abc(p, t)
    E = lambda t: el.E_abc(p, t)
    fd = lambda f: (f(r + h) - f(r - h)) / (2 * h)
    assert el.dK_dr(p, r) == pytest.approx(fd(K), rel=1e-7)
    assert el.dE_dr(p, r) == pytest.approx(fd(E), rel=1e-7)
    assert el.d_KminusE_dr(p, r) == pytest.approx(el.dK_dr(p, r) - el.dE_dr(p, r), rel=1e-10)
    g = lambda t: E(t) - (1 - t * t) * K(t)
    assert el.d_EminusrpK_dr(p, r) == pytest.approx(fd(g), rel=1e-7)


def test_derivative_special_cases():
    # dE/dr carries the factor (a - 1)
    near = EllipticParams(1 - 1e-9, 0.5, 1.2)
    assert abs(el.dE_dr(near, 0.4)) < 1e-8
    # c = 1: d(E - r'^2 K)/dr = 2(1-b) r K
    p = EllipticParams(0.4, 0.7, 1.0)
    assert el.d_EminusrpK_dr(p, 0.3) == pytest.approx(2 * 0.3 * 0.3 * el.K_abc(p, 0.3), rel=1e-12)
    assert abs(el.dK_dr(LEG, 1e-6)) < 1e-5
    with pytest.raises(DomainError):
        el.dK_dr(LEG, 0.0)


@pytest.mark.parametrize("kind", el.ODE_KINDS)
@pytest.mark.parametrize("a,c", [(0.5, 1.0), (1 / 3, 1.0), (0.4, 0.9), (0.2, 1.3)])
def test_ode_residuals(kind, a, c):
    for r in (0.2, 0.5, 0.8):
        assert el.ode_residual(kind, a, c, r) <= 1e-8


def test_printed_equations_differ():
    # the corrected forms vanish; the printed ones for K' and E leave O(1) residuals
    assert el.ode_residual("Kcomp", 0.4, 0.9, 0.5, form="printed") > 1e-2
    assert el.ode_residual("E", 0.4, 0.9, 0.5, form="printed") > 1e-2
    # at c = 1 the (corrected) K and K' equations coincide
    z, y = 0.25, 0.75
    assert el._ode_coeffs("K", 0.3, 1.0, 0.5, z, y, "corrected") == \
        el._ode_coeffs("Kcomp", 0.3, 1.0, 0.5, z, y, "corrected")


def test_ode_domain():
    with pytest.raises(DomainError):
        el.ode_residual("K", 1.2, 1.0, 0.5)
    with pytest.raises(DomainError):
        el.ode_residual("Q", 0.5, 1.0, 0.5)


def test_schwarzian():
    assert el.schwarzian_check("mu", 0.3, 0.5, 0.9).passed
    assert el.schwarzian_check("nu", 0.3, 0.5, 0.4).passed
    with pytest.raises(DomainError):
        el.schwarzian_check("mu", 0.3, 0.5, 1.0)


def test_catalogue_ids():
    assert len(el.PROPERTY_IDS) == 22
    assert set(el.SAMPLE_TRIPLES) == set(el.PROPERTY_IDS)


@pytest.mark.parametrize("pid", el.PROPERTY_IDS)
def test_catalogue_entry(pid):
    rep = el.verify_inequality(pid, EllipticParams(*el.SAMPLE_TRIPLES[pid]))
    assert rep.passed, str(rep)


def test_catalogue_examples():
    rep = el.verify_inequality("f1", EllipticParams(0.4, 0.5, 0.8))
    left = [c for c in rep.checks if c.name.startswith("f(0+)")][0]
    assert left.expected == pytest.approx(0.5 / 0.8)
    rep = el.verify_inequality("f13", LEG)
    left = [c for c in rep.checks if c.name.startswith("f(0+)")][0]
    assert left.expected == pytest.approx(3 * math.pi / 8)


def test_catalogue_preconditions():
    with pytest.raises(PreconditionError):
        el.verify_inequality("f1", EllipticParams(0.4, 0.5, 1.2))
    with pytest.raises(PreconditionError):
        el.verify_inequality("g1", EllipticParams(0.9, 0.9, 1.0))
    with pytest.raises(DomainError):
        el.verify_inequality("nope", LEG)
    assert el.property_precondition("f1", LEG) is None


def test_catalogue_detects_wrong_direction():
    # f7 = K is increasing; feeding a decreasing grid order must not matter
    rep = el.verify_inequality("f7", LEG, grid=list(np.linspace(0.9, 0.1, 20)))
    assert rep.passed
