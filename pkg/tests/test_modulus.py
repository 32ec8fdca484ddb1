import math

import pytest
from hypothesis import given, settings, strategies as st

from gelliptic import modulus as md
from gelliptic.errors import DomainError, OutOfRange, PreconditionError

# (B(a,b)/2) F(a,b;c;r'^2)/F(a,b;c;r^2) with mpmath (tests/oracle_gen.py)
MU_MPMATH = [
    (0.5, 0.5, 1.0, 0.1, 3.6863692375528518846),
    (0.5, 0.5, 1.0, 0.5, 2.0094593770052851728),
    (0.5, 0.5, 1.0, 0.9, 1.1396666442344294645),
    (0.4, 0.7, 1.1, 0.1, 3.6142879316976345294),
    (0.4, 0.7, 1.1, 0.5, 1.9456582698574197498),
    (0.4, 0.7, 1.1, 0.9, 1.0906964437613424826),
    (0.3, 0.9, 1.2, 0.1, 3.8525256058834896353),
    (0.3, 0.9, 1.2, 0.5, 2.181133942916665619),
    (0.3, 0.9, 1.2, 0.9, 1.2972704248161476199),
    (0.3, 0.4, 1.0, 0.1, 3.5382468361375365679),
    (0.3, 0.4, 1.0, 0.5, 2.8511971036406103606),
    (0.3, 0.4, 1.0, 0.9, 2.219958459056911573),
]


def bisect(f, lo, hi, n=200):
    """Plain bisection for a decreasing f with f(lo) > 0 > f(hi)."""
    for _ in range(n):
        mid = 0.5 * (lo + hi)
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@pytest.mark.parametrize("a,b,c,r,expected", MU_MPMATH)
def test_mu_against_mpmath(a, b, c, r, expected):
    assert md.mu(a, b, c, r) == pytest.approx(expected, rel=1e-13)


def test_mu_classical():
    assert md.mu(0.5, 0.5, 1.0, 1 / math.sqrt(2)) == pytest.approx(math.pi / 2, rel=1e-14)
    for r in (0.01, 0.3, 0.999):
        assert md.mu(0.5, 0.5, 1.0, r) == pytest.approx(md.classical_mu(r), rel=1e-13)


def test_mu_domain():
    for r in (0.0, 1.0, -0.2):
        with pytest.raises(DomainError):
            md.mu(0.5, 0.5, 1.0, r)
    with pytest.raises(DomainError):
        md.mu(-0.5, 0.5, 1.0, 0.5)


@pytest.mark.parametrize("a,b,c", [(0.5, 0.5, 1.0), (0.4, 0.7, 1.1), (0.3, 0.4, 1.0)])
@pytest.mark.parametrize("r", [0.05, 0.4, 0.8, 0.99])
def test_mu_inv_against_bisection(a, b, c, r):
    y = md.mu(a, b, c, r)
    rep = md.mu_inv(a, b, c, y)
    ref = bisect(lambda t: md.mu(a, b, c, t) - y, 1e-9, 1 - 1e-9)
    assert rep.r == pytest.approx(ref, abs=1e-11)
    assert rep.r == pytest.approx(r, abs=1e-11)
    assert rep.r ** 2 + rep.r_comp ** 2 == pytest.approx(1.0, abs=1e-15)
    assert rep.residual <= 1e-11 * max(1, y)


def test_mu_inv_extremes():
    # mu(r) ~ log(4/r) as r -> 0; far-out targets still resolve through r'
    rep = md.mu_inv(0.5, 0.5, 1.0, 50.0)
    assert rep.r == pytest.approx(4 * math.exp(-50.0), rel=1e-8)
    # mu(r) mu(r') = pi^2/4 gives r' ~ 4 exp(-pi^2/(4y)) for small y
    rep = md.mu_inv(0.5, 0.5, 1.0, 0.01)
    assert rep.r_comp == pytest.approx(4 * math.exp(-(math.pi ** 2 / 4) / 0.01), rel=1e-6)
    with pytest.raises(OutOfRange):
        md.mu_inv(0.5, 0.5, 1.0, 1e-3)


def test_mu_range_and_out_of_range():
    lo, hi = md.mu_range(0.3, 0.4, 1.0)
    assert 0 < lo < hi < math.inf
    with pytest.raises(OutOfRange):
        md.mu_inv(0.3, 0.4, 1.0, hi * 1.01)
    with pytest.raises(OutOfRange):
        md.mu_inv(0.3, 0.4, 1.0, lo * 0.99)
    assert md.mu_range(0.5, 0.5, 1.0) == (0.0, math.inf)
    with pytest.raises(DomainError):
        md.mu_inv(0.5, 0.5, 1.0, -1.0)


@pytest.mark.parametrize("r", [0.1, 0.5, 0.9])
def test_phi_landen(r):
    # classical duplication: phi_2(r) = 2 sqrt(r)/(1+r)
    assert md.phi_K(0.5, 0.5, 1.0, 2.0, r) == pytest.approx(2 * math.sqrt(r) / (1 + r), abs=1e-12)


def test_phi_identity_and_domain():
    assert md.phi_K(0.4, 0.7, 1.1, 1.0, 0.3) == 0.3
    with pytest.raises(DomainError):
        md.phi_K(0.4, 0.7, 1.1, 0.0, 0.3)


@settings(max_examples=25, deadline=None)
@given(st.floats(0.05, 0.95), st.floats(1.1, 4.0))
def test_phi_composition(r, K):
    # phi_K(phi_{1/K}(r)) = r
    a, b, c = 0.4, 0.7, 1.1
    assert md.phi_K(a, b, c, K, md.phi_K(a, b, c, 1 / K, r)) == pytest.approx(r, abs=1e-10)


@pytest.mark.parametrize("triple", [(0.5, 0.5, 1.0), (0.5, 0.7, 1.1), (0.3, 0.9, 1.1)])
def test_identity_suite(triple):
    rep = md.identity_suite(*triple, (0.1, 0.3, 0.5, 0.7, 0.9))
    assert rep.passed, str(rep)


def test_scaled_mu():
    assert md.scaled_mu_check(0.8, 0.9, 1.0).passed
    rep = md.scaled_mu_check(0.7, 0.8, 1.2)
    # monotone, but the endpoint approach is slow for s = 0.3 and carries a note
    assert rep.checks[0].passed
    assert all("r^(2 min(s, 1))" in c.note for c in rep.checks[1:])
    with pytest.raises(PreconditionError):
        md.scaled_mu_check(0.5, 0.7, 0.6)
    with pytest.raises(PreconditionError):
        md.scaled_mu_check(0.3, 0.4, 1.0)
