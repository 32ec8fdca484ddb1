import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gelliptic import seriesmono as sm
from gelliptic.errors import DomainError, LengthError


def brute_t(a, b, n):
    return sum((n - k) * (a[n - k] * b[k] - a[k] * b[n - k]) for k in range(n + 1))


def test_t_sum_small():
    assert sm.t_sum([1, 2], [1, 1], 1) == 1.0
    assert sm.t_sum([1, 2, 3], [1, 2, 3], 2) == 0.0
    a, b = [0.3, 1.1, 2.0, 4.5], [1.0, 0.5, 0.7, 0.2]
    for n in range(4):
        assert sm.t_sum(a, b, n) == pytest.approx(brute_t(a, b, n))


def test_t_sum_errors():
    with pytest.raises(LengthError):
        sm.t_sum([1, 2], [1, 1], 3)
    with pytest.raises(DomainError):
        sm.t_sum([1, 2], [1, -1], 1)
    with pytest.raises(DomainError):
        sm.CoeffSeq((1.0, 0.0), positivity_required=True)


def test_ratio_trend():
    assert sm.ratio_trend([1, 2, 3], [1, 1, 1]) == "increasing"
    assert sm.ratio_trend([3, 2, 1], [1, 1, 1]) == "decreasing"
    assert sm.ratio_trend([2, 2, 2], [1, 1, 1]) == "constant"
    assert sm.ratio_trend([1, 3, 2], [1, 1, 1]) == "none"


def test_exponential_example():
    # sum (n+1) x^n/n! / e^x = 1 + x, increasing
    b = [1 / math.factorial(n) for n in range(20)]
    a = [(n + 1) * b[n] for n in range(20)]
    rep = sm.quotient_monotone_certificate(a, b, grid=np.linspace(0.01, 1.99, 100))
    assert rep.passed, str(rep)


def test_non_monotone_ratio_is_inconclusive():
    rep = sm.quotient_monotone_certificate([1, 3, 2], [1, 1, 1])
    assert not rep.passed
    assert "inconclusive" in rep.checks[0].note


def test_constant_ratio():
    assert sm.quotient_monotone_certificate([2, 2, 2], [1, 1, 1]).passed
    assert sm.poly_quotient_certificate([2, 4, 6], [1, 2, 3]).passed


def test_wronskian_matches_numpy_brute_force():
    f, g = np.array([1.0, 2.0, 5.0]), np.array([3.0, 1.0, 1.0])
    x = np.linspace(0, 2, 7)
    fp = np.polyval(np.polyder(f[::-1]), x)
    gp = np.polyval(np.polyder(g[::-1]), x)
    direct = np.polyval(g[::-1], x) * fp - np.polyval(f[::-1], x) * gp
    w = sm.wronskian_coeffs(f, g)
    assert len(w) == 3
    assert np.allclose(np.polynomial.polynomial.polyval(x, w), direct)


def _random_pair(rng, increasing):
    d = int(rng.integers(1, 11))
    g = rng.uniform(0.1, 2.0, d + 1)
    steps = np.cumsum(rng.uniform(0.01, 1.0, d + 1))
    ratio = steps if increasing else steps[-1] + 1 - steps
    return g * ratio, g


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.booleans())
def test_random_pairs_certified_and_sampled(seed, increasing):
    rng = np.random.default_rng(seed)
    f, g = _random_pair(rng, increasing)
    assert sm.quotient_monotone_certificate(f, g).passed
    assert sm.poly_quotient_certificate(f, g).passed
    # independent check: dense sampling of the quotient
    x = np.linspace(0.0, 3.0, 400)
    q = np.polynomial.polynomial.polyval(x, f) / np.polynomial.polynomial.polyval(x, g)
    d = np.diff(q)
    assert np.all(d > -1e-12) if increasing else np.all(d < 1e-12)


def test_decreasing_linear_quotient():
    # (1 + x/2)/(1 + x) decreases
    f, g = [1.0, 0.5], [1.0, 1.0]
    rep = sm.poly_quotient_certificate(f, g)
    assert rep.passed and rep.checks[0].value == "decreasing"


def test_length_mismatch():
    with pytest.raises(LengthError):
        sm.poly_quotient_certificate([1, 2, 3], [1, 2])
    with pytest.raises(LengthError):
        sm.quotient_monotone_certificate([1, 2], [1, 2], N=5)
