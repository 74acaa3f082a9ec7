import math

import mpmath
import pytest
import scipy.special as sps
from hypothesis import given, settings
from hypothesis import strategies as st

from hecke_zeros.errors import NegativeArgument, NonpositiveArgument
from hecke_zeros.qseries import bernoulli
from hecke_zeros.specialfn import (
    bessel_i,
    bessel_j,
    kloosterman,
    kloosterman_brute,
    poincare_cminus,
    poincare_const,
    poincare_cplus,
    trunc_exp,
    whittaker_m_closed,
)

PRIMES_BELOW_100 = [p for p in range(2, 100) if all(p % d for d in range(2, int(p ** 0.5) + 1))]


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 240))
@settings(max_examples=150, deadline=None)
def test_kloosterman_matches_brute(m, n, c):
    assert abs(kloosterman(m, n, c).value - kloosterman_brute(m, n, c)) < 1e-9


@given(st.integers(-30, 30), st.integers(-30, 30), st.integers(1, 200))
@settings(max_examples=60, deadline=None)
def test_kloosterman_symmetric(m, n, c):
    assert abs(kloosterman(m, n, c).value - kloosterman(n, m, c).value) < 1e-9


@pytest.mark.parametrize("p", PRIMES_BELOW_100)
def test_weil_bound(p):
    assert abs(kloosterman_brute(1, 1, p)) <= 2 * math.sqrt(p) + 1e-12


@pytest.mark.parametrize("c", range(1, 51))
def test_kloosterman_zero_zero_is_totient(c):
    phi = sum(1 for v in range(1, c + 1) if math.gcd(v, c) == 1)
    assert round(kloosterman(0, 0, c).value) == phi


def test_ramanujan_sum():
    # K(0, n, c) is a Ramanujan sum: c_p(1) = -1 for prime p
    for p in (3, 5, 7, 11):
        assert abs(kloosterman(0, 1, p).value + 1) < 1e-12


@pytest.mark.parametrize("nu", [0, 1, 5, 11, 17])
@pytest.mark.parametrize("x", [1e-3, 0.5, 3.0, 12.0, 40.0, 150.0])
def test_bessel_i_against_scipy(nu, x):
    v = bessel_i(nu, x)
    ref = sps.iv(nu, x)
    assert abs(v.value - ref) <= 1e-13 * abs(ref) + 1e-300


@pytest.mark.parametrize("nu", [0, 1, 5, 11, 17])
@pytest.mark.parametrize("x", [1e-3, 0.5, 3.0, 12.0, 40.0, 80.0])
def test_bessel_j_against_scipy(nu, x):
    v = bessel_j(nu, x)
    ref = sps.jv(nu, x)
    assert abs(v.value - ref) <= 1e-12 * max(abs(ref), 1e-3)


@pytest.mark.parametrize("x", [0.3, 2.0, 9.0, 30.0])
@pytest.mark.parametrize("nu", [1, 6, 11])
def test_bessel_recurrences(nu, x):
    im, i0, ip = bessel_i(nu - 1, x), bessel_i(nu, x), bessel_i(nu + 1, x)
    res = abs(im.value - ip.value - 2 * nu / x * i0.value)
    assert res < 1e3 * (im.abs_err + ip.abs_err + 2 * nu / x * i0.abs_err)
    jm, j0, jp = bessel_j(nu - 1, x), bessel_j(nu, x), bessel_j(nu + 1, x)
    res = abs(jm.value + jp.value - 2 * nu / x * j0.value)
    assert res < 1e3 * (jm.abs_err + jp.abs_err + 2 * nu / x * j0.abs_err)


def test_bessel_domain():
    with pytest.raises(NegativeArgument):
        bessel_i(1, -1.0)
    with pytest.raises(NegativeArgument):
        bessel_j(1, -1.0)
    assert bessel_i(0, 0.0).value == 1.0
    assert bessel_j(3, 0.0).value == 0.0


def test_trunc_exp():
    assert trunc_exp(0, 5.0) == 1.0
    assert abs(trunc_exp(3, 2.0) - (1 + 2 + 2 + 8 / 6)) < 1e-15
    assert abs(trunc_exp(60, 3.0) - math.exp(3.0)) < 1e-12


@pytest.mark.parametrize("kappa", [0, 1, 5, 10])
@pytest.mark.parametrize("x", [0.01, 1.0, 10.0, 60.0])
def test_whittaker_against_mpmath(kappa, x):
    v = whittaker_m_closed(kappa, x)
    ref = float(mpmath.whitm(kappa, kappa + 0.5, x))
    assert abs(v.value - ref) <= 1e-12 * abs(ref)


@pytest.mark.parametrize("kappa", [0, 3, 10])
def test_whittaker_small_x(kappa):
    x = 1e-7
    assert abs(whittaker_m_closed(kappa, x).value / x ** (kappa + 1) - 1) < 1e-5


def test_whittaker_domain():
    with pytest.raises(NonpositiveArgument):
        whittaker_m_closed(1, 0.0)


def test_poincare_constant_matches_bernoulli():
    for k in (12, 16, 20):
        v = poincare_const(k, 1, 1000)
        assert abs(v.value - float(2 * k / bernoulli(k))) < 1e-8 * abs(v.value) + 1e-12


def test_delta_coefficient_over_factorial():
    # the q^1 coefficient of the weight -10 Poincare series is a_Delta(1)/11!
    v = poincare_cplus(12, 1, 1, 2000)
    assert abs(v.value - (-1842.8947)) < 1e-3


def test_minus_part_sign_and_size():
    v = poincare_cminus(12, 1, 1, 2000)
    assert math.isfinite(v.value) and v.abs_err >= 0


def test_argument_checks():
    for bad in [(12, 0, 1), (12, 1, 0)]:
        with pytest.raises(ValueError):
            poincare_cplus(*bad)
    with pytest.raises(ValueError):
        poincare_cplus(11, 1, 1)


def test_small_worked_values():
    assert abs(kloosterman(1, 1, 5).value - (2 + 2 * math.cos(4 * math.pi / 5))) < 1e-12
    assert abs(kloosterman(1, 1, 5).value - 0.381966) < 1e-6
    assert kloosterman(7, -3, 1).value == 1.0
    assert abs(bessel_i(1, 2.0).value - 1.590636855) < 1e-9
    assert trunc_exp(2, 1.0) == 2.5
    assert abs(trunc_exp(10, 1.0) - math.e) < 1e-7
    assert bessel_j(0, 0.0).value == 1.0


def test_bessel_leading_order():
    x = 1e-3
    assert abs(bessel_i(11, x).value / ((x / 2) ** 11 / math.factorial(11)) - 1) < 1e-6


@pytest.mark.parametrize("x", [0.1, 2.0, 30.0])
def test_whittaker_kappa_zero_is_sinh(x):
    assert whittaker_m_closed(0, x).value == pytest.approx(2 * math.sinh(x / 2), rel=1e-14)


def test_minus_part_single_term():
    # one term: 2 pi i^(2-k) K(-1,-1,1) J_11(4 pi), and i^(-10) = -1
    v = poincare_cminus(12, 1, 1, 1)
    assert v.value == pytest.approx(-2 * math.pi * sps.jv(11, 4 * math.pi), rel=1e-12)


def test_const_single_term():
    v = poincare_const(12, 1, 1)
    assert v.value == pytest.approx(-(2 * math.pi) ** 12 / math.factorial(11), rel=1e-14)


def test_plus_part_negative_for_delta():
    for n in (1, 2):
        assert poincare_cplus(12, 1, n, 200).value < 0
