import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hecke_zeros.errors import EmptyInput, OutOfRange
from hecke_zeros.arcbounds import j_on_arc
from hecke_zeros.modforms import faber
from hecke_zeros.roots import (
    IsolatingInterval,
    all_roots_simple,
    discrepancy,
    one_per_subinterval,
    refine_root,
    root_report,
    sturm_isolate,
    theta_pullback,
)
from hecke_zeros.rpoly import RPoly


def test_golden_endpoints():
    ivs = sturm_isolate(RPoly((0, -1728, 1)), 0, 1728)
    assert [(iv.lo, iv.hi) for iv in ivs] == [(0, 0), (1728, 1728)]


def test_no_real_roots():
    assert sturm_isolate(RPoly((1, 0, 1)), -100, 100) == []


def test_faber_j5_roots():
    _, J5 = faber(5, 1)
    assert len(sturm_isolate(J5, 0, 1728)) == 5
    assert all_roots_simple(J5)


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=7, unique=True))
@settings(max_examples=40, deadline=None)
def test_isolates_known_integer_roots(roots):
    P = RPoly.from_roots(roots)
    ivs = sturm_isolate(P, -30, 30)
    assert len(ivs) == len(roots)
    got = sorted(refine_root(P, iv, 1e-9) for iv in ivs)
    assert all(abs(a - b) < 1e-8 for a, b in zip(got, sorted(roots)))


@given(st.lists(st.fractions(-5, 5, max_denominator=9), min_size=1, max_size=5, unique=True))
@settings(max_examples=40, deadline=None)
def test_repeated_roots_counted_once(roots):
    P = RPoly.from_roots(roots + roots[:1])
    assert len(sturm_isolate(P, -5, 5)) == len(roots)
    assert not all_roots_simple(P)


def test_simplicity():
    assert not all_roots_simple(RPoly.from_roots([1, 1]))
    assert all_roots_simple(RPoly((0, -1728, 1)))


def test_refine_examples():
    assert abs(refine_root(RPoly((-2, 0, 1)), IsolatingInterval(Fraction(1), Fraction(2)), 1e-10) - math.sqrt(2)) < 1e-10
    assert refine_root(RPoly((0, 1)), IsolatingInterval(Fraction(-1), Fraction(1))) == 0
    assert refine_root(RPoly((-1728, 1)), IsolatingInterval(Fraction(0), Fraction(2000))) == 1728


def test_interval_order():
    with pytest.raises(ValueError):
        IsolatingInterval(Fraction(2), Fraction(1))


def test_pullback_endpoints():
    assert theta_pullback(1728) == math.pi / 2
    assert theta_pullback(0) == math.pi / 3
    with pytest.raises(OutOfRange):
        theta_pullback(-1)
    with pytest.raises(OutOfRange):
        theta_pullback(1729)


@pytest.mark.parametrize("x", [1.0, 100.0, 700.0, 1500.0, 1727.0])
def test_pullback_roundtrip(x):
    assert abs(j_on_arc(theta_pullback(x)) - x) < 1e-8


def test_pullback_monotone():
    ts = [theta_pullback(x) for x in range(0, 1729, 96)]
    assert all(a < b for a, b in zip(ts, ts[1:]))


def test_discrepancy_basics():
    N = 50
    lo, hi = math.pi / 3, math.pi / 2
    equi = [lo + (i + 0.5) / N * (hi - lo) for i in range(N)]
    assert discrepancy(equi) == pytest.approx(0.5 / N)
    left = [lo + i / N * (hi - lo) for i in range(N)]
    assert discrepancy(left) == pytest.approx(1 / N)
    assert discrepancy([1.2] * 10) >= 0.5
    with pytest.raises(EmptyInput):
        discrepancy([])


@pytest.mark.parametrize("n", range(2, 11))
def test_small_n_empirical(R, n):
    rep = root_report(R, n)
    assert rep.count_in_interval == rep.degree == n
    assert rep.all_simple


@pytest.mark.parametrize("n", [11, 15])
def test_one_per_subinterval(R, n):
    assert one_per_subinterval(R, n)


def test_report_formats(R):
    rep = root_report(R, 4)
    doc = rep.to_json()
    assert {"n", "degree", "count_in_interval", "all_simple", "discrepancy_theta"} <= set(doc)
    lines = rep.to_csv().splitlines()
    assert lines[0] == "n,root_index,x_lo,x_hi,x_refined,theta"
    assert len(lines) == 5
