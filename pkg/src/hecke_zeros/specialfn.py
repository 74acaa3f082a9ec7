"""Kloosterman sums, Bessel and Whittaker functions, Maass-Poincare coefficients.

Values from truncated series come back as :class:`Real`, a float paired with an
absolute error estimate. Series over c are summed in ascending c with
``math.fsum`` so results do not depend on scheduling.
"""
from __future__ import annotations

import math
from functools import lru_cache
from typing import NamedTuple

import mpmath
import numpy as np

from .errors import NegativeArgument, NonpositiveArgument

EPS = 2.0 ** -52
DEFAULT_CMAX = 10_000


class Real(NamedTuple):
    value: float
    abs_err: float = 0.0

    def __float__(self):
        return float(self.value)

    def to_json(self) -> dict:
        return {"value": self.value, "abs_err": self.abs_err}


# ---------------------------------------------------------------- Kloosterman


@lru_cache(maxsize=None)
def _totients(limit: int) -> np.ndarray:
    phi = np.arange(limit + 1, dtype=np.int64)
    for p in range(2, limit + 1):
        if phi[p] == p:
            phi[p::p] -= phi[p::p] // p
    return phi


def _phi(c: int) -> int:
    lim = 1 << max(10, c.bit_length())
    return int(_totients(lim)[c])


def _unit_inverses(c: int) -> tuple[np.ndarray, np.ndarray]:
    """Units 0 < v < c/2 mod c and their inverses, as v^(phi(c)-1) mod c."""
    dt = np.int32 if c < 46_000 else np.int64
    v = np.arange(1, (c + 1) // 2, dtype=dt)
    v = v[np.gcd(v, dt(c)) == 1]
    e = _phi(c) - 1
    result = np.ones_like(v)
    base = v.copy()
    cc = dt(c)
    while e:
        if e & 1:
            result = (result * base) % cc
        e >>= 1
        if e:
            base = (base * base) % cc
    return v, result


def kloosterman(m: int, n: int, c: int) -> Real:
    """K(m, n, c) = sum over units v mod c of cos(2 pi (m v^-1 + n v) / c).

    v and c - v contribute equal cosines, so only v < c/2 is enumerated.
    """
    if c < 1:
        raise ValueError("modulus c must be >= 1")
    if c == 1:
        return Real(1.0, 0.0)
    if c == 2:
        return Real(math.cos(math.pi * ((m + n) % 2)), 0.0)
    v, vinv = _unit_inverses(c)
    r = ((m % c) * vinv.astype(np.int64) + (n % c) * v.astype(np.int64)) % c
    vals = np.cos((2.0 * np.pi / c) * r)
    return Real(2.0 * math.fsum(vals.tolist()), 8 * EPS * len(vals))


def kloosterman_brute(m: int, n: int, c: int) -> float:
    """Direct loop with pow(v, -1, c); slow, used as a cross-check."""
    if c == 1:
        return 1.0
    return math.fsum(
        math.cos(2 * math.pi * ((m * pow(v, -1, c) + n * v) % c) / c)
        for v in range(1, c)
        if math.gcd(v, c) == 1
    )


# ---------------------------------------------------------------- Bessel


def _bessel_series(nu: int, x: float, sign: int) -> tuple[list[float], float]:
    half = x / 2.0
    t = half ** nu / math.factorial(nu)
    terms = [t]
    q = sign * half * half
    m = 0
    while True:
        m += 1
        t = t * q / (m * (m + nu))
        terms.append(t)
        if abs(t) <= 1e-18 * abs(terms[0]) and m > half:
            break
        if t == 0.0:
            break
    return terms, math.fsum(terms)


def bessel_i(nu: int, x: float) -> Real:
    """I_nu(x) from its power series (all terms positive, so no cancellation)."""
    if x < 0:
        raise NegativeArgument(f"x = {x} < 0")
    if nu < 0:
        raise ValueError("order must be >= 0")
    if x == 0:
        return Real(1.0 if nu == 0 else 0.0, 0.0)
    if x > 700:
        with mpmath.workdps(30):
            val = mpmath.besseli(nu, x)
        return Real(float(val), abs(float(val)) * 1e-15)
    terms, s = _bessel_series(nu, x, +1)
    return Real(s, (len(terms) + 2) * EPS * abs(s))


def bessel_j(nu: int, x: float) -> Real:
    """J_nu(x) from its power series; falls back to extra-precision summation under cancellation."""
    if x < 0:
        raise NegativeArgument(f"x = {x} < 0")
    if nu < 0:
        raise ValueError("order must be >= 0")
    if x == 0:
        return Real(1.0 if nu == 0 else 0.0, 0.0)
    terms, s = _bessel_series(nu, x, -1)
    err = (len(terms) + 2) * EPS * max(abs(t) for t in terms)
    if err <= 1e-10 * max(abs(s), 1e-300):
        return Real(s, err)
    # heavy cancellation: redo the same series with enough guard digits. The
    # float sum is garbage here, so size the guard from the largest term alone.
    big = max(abs(t) for t in terms)
    guard = int(max(0.0, math.log10(big))) + 30
    with mpmath.workdps(guard):
        xm = mpmath.mpf(x) / 2
        t = xm ** nu / mpmath.factorial(nu)
        acc = t
        m = 0
        while True:
            m += 1
            t = -t * xm * xm / (m * (m + nu))
            acc += t
            if abs(t) < mpmath.mpf(10) ** (-guard) * big and m > x:
                break
        val = float(acc)
    return Real(val, abs(val) * 4 * EPS + 1e-300)


# ---------------------------------------------------------------- elementary


def trunc_exp(j: int, x: float) -> float:
    """e_j(x) = sum_{n<=j} x^n / n!."""
    if j < 0:
        raise ValueError("j must be >= 0")
    t = 1.0
    terms = [t]
    for n in range(1, j + 1):
        t = t * x / n
        terms.append(t)
    return math.fsum(terms)


def whittaker_m_closed(kappa: int, x: float) -> Real:
    """M_{kappa, kappa+1/2}(x) = (2 kappa + 1)! (e^{x/2} - e^{-x/2} e_{2 kappa}(x)) / x^kappa.

    The numerator is summed as e^{-x/2} * sum_{n > 2 kappa} x^n / n!, which is
    free of cancellation for every x > 0.
    """
    if x <= 0:
        raise NonpositiveArgument(f"x = {x} <= 0")
    if kappa < 0:
        raise ValueError("kappa must be >= 0")
    n0 = 2 * kappa + 1
    # x^n0 / n0! * (2kappa+1)! / x^kappa = x^(kappa+1); accumulate the ratio tail
    t = 1.0
    terms = [t]
    n = n0
    while True:
        n += 1
        t = t * x / n
        terms.append(t)
        if t < 1e-18 * terms[0] and n > x:
            break
    tail = math.fsum(terms)
    logval = (kappa + 1) * math.log(x) - x / 2 + math.log(tail)
    val = math.exp(logval)
    return Real(val, val * (len(terms) + 8) * EPS)


# ---------------------------------------------------------------- Poincare series


def _i_power_sign(k: int) -> int:
    """i^(2-k) for even k."""
    if k % 2:
        raise ValueError("odd weight is not supported")
    return -1 if ((2 - k) // 2) % 2 else 1


def _c_sum(kloos_m: int, kloos_n: int, x0: float, order: int, cmax: int, bessel) -> tuple[float, float]:
    """sum_{c<=cmax} K(kloos_m, kloos_n, c)/c * Bessel_order(x0/c), plus error estimate."""
    terms = []
    err = 0.0
    for c in range(1, cmax + 1):
        K = kloosterman(kloos_m, kloos_n, c)
        B = bessel(order, x0 / c)
        term = K.value / c * B.value
        terms.append(term)
        err += (K.abs_err * abs(B.value) + abs(K.value) * B.abs_err) / c
    s = math.fsum(terms)
    tail = abs(terms[-1]) * cmax
    return s, err + tail + EPS * len(terms) * max(abs(s), 1e-300)


def poincare_cplus(k: int, l: int, n: int, cmax: int = DEFAULT_CMAX) -> Real:
    """q^n coefficient of the holomorphic part of the weight 2-k Maass-Poincare series with principal part q^{-l}.

    2 pi i^(2-k) (l/n)^((k-1)/2) sum_c K(-l, n, c)/c I_{k-1}(4 pi sqrt(l n)/c).
    ``k = 2`` gives the weight-0 case.
    """
    if l < 1 or n < 1 or cmax < 1:
        raise ValueError("l, n, cmax must be >= 1")
    sgn = _i_power_sign(k)
    pref = 2 * math.pi * sgn * (l / n) ** ((k - 1) / 2)
    s, err = _c_sum(-l, n, 4 * math.pi * math.sqrt(l * n), k - 1, cmax, bessel_i)
    return Real(pref * s, abs(pref) * err)


def poincare_cminus(k: int, l: int, n: int, cmax: int = DEFAULT_CMAX) -> Real:
    """Coefficient c^-(-n) of the nonholomorphic part: same shape with K(-l, -n, c) and J_{k-1}."""
    if l < 1 or n < 1 or cmax < 1:
        raise ValueError("l, n, cmax must be >= 1")
    sgn = _i_power_sign(k)
    pref = 2 * math.pi * sgn * (l / n) ** ((k - 1) / 2)
    s, err = _c_sum(-l, -n, 4 * math.pi * math.sqrt(l * n), k - 1, cmax, bessel_j)
    return Real(pref * s, abs(pref) * err)


def poincare_const(k: int, l: int, cmax: int = DEFAULT_CMAX) -> Real:
    """Constant term -((2 pi i)^k l^(k-1) / Gamma(k)) sum_c K(-l, 0, c) / c^k."""
    if l < 1 or cmax < 1:
        raise ValueError("l, cmax must be >= 1")
    if k % 2:
        raise ValueError("odd weight is not supported")
    sgn = -1 if (k // 2) % 2 else 1
    pref = -sgn * (2 * math.pi) ** k * l ** (k - 1) / math.gamma(k)
    terms = []
    err = 0.0
    for c in range(1, cmax + 1):
        K = kloosterman(-l, 0, c)
        terms.append(K.value / c ** k)
        err += K.abs_err / c ** k
    s = math.fsum(terms)
    err += abs(terms[-1]) * cmax + EPS * len(terms) * abs(s)
    return Real(pref * s, abs(pref) * err)


def mock_delta_coeff(n: int, cmax: int = DEFAULT_CMAX) -> Real:
    """a_Delta(n) = -2 pi Gamma(12) n^(-11/2) sum_c K(-1, n, c)/c I_11(4 pi sqrt(n)/c)."""
    if n < 1 or cmax < 1:
        raise ValueError("n, cmax must be >= 1")
    pref = -2 * math.pi * math.factorial(11) * n ** -5.5
    s, err = _c_sum(-1, n, 4 * math.pi * math.sqrt(n), 11, cmax, bessel_i)
    return Real(pref * s, abs(pref) * err)
