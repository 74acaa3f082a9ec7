"""Behaviour of H*_n(F) on the arc tau = e^{i theta}, pi/3 <= theta <= pi/2.

H*_n is evaluated through the exact polynomial, H*_n = P_n(F; j) / (Delta^b Etilde_{k-2}),
in mpmath at a working precision chosen from the size of P_n's coefficients.
The explicit bound formulas used to control the error term are here as well.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath

from .errors import DivisorNearZero, NotMonotone, TargetOutOfRange
from .heckepoly import (
    PI_2,
    PI_3,
    WeakEigenformSpec,
    expected_interior_zeros,
    hecke_polynomial,
    normalizer,
    predicted_endpoint_zeros,
)
from .modforms import jinv

THETA_LO = math.pi / 3
THETA_HI = math.pi / 2
Q_CONST = 1.008e8
R_CONST = 2.016e8
REALNESS_TOL = 1e-8
BISECT_TOL = 1e-12
_Q_MAX = math.exp(-math.pi * math.sqrt(3))  # largest |q| on the arc


def _check_theta(theta: float) -> None:
    if not (THETA_LO - 1e-15 <= theta <= THETA_HI + 1e-15):
        raise ValueError(f"theta = {theta} outside [pi/3, pi/2]")


def q_on_arc(theta, dps: int | None = None):
    """q = exp(2 pi i e^{i theta})."""
    if dps is None:
        tau = complex(math.cos(theta), math.sin(theta))
        return cmath.exp(2j * math.pi * tau)
    with mpmath.workdps(dps):
        tau = mpmath.expjpi(mpmath.mpf(theta) / mpmath.pi)
        return mpmath.exp(2j * mpmath.pi * tau)


def _series_terms_needed(dps: int) -> int:
    # coefficients of j grow like exp(4 pi sqrt(n)); stop once the tail is below 10^-dps
    N = 40
    while 4 * math.pi * math.sqrt(N) + N * math.log(_Q_MAX) > -dps * math.log(10) - 10:
        N += 5
    return N


class _SeriesEvaluator:
    """Precomputed mp coefficients of a QSeries for repeated evaluation."""

    def __init__(self, s, dps: int):
        self.valuation = s.valuation
        with mpmath.workdps(dps):
            self.coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in s.coeffs]
        self.dps = dps

    def __call__(self, q):
        with mpmath.workdps(self.dps):
            acc = mpmath.mpc(0)
            for c in reversed(self.coeffs):
                acc = acc * q + c
            return acc * q ** self.valuation


@lru_cache(maxsize=16)
def _j_only(N: int, dps: int) -> _SeriesEvaluator:
    return _SeriesEvaluator(jinv(N), dps)


@lru_cache(maxsize=1)
def _j_float_coeffs() -> tuple:
    j = jinv(48)
    return tuple(float(c) for c in j.coeffs)


def j_on_arc(theta: float) -> float:
    """j(e^{i theta}) (real on the arc) in double precision; |q| <= 0.0044 keeps this tame."""
    _check_theta(theta)
    q = q_on_arc(theta)
    acc = 0j
    for c in reversed(_j_float_coeffs()):
        acc = acc * q + c
    return (acc / q).real


@dataclass(frozen=True)
class ArcSample:
    theta: float
    j_val: float
    hstar: complex
    f_val: float
    gap: float
    rotated: float = 0.0


class ArcEvaluator:
    """Numeric H*_n(F; e^{i theta}) for one (spec, n)."""

    def __init__(self, spec: WeakEigenformSpec, n: int, N: int | None = None):
        self.spec = spec
        self.n = n
        self.mn = spec.m * n
        self.k = spec.k
        self.result = hecke_polynomial(spec, n)
        P = self.result.poly
        size = sum(abs(c) * 1728 ** i for i, c in enumerate(P.coeffs))
        digits = math.log10(float(size)) if size < 10 ** 300 else len(str(int(size)))
        self.dps = int(digits) + 30
        if N is None:
            N = _series_terms_needed(self.dps)
        self.N = N
        self._j = _SeriesEvaluator(jinv(N), self.dps)
        self._w = _SeriesEvaluator(normalizer(self.k - 2, N), self.dps)
        with mpmath.workdps(self.dps):
            self._P = [mpmath.mpf(c.numerator) / c.denominator for c in P.coeffs]
        self.Z = predicted_endpoint_zeros(self.k)

    def _poly(self, x):
        acc = mpmath.mpc(0)
        for c in reversed(self._P):
            acc = acc * x + c
        return acc

    def _at_tabulated_endpoint(self, theta: float) -> float | None:
        if PI_3 in self.Z and abs(theta - THETA_LO) < 1e-12:
            return THETA_LO + 1e-7
        if PI_2 in self.Z and abs(theta - THETA_HI) < 1e-12:
            return THETA_HI - 1e-7
        return None

    def values(self, theta: float):
        """(j, W, H*) as mp numbers, W = Delta^b Etilde_{k-2}."""
        _check_theta(theta)
        nudged = self._at_tabulated_endpoint(theta)
        t = theta if nudged is None else nudged
        with mpmath.workdps(self.dps):
            q = q_on_arc(t, self.dps)
            jv = self._j(q)
            w = self._w(q)
            if abs(w) < 1e-12:
                raise DivisorNearZero(f"|Delta^b Etilde| = {float(abs(w)):.3g} at theta = {theta}")
            return jv, w, self._poly(jv) / w

    def hstar(self, theta: float) -> complex:
        return complex(self.values(theta)[2])

    def rotated(self, theta: float) -> tuple[float, float]:
        """(real, imaginary) parts of e^{i(2-k) theta/2} H*; the second should vanish."""
        _, _, h = self.values(theta)
        with mpmath.workdps(self.dps):
            r = mpmath.expj((2 - self.k) * mpmath.mpf(theta) / 2) * h
            return float(mpmath.re(r)), float(mpmath.im(r))

    def sample(self, theta: float) -> ArcSample:
        jv, _, h = self.values(theta)
        with mpmath.workdps(self.dps):
            r = mpmath.expj((2 - self.k) * mpmath.mpf(theta) / 2) * h
            scaled = r * mpmath.exp(-2 * mpmath.pi * self.mn * mpmath.sin(theta))
            f = f_damped(self.mn, self.k, theta)
            gap = float(abs(scaled - f))
            return ArcSample(theta, float(mpmath.re(jv)), complex(h), f, gap, float(mpmath.re(r)))


@lru_cache(maxsize=32)
def evaluator(spec: WeakEigenformSpec, n: int) -> ArcEvaluator:
    return ArcEvaluator(spec, n)


def hstar_eval(spec: WeakEigenformSpec, n: int, theta: float, N: int | None = None) -> complex:
    ev = evaluator(spec, n) if N is None else ArcEvaluator(spec, n, N)
    return ev.hstar(theta)


def cosine_gap(spec: WeakEigenformSpec, n: int, theta: float) -> float:
    """|e^{i(2-k)theta/2} e^{-2 pi mn sin theta} H*_n - f_mn(theta)|."""
    return evaluator(spec, n).sample(theta).gap


# ---------------------------------------------------------------- damped cosine


def damping(l: int, k: int, theta: float) -> float:
    """1 - e^{-x} e_{k-2}(x) at x = 4 pi l sin theta, i.e. a Poisson(x) upper tail."""
    x = 4 * math.pi * l * math.sin(theta)
    if x <= 0:
        return 0.0
    logterm = lambda i: math.exp(-x + i * math.log(x) - math.lgamma(i + 1))  # noqa: E731
    if x < k:
        # the upper tail directly, free of cancellation
        terms = []
        i = k - 1
        while True:
            t = logterm(i)
            terms.append(t)
            if t < 1e-18 * terms[0] and i > x:
                break
            i += 1
        return min(1.0, math.fsum(terms))
    return max(0.0, 1.0 - math.fsum(logterm(i) for i in range(k - 1)))


def f_damped(l: int, k: int, theta: float) -> float:
    """f_l(theta) = 2 (1 - e^{-x} e_{k-2}(x)) cos((k-2) theta/2 + 2 pi l cos theta), x = 4 pi l sin theta."""
    return 2 * damping(l, k, theta) * math.cos(g_phase(l, k, theta))


def g_phase(mn: int, k: int, theta: float) -> float:
    return (k - 2) / 2 * theta + 2 * math.pi * mn * math.cos(theta)


def g_inverse(mn: int, k: int, target: float) -> float:
    """The theta in [pi/3, pi/2] with g_mn(theta) = target (g is decreasing there)."""
    if not math.pi * math.sqrt(3) * mn > (k - 2) / 2:
        raise NotMonotone(f"g is not decreasing on the arc for mn={mn}, k={k}")
    lo, hi = THETA_LO, THETA_HI
    g_lo, g_hi = g_phase(mn, k, lo), g_phase(mn, k, hi)
    slack = 1e-12 * max(1.0, abs(target))
    if not (g_hi - slack <= target <= g_lo + slack):
        raise TargetOutOfRange(f"target {target} outside [{g_hi}, {g_lo}]")
    while hi - lo > BISECT_TOL:
        mid = 0.5 * (lo + hi)
        if g_phase(mn, k, mid) > target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def subintervals(spec: WeakEigenformSpec, n: int) -> list[tuple[int, float, float]]:
    """(i, g^-1(pi(i+1)), g^-1(pi i)) for consecutive multiples of pi inside g's range."""
    mn, k = spec.m * n, spec.k
    d = k - 2
    first = math.ceil(d / 4)
    last = mn + d // 6 - 1
    out = []
    for i in range(first, last + 1):
        out.append((i, g_inverse(mn, k, math.pi * (i + 1)), g_inverse(mn, k, math.pi * i)))
    return out


# ---------------------------------------------------------------- constants and bounds


def c_constant(spec: WeakEigenformSpec) -> Fraction:
    """C_F = max(80 m^(k-1) sum |c(-l)|, 1) / 4 (exact)."""
    total = sum((abs(c) for c in spec.principal), Fraction(0))
    return max(80 * Fraction(spec.m) ** (spec.k - 1) * total, Fraction(1)) / 4


def threshold_holds(spec: WeakEigenformSpec, n: int) -> bool:
    """C_F n^(k-1) e^{-pi n sqrt(3)/2} < 1."""
    C = c_constant(spec)
    with mpmath.workdps(40):
        lhs = mpmath.log(mpmath.mpf(C.numerator) / C.denominator) + (spec.k - 1) * mpmath.log(n)
        return lhs - mpmath.pi * n * mpmath.sqrt(3) / 2 < 0


def min_valid_n(spec: WeakEigenformSpec) -> int:
    n = 7
    while not threshold_holds(spec, n):
        n += 1
    return n


def _exp(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


def q_bound(l: int, k: int, theta: float) -> float:
    s = math.sin(theta)
    return _exp(2 * math.pi * l * s) + 8 * l * _exp(math.pi * l * s) + Q_CONST * float(l) ** (k - 1)


def p_bound(l: int, k: int, theta: float) -> float:
    return 4 * _exp(2 * math.pi * l * math.sin(theta)) + Q_CONST * float(l) ** (k - 1)


def r_bound(spec: WeakEigenformSpec, n: int, theta: float) -> float:
    m, k = spec.m, spec.k
    total = float(sum(abs(c) for c in spec.principal))
    s = math.sin(theta)
    return (
        8 * float(m) ** (k - 2) * float(n) ** (k / 2) * _exp(math.pi * (2 * m - 1) * n * s)
        + R_CONST * float(m * n) ** (k - 1)
    ) * total


def scaled_error_bound(spec: WeakEigenformSpec, n: int, theta: float) -> float:
    """e^{-2 pi mn sin theta} (q_bound(mn) + r_bound), the right side of the gap estimate."""
    mn = spec.m * n
    s = math.sin(theta)
    with mpmath.workdps(30):
        e = mpmath.exp(-2 * mpmath.pi * mn * s)
        return float(e * (mpmath.mpf(q_bound(mn, spec.k, theta)) + mpmath.mpf(r_bound(spec, n, theta))))


def epstein_partial_sum(radius: int = 200, power: int = 6) -> float:
    """sum of (c^2 + cd + d^2)^-power over nonzero (c, d) with max(|c|,|d|) <= radius."""
    terms = []
    for c in range(-radius, radius + 1):
        for d in range(-radius, radius + 1):
            if c == 0 and d == 0:
                continue
            terms.append(1.0 / (c * c + c * d + d * d) ** power)
    terms.sort()
    return math.fsum(terms)


def stirling_ratio(k: int) -> float:
    """(4 pi)^(k-1) / Gamma(k)."""
    return math.exp((k - 1) * math.log(4 * math.pi) - math.lgamma(k))


# ---------------------------------------------------------------- reports


def grid(points: int = 200) -> list[float]:
    """Midpoint grid on (pi/3, pi/2); never touches the endpoints."""
    h = (THETA_HI - THETA_LO) / points
    return [THETA_LO + (i + 0.5) * h for i in range(points)]


@dataclass
class BoundReport:
    C_F: Fraction
    n_min: int
    n: int
    per_theta: list = field(default_factory=list)

    @property
    def max_gap(self) -> float:
        return max((row["lhs_gap"] for row in self.per_theta), default=0.0)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "C_F": float(self.C_F),
            "C_F_exact": f"{self.C_F.numerator}/{self.C_F.denominator}" if self.C_F.denominator != 1 else str(self.C_F.numerator),
            "n_min": self.n_min,
            "max_gap": self.max_gap,
            "per_theta": self.per_theta,
        }


def bound_report(spec: WeakEigenformSpec, n: int, points: int = 200) -> BoundReport:
    ev = evaluator(spec, n)
    mn, k = spec.m * n, spec.k
    rep = BoundReport(c_constant(spec), min_valid_n(spec), n)
    for theta in grid(points):
        smp = ev.sample(theta)
        rep.per_theta.append(
            {
                "theta": theta,
                "j": smp.j_val,
                "re_hstar": smp.rotated,
                "f": smp.f_val,
                "qbound": q_bound(mn, k, theta),
                "pbound": p_bound(mn, k, theta),
                "rbound": r_bound(spec, n, theta),
                "scaled_bound": scaled_error_bound(spec, n, theta),
                "lhs_gap": smp.gap,
            }
        )
    return rep


def verify_sign_changes(spec: WeakEigenformSpec, n: int) -> dict:
    """Count sign changes of Re(e^{i(2-k)theta/2} H*) across the cosine subintervals.

    Below the threshold n the count is informational only.
    """
    ev = evaluator(spec, n)
    expected = expected_interior_zeros(spec, n)
    found = 0
    intervals = []
    for i, lo, hi in subintervals(spec, n):
        s_lo = ev.rotated(lo)[0]
        s_hi = ev.rotated(hi)[0]
        changed = (s_lo > 0) != (s_hi > 0) and s_lo != 0 and s_hi != 0
        found += changed
        intervals.append({"i": i, "theta_lo": lo, "theta_hi": hi, "sign_lo": _sgn(s_lo), "sign_hi": _sgn(s_hi), "changed": changed})
    return {"expected": expected, "found": found, "intervals": intervals}


def _sgn(x: float) -> int:
    return (x > 0) - (x < 0)
