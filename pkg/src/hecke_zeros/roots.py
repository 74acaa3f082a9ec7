"""Real-root isolation over Q and the theta-side diagnostics for P_n(F; x)."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .arcbounds import THETA_HI, THETA_LO, j_on_arc, subintervals
from .errors import EmptyInput, OutOfRange
from .heckepoly import WeakEigenformSpec, hecke_polynomial, predicted_endpoint_zeros
from .qseries import rat, rat_to_str
from .rpoly import RPoly


@dataclass(frozen=True)
class IsolatingInterval:
    """(lo, hi] holding exactly one root; lo == hi marks an exact rational root."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("lo must not exceed hi")

    @property
    def exact(self) -> bool:
        return self.lo == self.hi


def sturm_chain(P: RPoly) -> list[RPoly]:
    chain = [P.primitive(), P.derivative().primitive()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        r = chain[-2] % chain[-1]
        if r.is_zero():
            break
        chain.append((-r).primitive())
    return chain


def _sign_changes(chain: list[RPoly], x: Fraction) -> int:
    signs = [p.sign_at(x.numerator, x.denominator) for p in chain]
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count(chain, a: Fraction, b: Fraction) -> int:
    """Distinct roots in (a, b]."""
    return _sign_changes(chain, a) - _sign_changes(chain, b)


def _squarefree(P: RPoly) -> RPoly:
    if P.degree <= 0:
        return P
    g = P.gcd(P.derivative())
    return P // g if g.degree > 0 else P


def sturm_isolate(P: RPoly, lo, hi) -> list[IsolatingInterval]:
    """Isolating intervals for the distinct real roots of P in [lo, hi], in increasing order."""
    if P.is_zero():
        raise ValueError("zero polynomial has no isolated roots")
    lo, hi = rat(lo), rat(hi)
    if lo > hi:
        raise ValueError("lo must not exceed hi")
    Q = _squarefree(P)
    if Q.degree <= 0:
        return []
    chain = sturm_chain(Q)
    out: list[IsolatingInterval] = []
    if Q(lo) == 0:
        out.append(IsolatingInterval(lo, lo))
    stack = [(lo, hi)]
    found = []
    while stack:
        a, b = stack.pop()
        c = _count(chain, a, b)
        if c == 0:
            continue
        if c == 1:
            if Q(b) == 0:
                found.append(IsolatingInterval(b, b))
            else:
                found.append(IsolatingInterval(a, b))
            continue
        # split at a non-root so every root stays inside exactly one half-open piece
        mid = (a + b) / 2
        step = 3
        while Q(mid) == 0:
            mid = a + (b - a) / step
            step += 1
        stack.append((a, mid))
        stack.append((mid, b))
    out.extend(sorted(found, key=lambda iv: iv.lo))
    return out


def count_roots(P: RPoly, lo, hi) -> int:
    return len(sturm_isolate(P, lo, hi))


def all_roots_simple(P: RPoly) -> bool:
    if P.is_zero():
        raise ValueError("zero polynomial")
    return P.gcd(P.derivative()).degree <= 0


def refine_root(P: RPoly, iv: IsolatingInterval, tol: float = 1e-12, squarefree: bool = False) -> float:
    """Bisect an isolating interval (in exact rationals) down to width tol.

    Pass ``squarefree=True`` when P is already square-free to skip the gcd.
    """
    if iv.exact:
        return float(iv.lo)
    a, b = iv.lo, iv.hi
    if not squarefree:
        P = _squarefree(P)
    if P.degree == 1:
        return float(-P.coeffs[0] / P.coeffs[1])
    sb = P.sign_at(b.numerator, b.denominator)
    if sb == 0:
        return float(b)
    # a may itself be a root (e.g. 0), so orient by the right end
    sa = -sb
    t = Fraction(tol)
    while b - a > t:
        m = (a + b) / 2
        sm = P.sign_at(m.numerator, m.denominator)
        if sm == 0:
            return float(m)
        if sm == sa:
            a = m
        else:
            b = m
    return float((a + b) / 2)


def theta_pullback(x: float, tol: float = 1e-13) -> float:
    """The theta in [pi/3, pi/2] with j(e^{i theta}) = x; j increases with theta on the arc."""
    x = float(x)
    if not (0 <= x <= 1728):
        raise OutOfRange(f"x = {x} outside [0, 1728]")
    if x == 0:
        return THETA_LO
    if x == 1728:
        return THETA_HI
    lo, hi = THETA_LO, THETA_HI
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if j_on_arc(mid) < x:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _star(points: list[float]) -> float:
    xs = sorted(points)
    N = len(xs)
    return max(max((i + 1) / N - x, x - i / N) for i, x in enumerate(xs))


def discrepancy(thetas) -> float:
    """Star discrepancy of (theta - pi/3)/(pi/6) against the uniform law on [0, 1]."""
    thetas = list(thetas)
    if not thetas:
        raise EmptyInput("no points")
    return _star([(t - THETA_LO) / (THETA_HI - THETA_LO) for t in thetas])


def discrepancy_x(xs) -> float:
    """Same statistic in the x = j coordinate on [0, 1728]; reported, not contracted."""
    xs = list(xs)
    if not xs:
        raise EmptyInput("no points")
    return _star([x / 1728 for x in xs])


@dataclass
class RootReport:
    n: int
    degree: int
    intervals: list
    refined: list
    thetas: list
    all_simple: bool

    @property
    def count_in_interval(self) -> int:
        return len(self.intervals)

    @property
    def discrepancy_theta(self) -> float:
        return discrepancy(self.thetas) if self.thetas else float("nan")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "degree": self.degree,
            "count_in_interval": self.count_in_interval,
            "all_simple": self.all_simple,
            "discrepancy_theta": self.discrepancy_theta,
            "discrepancy_x": discrepancy_x(self.refined) if self.refined else float("nan"),
        }

    def csv_rows(self) -> list[list]:
        return [
            [self.n, i, rat_to_str(iv.lo), rat_to_str(iv.hi), repr(x), repr(t)]
            for i, (iv, x, t) in enumerate(zip(self.intervals, self.refined, self.thetas))
        ]

    def to_csv(self, header: bool = True) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow(["n", "root_index", "x_lo", "x_hi", "x_refined", "theta"])
        w.writerows(self.csv_rows())
        return buf.getvalue()


def root_report(spec: WeakEigenformSpec, n: int) -> RootReport:
    P = hecke_polynomial(spec, n).poly
    ivs = sturm_isolate(P, 0, 1728)
    Q = _squarefree(P)
    xs = [refine_root(Q, iv, squarefree=True) for iv in ivs]
    ts = [theta_pullback(min(max(x, 0.0), 1728.0)) for x in xs]
    return RootReport(n, P.degree, ivs, xs, ts, Q.degree == P.degree)


def one_per_subinterval(spec: WeakEigenformSpec, n: int, report: RootReport | None = None) -> bool:
    """Every cosine subinterval holds exactly one root pullback, the endpoint roots are where
    the tabulated endpoint zeros say, and nothing else is left over."""
    rep = report or root_report(spec, n)
    Z = predicted_endpoint_zeros(spec.k)
    interior = []
    endpoints = set()
    for iv, t in zip(rep.intervals, rep.thetas):
        if iv.exact and iv.lo == 0:
            endpoints.add("pi/3")
        elif iv.exact and iv.lo == 1728:
            endpoints.add("pi/2")
        else:
            interior.append(t)
    if endpoints != set(Z):
        return False
    subs = subintervals(spec, n)
    for _, a, b in subs:
        if sum(1 for t in interior if a < t < b) != 1:
            return False
    return len(interior) == len(subs)
