"""Truncated Laurent series in q with exact rational coefficients.

A :class:`QSeries` knows its coefficients for exponents ``valuation..precision``.
Anything above ``precision`` is unknown (not zero), and every operation
propagates that pessimistically.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

import mpmath

from .errors import (
    DivergentEvaluation,
    InsufficientPrecision,
    OddIndex,
    ZeroLeadingCoefficient,
)

Rational = Fraction


def rat(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot make an exact rational from {type(x).__name__}")


def rat_to_str(x: Fraction) -> str:
    x = rat(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _common_denominator(cs) -> int:
    d = 1
    for c in cs:
        d = math.lcm(d, c.denominator)
    return d


def _convolve_int(a: list[int], b: list[int], length: int) -> list[int]:
    out = [0] * length
    for i, x in enumerate(a):
        if not x or i >= length:
            continue
        lim = min(len(b), length - i)
        for j in range(lim):
            y = b[j]
            if y:
                out[i + j] += x * y
    return out


@dataclass(frozen=True)
class QSeries:
    """sum_{e=valuation}^{precision} coeffs[e - valuation] q^e + O(q^{precision+1}).

    Leading zeros are stripped on construction, so ``valuation`` is the true
    order whenever some known coefficient is nonzero. The zero series carries
    ``valuation == precision + 1`` and no coefficients.
    """

    valuation: int
    coeffs: tuple
    precision: int

    def __post_init__(self):
        cs = [rat(c) for c in self.coeffs]
        v, p = int(self.valuation), int(self.precision)
        if len(cs) != p - v + 1:
            if len(cs) > p - v + 1:
                raise ValueError("more coefficients than the precision allows")
            raise ValueError("coefficient list shorter than valuation..precision")
        k = 0
        while k < len(cs) and cs[k] == 0:
            k += 1
        object.__setattr__(self, "coeffs", tuple(cs[k:]))
        object.__setattr__(self, "valuation", v + k)
        object.__setattr__(self, "precision", p)

    # construction helpers

    @classmethod
    def from_list(cls, coeffs: Iterable, valuation: int = 0, precision: int | None = None) -> QSeries:
        cs = [rat(c) for c in coeffs]
        if precision is None:
            precision = valuation + len(cs) - 1
        n = precision - valuation + 1
        if n < 0:
            n = 0
            valuation = precision + 1
        cs = (cs + [Fraction(0)] * n)[:n]
        return cls(valuation, tuple(cs), precision)

    @classmethod
    def from_dict(cls, terms: Mapping[int, object], precision: int) -> QSeries:
        exps = [e for e in terms if e <= precision]
        v = min(exps) if exps else precision + 1
        cs = [Fraction(0)] * (precision - v + 1)
        for e in exps:
            cs[e - v] += rat(terms[e])
        return cls(v, tuple(cs), precision)

    @classmethod
    def one(cls, precision: int) -> QSeries:
        return cls.monomial(0, 1, precision)

    @classmethod
    def monomial(cls, e: int, c, precision: int) -> QSeries:
        return cls.from_dict({e: c}, precision)

    # access

    def __getitem__(self, e: int) -> Fraction:
        if e > self.precision:
            raise InsufficientPrecision(f"coefficient of q^{e} unknown (precision {self.precision})")
        if e < self.valuation:
            return Fraction(0)
        return self.coeffs[e - self.valuation]

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> dict[int, Fraction]:
        return {self.valuation + i: c for i, c in enumerate(self.coeffs) if c}

    def truncate(self, precision: int) -> QSeries:
        if precision > self.precision:
            raise InsufficientPrecision(f"cannot extend precision {self.precision} to {precision}")
        return QSeries.from_dict(self.terms(), precision)

    def shift(self, s: int) -> QSeries:
        """Multiply by q^s."""
        return QSeries(self.valuation + s, self.coeffs, self.precision + s)

    def principal_part(self) -> dict[int, Fraction]:
        return {e: c for e, c in self.terms().items() if e < 0}

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, QSeries):
            other = QSeries.monomial(0, rat(other), self.precision)
        p = min(self.precision, other.precision)
        terms = dict()
        for src in (self, other):
            for e, c in src.terms().items():
                if e <= p:
                    terms[e] = terms.get(e, 0) + c
        return QSeries.from_dict(terms, p)

    __radd__ = __add__

    def __neg__(self):
        return QSeries(self.valuation, tuple(-c for c in self.coeffs), self.precision)

    def __sub__(self, other):
        return self + (-other if isinstance(other, QSeries) else -rat(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> QSeries:
        c = rat(c)
        return QSeries(self.valuation, tuple(c * x for x in self.coeffs), self.precision)

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return self.scale(other)
        return series_mul(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        return series_pow(self, e)

    def inverse(self) -> QSeries:
        return series_inv(self)

    # serialization

    def to_json(self) -> dict:
        return {
            "valuation": self.valuation,
            "precision": self.precision,
            "coeffs": [rat_to_str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj) -> QSeries:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(int(obj["valuation"]), tuple(rat(c) for c in obj["coeffs"]), int(obj["precision"]))

    def __repr__(self):
        shown = list(self.terms().items())[:6]
        body = " + ".join(f"({rat_to_str(c)})q^{e}" for e, c in shown) or "0"
        return f"QSeries({body} + ... + O(q^{self.precision + 1}))"


def series_add(a: QSeries, b: QSeries) -> QSeries:
    return a + b


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product; the result is known up to the first exponent touched by an unknown term."""
    p = min(a.valuation + b.precision, b.valuation + a.precision)
    v = a.valuation + b.valuation
    if a.is_zero() or b.is_zero() or p < v:
        return QSeries.from_list([], valuation=v, precision=p)
    da, db = _common_denominator(a.coeffs), _common_denominator(b.coeffs)
    ia = [c.numerator * (da // c.denominator) for c in a.coeffs]
    ib = [c.numerator * (db // c.denominator) for c in b.coeffs]
    prod = _convolve_int(ia, ib, p - v + 1)
    den = da * db
    return QSeries(v, tuple(Fraction(x, den) for x in prod), p)


def series_pow(a: QSeries, e: int) -> QSeries:
    """a**e by repeated squaring; a**0 is 1 to the relative precision of a."""
    if e < 0:
        raise ValueError("negative exponent; use series_inv")
    result = QSeries.one(a.precision - a.valuation) if not a.is_zero() else QSeries.one(0)
    base = a
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


def series_inv(a: QSeries) -> QSeries:
    if a.is_zero():
        raise ZeroLeadingCoefficient("leading coefficient unknown or zero; series not invertible")
    v = a.valuation
    rel = a.precision - v
    c = list(a.coeffs)
    a0 = c[0]
    b = [Fraction(1) / a0]
    for i in range(1, rel + 1):
        s = sum((c[j] * b[i - j] for j in range(1, i + 1) if c[j]), Fraction(0))
        b.append(-s / a0)
    return QSeries(-v, tuple(b), -v + rel)


@lru_cache(maxsize=None)
def _bernoulli_table(kmax: int) -> tuple:
    # B_0..B_kmax from sum_{j<=m} C(m+1, j) B_j = 0
    B = [Fraction(1)]
    for m in range(1, kmax + 1):
        s = sum((math.comb(m + 1, j) * B[j] for j in range(m)), Fraction(0))
        B.append(-s / (m + 1))
    return tuple(B)


def bernoulli(k: int) -> Fraction:
    """Exact Bernoulli number B_k (with B_1 = -1/2)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k % 2 and k > 1:
        raise OddIndex(f"B_{k} requested; odd indices > 1 are not supported")
    return _bernoulli_table((k // 64 + 1) * 64)[k]


def series_eval_numeric(a: QSeries, q, dps: int | None = None):
    """Evaluate the truncated series at a complex q with |q| < 1.

    Returns ``(value, tail)`` where ``tail`` is max|c| * |q|^(precision+1) / (1 - |q|).
    With ``dps`` the evaluation runs in mpmath at that many digits and the
    value is an ``mpmath.mpc``; otherwise it is a Python complex.
    """
    if dps is None:
        qc = complex(q)
        r = abs(qc)
        if r >= 1:
            raise DivergentEvaluation(f"|q| = {r} >= 1")
        acc = 0j
        for c in reversed(a.coeffs):
            acc = acc * qc + float(c)
        value = acc * qc ** a.valuation if a.coeffs else 0j
        cmax = max((abs(float(c)) for c in a.coeffs), default=0.0)
        tail = cmax * r ** (a.precision + 1) / (1 - r)
        return value, tail
    with mpmath.workdps(dps):
        qm = mpmath.mpc(q)
        r = abs(qm)
        if r >= 1:
            raise DivergentEvaluation(f"|q| = {r} >= 1")
        acc = mpmath.mpc(0)
        for c in reversed(a.coeffs):
            acc = acc * qm + mpmath.mpf(c.numerator) / c.denominator
        value = acc * qm ** a.valuation if a.coeffs else mpmath.mpc(0)
        cmax = max((abs(mpmath.mpf(c.numerator) / c.denominator) for c in a.coeffs), default=mpmath.mpf(0))
        tail = cmax * r ** (a.precision + 1) / (1 - r)
        return +value, float(tail)
