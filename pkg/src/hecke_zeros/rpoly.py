"""Univariate polynomials over Q (coefficient list, ascending degree)."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .qseries import rat, rat_to_str


@dataclass(frozen=True)
class RPoly:
    coeffs: tuple

    def __post_init__(self):
        cs = [rat(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_list(cls, coeffs) -> RPoly:
        return cls(tuple(coeffs))

    @classmethod
    def from_roots(cls, roots) -> RPoly:
        p = cls((1,))
        for r in roots:
            p = p * cls((-rat(r), 1))
        return p

    @classmethod
    def x(cls) -> RPoly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_monic(self) -> bool:
        return self.leading == 1

    def __call__(self, x):
        """Horner evaluation; exact for ints/Fractions, otherwise in the type of ``x``."""
        if isinstance(x, (int, Fraction)):
            acc = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + _to_numeric(c, x)
        return acc

    def sign_at(self, num: int, den: int = 1) -> int:
        """Sign of P(num/den), den > 0, via the homogenized integer form."""
        d = self.degree
        if d < 0:
            return 0
        L = _lcm_den(self.coeffs)
        acc = 0
        dp = 1
        # Horner in num; the k-th coefficient from the top picks up den^k
        for c in reversed(self.coeffs):
            acc = acc * num + (c.numerator * (L // c.denominator)) * dp
            dp *= den
        return (acc > 0) - (acc < 0)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return RPoly(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return RPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return RPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RPoly(tuple(out))

    __rmul__ = __mul__

    def derivative(self) -> RPoly:
        return RPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def divmod(self, other: RPoly) -> tuple[RPoly, RPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dq = len(r) - len(other.coeffs)
        if dq < 0:
            return RPoly(()), self
        q = [Fraction(0)] * (dq + 1)
        lc = other.leading
        db = other.degree
        for i in range(dq, -1, -1):
            c = r[i + db] / lc
            q[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    r[i + j] -= c * b
        return RPoly(tuple(q)), RPoly(tuple(r[:db]))

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self) -> RPoly:
        return RPoly(tuple(c / self.leading for c in self.coeffs))

    def primitive(self) -> RPoly:
        """Positive rational multiple with coprime integer coefficients (sign preserved)."""
        if self.is_zero():
            return self
        L = _lcm_den(self.coeffs)
        ints = [c.numerator * (L // c.denominator) for c in self.coeffs]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        return RPoly(tuple(Fraction(v // g) for v in ints))

    def gcd(self, other: RPoly) -> RPoly:
        a, b = self, other
        while not b.is_zero():
            a, b = b, (a % b).primitive()
        return a.monic() if not a.is_zero() else a

    def to_json(self) -> list:
        return [rat_to_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, obj) -> RPoly:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(tuple(rat(c) for c in obj))

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = rat_to_str(mag)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                body = xs if mag == 1 else f"{rat_to_str(mag)}*{xs}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"RPoly({self})"


def _lcm_den(cs) -> int:
    L = 1
    for c in cs:
        L = math.lcm(L, c.denominator)
    return L


def _as_poly(x) -> RPoly:
    return x if isinstance(x, RPoly) else RPoly((rat(x),))


def _to_numeric(c: Fraction, like):
    if isinstance(like, (mpmath.mpf, mpmath.mpc)):
        return mpmath.mpf(c.numerator) / c.denominator
    return c.numerator / c.denominator
