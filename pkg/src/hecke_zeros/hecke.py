"""Hecke operators T_w(n) on q-expansions of any even weight (level one)."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .errors import BadNormalization, InsufficientPrecision, MissingEigenvalue, SpecError
from .modforms import CUSP_WEIGHTS_DIM1, cusp_eigenform
from .qseries import QSeries, rat, rat_to_str


def divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _common_divisors(n: int, e: int) -> list[int]:
    # every d divides 0
    return divisors(n) if e == 0 else [d for d in divisors(n) if e % d == 0]


def _dpow(d: int, s: int) -> Fraction:
    return Fraction(d ** s) if s >= 0 else Fraction(1, d ** (-s))


def hecke_apply(f: QSeries, w: int, n: int, precision: int | None = None) -> QSeries:
    """f | T_w(n): coefficient of q^e is sum_{d | (n, e)} d^(w-1) c_f(n e / d^2).

    The result is known through q^floor(f.precision / n) unless a smaller
    ``precision`` is requested.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if w % 2:
        raise ValueError("weight must be even")
    top = f.precision // n
    if precision is None:
        precision = top
    elif precision > top:
        raise InsufficientPrecision(
            f"T({n}) image known only through q^{top}; q^{precision} requested"
        )
    v = f.valuation
    low = v * n if v < 0 else -(-v // n)
    if f.is_zero():
        return QSeries.from_list([], valuation=precision + 1, precision=precision)
    terms = {}
    for e in range(min(low, precision + 1), precision + 1):
        s = Fraction(0)
        for d in _common_divisors(n, e):
            idx = n * e // (d * d)
            if idx < v:
                continue
            c = f[idx]
            if c:
                s += _dpow(d, w - 1) * c
        if s:
            terms[e] = s
    return QSeries.from_dict(terms, precision)


def scaled_hecke_principal(coeffs: Mapping[int, object], k: int, m: int, n: int) -> dict[int, Fraction]:
    """Exact coefficients of n^(k-1) F | T_{2-k}(n) at exponents -mn..0.

    ``coeffs`` maps l in [-m, 0] to c_F(l); c_F(-m) must be 1.
    """
    c = {int(l): rat(v) for l, v in coeffs.items() if -m <= int(l) <= 0}
    if c.get(-m, 0) != 1:
        raise BadNormalization(f"leading coefficient c_F(-{m}) must be 1, got {c.get(-m, 0)}")
    scale = n ** (k - 1)
    out = {}
    for e in range(-m * n, 1):
        s = Fraction(0)
        for d in _common_divisors(n, e):
            idx = n * e // (d * d)
            if idx < -m:
                continue
            cv = c.get(idx, 0)
            if cv:
                s += cv * Fraction(scale, d ** (k - 1))
        out[e] = s
    return out


@dataclass(frozen=True)
class EigenvalueSource:
    """Where a(n) comes from: the built-in dim-1 cusp form of weight k, or an explicit table."""

    kind: str
    k: int | None = None
    values: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind == "builtin-dim1":
            if self.k not in CUSP_WEIGHTS_DIM1:
                raise SpecError(f"no built-in eigenform of weight {self.k}")
        elif self.kind == "list":
            vals = {int(n): rat(v) for n, v in dict(self.values).items()}
            if vals.get(1, Fraction(1)) != 1:
                raise SpecError("a(1) must equal 1")
            vals[1] = Fraction(1)
            object.__setattr__(self, "values", vals)
        else:
            raise SpecError(f"unknown eigenvalue source kind {self.kind!r}")

    def __hash__(self):
        return hash((self.kind, self.k, tuple(sorted(self.values.items()))))

    @classmethod
    def builtin(cls, k: int) -> EigenvalueSource:
        return cls("builtin-dim1", k=k)

    @classmethod
    def from_values(cls, values: Mapping) -> EigenvalueSource:
        return cls("list", values=dict(values))

    def to_json(self) -> dict:
        if self.kind == "builtin-dim1":
            return {"kind": "builtin-dim1", "k": self.k}
        return {"kind": "list", "values": {str(n): rat_to_str(v) for n, v in sorted(self.values.items())}}

    @classmethod
    def from_json(cls, obj: Mapping) -> EigenvalueSource:
        kind = obj.get("kind")
        if kind == "builtin-dim1":
            return cls.builtin(int(obj["k"]))
        if kind == "list":
            try:
                vals = {int(n): rat(v) for n, v in obj["values"].items()}
            except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
                raise SpecError(f"bad eigenvalue table: {exc}") from exc
            return cls.from_values(vals)
        raise SpecError(f"unknown eigenvalue source kind {kind!r}")


@lru_cache(maxsize=32)
def _builtin_coeffs(k: int, N: int) -> QSeries:
    return cusp_eigenform(k, N)


def eigenvalue(src: EigenvalueSource, n: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return Fraction(1)
    if src.kind == "builtin-dim1":
        N = 64
        while N < n:
            N *= 2
        return _builtin_coeffs(src.k, N)[n]
    try:
        return src.values[n]
    except KeyError:
        raise MissingEigenvalue(f"a({n}) not supplied") from None
