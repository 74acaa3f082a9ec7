"""Hecke polynomials P_n(F; x) of weak Hecke eigenforms.

H_n(F) = Delta^b Etilde_{k-2} (n^(k-1) F | T_{2-k}(n) - a(n) F) is a polynomial in j.
Only the coefficients of F at exponents -m..0 enter, so those (plus the
eigenvalues a(n)) are all the input we need.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import BadNormalization, DegreeMismatch, SpecError
from .hecke import EigenvalueSource, eigenvalue, scaled_hecke_principal
from .modforms import b_exp, delta, faber_reduce, tilde_e
from .qseries import QSeries, bernoulli, rat, rat_to_str
from .rpoly import RPoly

PI_3 = "pi/3"
PI_2 = "pi/2"


@dataclass(frozen=True)
class WeakEigenformSpec:
    """Principal part and constant term of F^+ plus its eigenvalue stream.

    ``principal`` lists c(-m), c(-m+1), ..., c(-1); c(-m) must be 1.
    """

    k: int
    m: int
    principal: tuple
    constant: Fraction
    eigenvalues: EigenvalueSource

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k % 2 or self.k < 12:
            raise SpecError(f"shadow weight k must be an even integer >= 12, got {self.k!r}")
        if not isinstance(self.m, int) or self.m < 1:
            raise SpecError(f"pole order m must be a positive integer, got {self.m!r}")
        try:
            pr = tuple(rat(c) for c in self.principal)
            const = rat(self.constant)
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise SpecError(f"coefficients must be exact rationals: {exc}") from exc
        if len(pr) != self.m:
            raise SpecError(f"expected {self.m} principal coefficients, got {len(pr)}")
        if pr[0] != 1:
            raise BadNormalization(f"c(-m) must be 1, got {pr[0]}")
        if self.eigenvalues.kind == "builtin-dim1" and self.eigenvalues.k != self.k:
            raise SpecError(f"built-in eigenvalues have weight {self.eigenvalues.k}, spec has k={self.k}")
        object.__setattr__(self, "principal", pr)
        object.__setattr__(self, "constant", const)

    def coeff(self, l: int) -> Fraction:
        """c_F^+(l) for -m <= l <= 0."""
        if l == 0:
            return self.constant
        if -self.m <= l < 0:
            return self.principal[l + self.m]
        if l < -self.m:
            return Fraction(0)
        raise KeyError("positive-exponent coefficients are not stored in a WeakEigenformSpec")

    def lower_coeffs(self) -> dict[int, Fraction]:
        return {l: self.coeff(l) for l in range(-self.m, 1)}

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "m": self.m,
            "principal": [rat_to_str(c) for c in self.principal],
            "constant": rat_to_str(self.constant),
            "eigenvalues": self.eigenvalues.to_json(),
        }

    @classmethod
    def from_json(cls, obj) -> WeakEigenformSpec:
        if isinstance(obj, (str, bytes)):
            try:
                obj = json.loads(obj)
            except json.JSONDecodeError as exc:
                raise SpecError(f"spec is not valid JSON: {exc}") from exc
        if not isinstance(obj, dict):
            raise SpecError("spec must be a JSON object")
        missing = {"k", "m", "principal", "constant", "eigenvalues"} - obj.keys()
        if missing:
            raise SpecError(f"spec is missing fields: {sorted(missing)}")
        try:
            k, m = obj["k"], obj["m"]
            principal = [rat(str(c)) for c in obj["principal"]]
            constant = rat(str(obj["constant"]))
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise SpecError(f"bad spec field: {exc}") from exc
        if not isinstance(obj["eigenvalues"], dict):
            raise SpecError("eigenvalues must be an object")
        return cls(k, m, tuple(principal), constant, EigenvalueSource.from_json(obj["eigenvalues"]))


def builtin_R_spec() -> WeakEigenformSpec:
    """M_Delta / 11!: q^{-1} + 24/B_12 + ..., shadow proportional to Delta."""
    return WeakEigenformSpec(
        k=12,
        m=1,
        principal=(Fraction(1),),
        constant=24 / bernoulli(12),
        eigenvalues=EigenvalueSource.builtin(12),
    )


def load_spec(source) -> WeakEigenformSpec:
    """Spec from the alias "R", a JSON file path, or an already-parsed mapping."""
    if isinstance(source, WeakEigenformSpec):
        return source
    if isinstance(source, dict):
        return WeakEigenformSpec.from_json(source)
    if str(source) == "R":
        return builtin_R_spec()
    path = Path(source)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SpecError(f"cannot read spec file {path}: {exc}") from exc
    return WeakEigenformSpec.from_json(text)


def default_precision(spec: WeakEigenformSpec, n: int) -> int:
    return spec.m * n + b_exp(spec.k - 2) + 16


def normalizer(k: int, N: int) -> QSeries:
    """Delta^b(k) * Etilde_k through q^N."""
    b = b_exp(k)
    w = tilde_e(k, N)
    if b:
        w = w * delta(N) ** b
    return w


def inner_lower_part(spec: WeakEigenformSpec, n: int) -> QSeries:
    """n^(k-1) F | T_{2-k}(n) - a(n) F at exponents <= 0."""
    scaled = scaled_hecke_principal(spec.lower_coeffs(), spec.k, spec.m, n)
    a_n = eigenvalue(spec.eigenvalues, n)
    for l, c in spec.lower_coeffs().items():
        scaled[l] = scaled.get(l, 0) - a_n * c
    return QSeries.from_dict(scaled, 0)


def hn_lower_part(spec: WeakEigenformSpec, n: int, N: int | None = None) -> QSeries:
    """H_n(F) at exponents <= 0 (valuation b(k-2) - mn)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    mn = spec.m * n
    if N is None:
        N = default_precision(spec, n)
    N = max(N, mn)
    inner = inner_lower_part(spec, n)
    return (normalizer(spec.k - 2, N) * inner).truncate(0)


@dataclass(frozen=True)
class HeckePolyResult:
    poly: RPoly
    degree: int
    zero_at_0: bool
    zero_at_1728: bool
    n: int | None = None

    def to_json(self) -> dict:
        out = {
            "degree": self.degree,
            "coeffs": self.poly.to_json(),
            "zero_at_0": self.zero_at_0,
            "zero_at_1728": self.zero_at_1728,
        }
        if self.n is not None:
            out = {"n": self.n, **out}
        return out


def expected_degree(spec: WeakEigenformSpec, n: int) -> int:
    return spec.m * n - b_exp(spec.k - 2)


def hecke_polynomial(spec: WeakEigenformSpec, n: int, N: int | None = None) -> HeckePolyResult:
    """P_n(F; x), the monic polynomial with P_n(F; j) = H_n(F)."""
    lower = hn_lower_part(spec, n, N)
    P = faber_reduce(lower)
    deg = expected_degree(spec, n)
    if P.degree != deg or not P.is_monic():
        raise DegreeMismatch(
            f"P_{n} has degree {P.degree} and leading coefficient {P.leading}; expected monic of degree {deg}"
        )
    return HeckePolyResult(P, deg, P(0) == 0, P(1728) == 0, n)


def predicted_endpoint_zeros(k: int) -> frozenset:
    """Zeros of Etilde_{k-2} on the arc, keyed on k mod 12."""
    r = k % 12
    if r in (0, 4):
        return frozenset({PI_3, PI_2})
    if r == 8:
        return frozenset({PI_2})
    if r in (6, 10):
        return frozenset({PI_3})
    return frozenset()


def endpoint_report(spec: WeakEigenformSpec, n: int) -> dict:
    """Predicted endpoint zeros next to the exact values of P_n at 0 and 1728.

    The congruence conditions k = 2,4 (mod 6) and k = 2 (mod 4) are reported
    alongside without being checked against anything.
    """
    res = hecke_polynomial(spec, n)
    Z = predicted_endpoint_zeros(spec.k)
    k = spec.k
    return {
        "k": k,
        "n": n,
        "predicted_Z": sorted(Z),
        "predicted_zero_at_0": PI_3 in Z,
        "predicted_zero_at_1728": PI_2 in Z,
        "actual_zero_at_0": res.zero_at_0,
        "actual_zero_at_1728": res.zero_at_1728,
        "congruence_conditions": {
            "k_mod_6_in_2_4": k % 6 in (2, 4),
            "k_mod_4_is_2": k % 4 == 2,
        },
    }


def expected_interior_zeros(spec: WeakEigenformSpec, n: int) -> int:
    d = spec.k - 2
    return spec.m * n + d // 6 - math.ceil(d / 4)
