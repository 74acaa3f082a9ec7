"""Level-one modular objects as exact q-expansions.

Eisenstein series use the normalization E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n,
which is the one giving Delta = q - 24q^2 + ... and j = 1/q + 744 + 196884q + ...
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import BadWeight, InexactDivision, UnsupportedWeight
from .qseries import QSeries, bernoulli
from .rpoly import RPoly

CUSP_WEIGHTS_DIM1 = (12, 16, 18, 20, 22, 26)

# Etilde_k and h_k by k mod 12: (power of E4, power of E6) and h_k(x) coefficients
_TILDE_E = {0: (0, 0), 2: (2, 1), 4: (1, 0), 6: (0, 1), 8: (2, 0), 10: (1, 1)}
_H_POLY = {
    0: (1,),
    2: (0, 0, -1728, 1),
    4: (0, 1),
    6: (-1728, 1),
    8: (0, 0, 1),
    10: (0, -1728, 1),
}


def divisor_sums(nu: int, N: int) -> list[int]:
    """sigma_nu(n) for 0 <= n <= N (index 0 unused, set to 0)."""
    s = [0] * (N + 1)
    for d in range(1, N + 1):
        p = d ** nu
        for m in range(d, N + 1, d):
            s[m] += p
    return s


def _check_even_weight(k: int, least: int) -> None:
    if not isinstance(k, int) or k % 2 or k < least:
        raise BadWeight(f"weight must be an even integer >= {least}, got {k!r}")


@lru_cache(maxsize=64)
def eisenstein(k: int, N: int) -> QSeries:
    """E_k through q^N."""
    _check_even_weight(k, 4)
    factor = -Fraction(2 * k) / bernoulli(k)
    sig = divisor_sums(k - 1, N)
    return QSeries.from_list([1] + [factor * sig[n] for n in range(1, N + 1)], 0, N)


@lru_cache(maxsize=64)
def delta(N: int) -> QSeries:
    """Delta = (E4^3 - E6^2)/1728 through q^N."""
    if N < 1:
        raise ValueError("precision must be >= 1")
    e4, e6 = eisenstein(4, N), eisenstein(6, N)
    return (e4 ** 3 - e6 ** 2).scale(Fraction(1, 1728))


@lru_cache(maxsize=64)
def jinv(N: int) -> QSeries:
    """j = E4^3/Delta through q^N."""
    if N < 1:
        raise ValueError("precision must be >= 1")
    M = N + 2
    return (eisenstein(4, M) ** 3 * delta(M).inverse()).truncate(N)


def tilde_e(k: int, N: int) -> QSeries:
    """The product of E4, E6 powers carrying the forced zeros of weight-k forms."""
    _check_even_weight(k, 0)
    a, b = _TILDE_E[k % 12]
    out = QSeries.one(N)
    if a:
        out = out * eisenstein(4, N) ** a
    if b:
        out = out * eisenstein(6, N) ** b
    return out


def b_exp(k: int) -> int:
    """Exponent of Delta in the weight-k normalizer: floor(k/12), less one when k = 2 mod 12."""
    _check_even_weight(k, 0)
    return k // 12 - (1 if k % 12 == 2 else 0)


def h_poly(k: int) -> RPoly:
    _check_even_weight(k, 0)
    return RPoly(_H_POLY[k % 12])


@lru_cache(maxsize=8)
def _j_powers(D: int) -> tuple:
    """(j^0, ..., j^D), each known at least through q^0."""
    j = jinv(max(D, 1))
    out = [QSeries.one(max(D, 1))]
    for _ in range(D):
        out.append(out[-1] * j)
    return tuple(out)


def faber_reduce(f: QSeries) -> RPoly:
    """The polynomial P with P(j) = f + O(q), by top-down elimination of the principal part.

    Requires f to be known through q^0.
    """
    if f.precision < 0:
        raise InexactDivision(f"need coefficients through q^0, have precision {f.precision}")
    D = max(0, -f.valuation)
    powers = _j_powers(D)
    cur = {e: f[e] for e in range(-D, 1)}
    poly = [Fraction(0)] * (D + 1)
    for d in range(D, 0, -1):
        c = cur[-d]
        if c:
            poly[d] = c
            jd = powers[d]
            for e in range(-d, 1):
                cur[e] -= c * jd[e]
    poly[0] = cur[0]
    return RPoly(tuple(poly))


def faber(n: int, N: int) -> tuple[QSeries, RPoly]:
    """j_n = q^{-n} + O(q) through q^N and its Faber polynomial J_n (J_n(j) = j_n)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return QSeries.one(N), RPoly((1,))
    J = faber_reduce(QSeries.monomial(-n, 1, 0))
    j = jinv(N + n)
    jn = QSeries.one(N + n).scale(J.coeffs[0])
    jp = QSeries.one(N + n)
    for c in J.coeffs[1:]:
        jp = jp * j
        if c:
            jn = jn + jp.scale(c)
    return jn.truncate(N), J


def cusp_eigenform(k: int, N: int) -> QSeries:
    """Normalized cusp form Delta * E_{k-12} for the weights with dim S_k = 1."""
    if k not in CUSP_WEIGHTS_DIM1:
        raise UnsupportedWeight(f"dim S_{k} != 1; supported weights are {CUSP_WEIGHTS_DIM1}")
    d = delta(N)
    if k == 12:
        return d
    return d * eisenstein(k - 12, N)


def divisor_polynomial(f: QSeries, k: int) -> RPoly:
    """P(f; x) = h_k(x) * Ptilde(f; x) for a holomorphic weight-k form f.

    Raises InexactDivision when f / (Delta^b Etilde_k) is not a polynomial in j
    as far as the available coefficients can tell.
    """
    _check_even_weight(k, 0)
    if not f.is_zero() and f.valuation < 0:
        raise InexactDivision("f has a pole at the cusp; not a holomorphic modular form")
    b = b_exp(k)
    p = f.precision
    if p < b:
        raise InexactDivision(f"need f through q^{b} to divide by Delta^{b}, have q^{p}")
    w = tilde_e(k, p + b)
    if b:
        w = w * delta(p + b) ** b
    quot = f * w.inverse()
    ptilde = faber_reduce(quot)
    # residual check on the positive exponents we actually know
    top = quot.precision
    if top >= 1:
        D = ptilde.degree
        j = jinv(top + max(D, 1))
        acc = QSeries.one(top + max(D, 1)).scale(ptilde.coeffs[0] if ptilde.coeffs else 0)
        jp = QSeries.one(top + max(D, 1))
        for c in ptilde.coeffs[1:]:
            jp = jp * j
            acc = acc + jp.scale(c)
        resid = quot - acc
        if not resid.is_zero() and resid.valuation <= top:
            raise InexactDivision(
                f"f/(Delta^{b} Etilde_{k}) is not a polynomial in j: residual at q^{resid.valuation}"
            )
    return h_poly(k) * ptilde


__all__ = [
    "CUSP_WEIGHTS_DIM1",
    "RPoly",
    "b_exp",
    "cusp_eigenform",
    "delta",
    "divisor_polynomial",
    "divisor_sums",
    "eisenstein",
    "faber",
    "faber_reduce",
    "h_poly",
    "jinv",
    "tilde_e",
]
