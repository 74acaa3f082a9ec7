"""Hecke polynomials of weak Hecke eigenforms and the location of their zeros.

Exact q-series and polynomial arithmetic lives in ``qseries``, ``rpoly``,
``modforms``, ``hecke`` and ``heckepoly``; floating-point work (Kloosterman
and Bessel series, arc evaluation, root pullbacks) in ``specialfn``,
``arcbounds`` and ``roots``.
"""
from .errors import HeckeZerosError
from .heckepoly import (
    HeckePolyResult,
    WeakEigenformSpec,
    builtin_R_spec,
    hecke_polynomial,
    load_spec,
)
from .modforms import delta, eisenstein, faber, jinv
from .qseries import QSeries, bernoulli
from .rpoly import RPoly

__version__ = "0.1.0"

__all__ = [
    "HeckePolyResult",
    "HeckeZerosError",
    "QSeries",
    "RPoly",
    "WeakEigenformSpec",
    "bernoulli",
    "builtin_R_spec",
    "delta",
    "eisenstein",
    "faber",
    "hecke_polynomial",
    "jinv",
    "load_spec",
]
