"""Exact coefficient arithmetic: Q(i)(v) with v*v = q, q-symbols and truncated series."""

from __future__ import annotations

from .gaussian import GaussianRational
from .qsymbols import qbinomial, qbracket, qfactorial, qnum, qpoch, qpoch_q, qpoch_ratio, q_symbol
from .scalar import I, KAPPA, ONE, Q, V, ZERO, LaurentPoly, Scalar
from .series import TruncatedSeries, qpoch_infinite_series


def scalar_arith(a, b, op: str) -> Scalar:
    """Binary field operation by name: ``add``, ``sub``, ``mul`` or ``div``."""
    a, b = Scalar.coerce(a), Scalar.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def series_arith(a: TruncatedSeries, b: TruncatedSeries, op: str) -> TruncatedSeries:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


__all__ = [
    "GaussianRational", "LaurentPoly", "Scalar", "TruncatedSeries",
    "ZERO", "ONE", "I", "V", "Q", "KAPPA",
    "qnum", "qfactorial", "qbinomial", "qbracket", "qpoch", "qpoch_q", "qpoch_ratio", "q_symbol",
    "qpoch_infinite_series", "scalar_arith", "series_arith",
]
