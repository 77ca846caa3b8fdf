"""Exact polynomial and truncated power series arithmetic."""

from .polynomial import (
    ONE,
    X_ALL,
    Y_ALL,
    ZERO,
    Family,
    Monomial,
    Polynomial,
    Substitution,
    VarId,
    const,
    parse_var,
    poly_sum,
    var,
    x,
    y,
)
from .series import (
    NotInvertibleError,
    PowerSeries,
    series_div_unit,
    series_mul,
    series_sqrt_unit,
)


def poly_add(a, b) -> Polynomial:
    return Polynomial.coerce(a) + b


def poly_mul(a, b) -> Polynomial:
    return Polynomial.coerce(a) * b


def poly_substitute(p, mapping) -> Polynomial:
    return Polynomial.coerce(p).substitute(mapping)


__all__ = [
    "ONE",
    "ZERO",
    "X_ALL",
    "Y_ALL",
    "Family",
    "Monomial",
    "NotInvertibleError",
    "Polynomial",
    "PowerSeries",
    "Substitution",
    "VarId",
    "const",
    "parse_var",
    "poly_add",
    "poly_mul",
    "poly_substitute",
    "poly_sum",
    "series_div_unit",
    "series_mul",
    "series_sqrt_unit",
    "var",
    "x",
    "y",
]
