"""Weighted succession rules and parametric production matrices.

Exact arithmetic for the Dyck-path production matrix, its succession rules,
generating functions, and a brute-force path oracle to check them against.
"""

from .algebra import Polynomial, PowerSeries, Substitution, VarId, var, x, y
from .prodmat import (
    BorderSpec,
    ProductionMatrix,
    border,
    dyck_main_matrix,
    gf_series,
    sequence,
    tail_ones,
    truncate,
)
from .rules import builtin_rule, parse_rule, rule_to_matrix, simulate_levels

__version__ = "0.1.0"

__all__ = [
    "BorderSpec",
    "Polynomial",
    "PowerSeries",
    "ProductionMatrix",
    "Substitution",
    "VarId",
    "border",
    "builtin_rule",
    "dyck_main_matrix",
    "gf_series",
    "parse_rule",
    "rule_to_matrix",
    "sequence",
    "simulate_levels",
    "tail_ones",
    "truncate",
    "var",
    "x",
    "y",
]
