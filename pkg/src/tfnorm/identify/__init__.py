"""Symbolic layer: space-expression parsing, rewriting, inclusion queries."""

from .ast import (
    Amalgam,
    C0,
    Dual,
    FL,
    FLinv,
    INF,
    INF0,
    Lp,
    Mod,
    Mpq,
    Qs,
    TensorEps,
    TensorPi,
    omega_bounded,
    omega_flat,
    radial_weight,
    render,
    tensor_weight,
)
from .engine import InclusionResult, RuleFiring, explain, includes, normalize, trace_to_json
from .parser import SpaceSyntaxError, parse_space
from .rules import RULES, RULE_NUMERIC_SUITE, RULE_TABLE, RewriteRule

__all__ = [
    "Amalgam",
    "C0",
    "Dual",
    "FL",
    "FLinv",
    "INF",
    "INF0",
    "Lp",
    "Mod",
    "Mpq",
    "Qs",
    "TensorEps",
    "TensorPi",
    "omega_bounded",
    "omega_flat",
    "radial_weight",
    "render",
    "tensor_weight",
    "InclusionResult",
    "RuleFiring",
    "explain",
    "includes",
    "normalize",
    "trace_to_json",
    "SpaceSyntaxError",
    "parse_space",
    "RULES",
    "RULE_NUMERIC_SUITE",
    "RULE_TABLE",
    "RewriteRule",
]
