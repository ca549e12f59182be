"""Exact scalar and polynomial arithmetic with certified sign determination."""

from .parse import parse_scalar
from .poly import IntPoly, X, isolate_real_roots, sturm_count, sturm_sequence
from .scalars import (
    EQ,
    GT,
    LT,
    AlgebraicReal,
    Interval,
    Scalar,
    Surd,
    as_scalar,
    compare,
    demote,
    evaluate,
    factor_poly,
    floor_scalar,
    format_factorization,
    format_scalar,
    largest_real_root,
    real_roots,
    sign,
    sqrt,
    surd,
)

__all__ = [
    "AlgebraicReal",
    "EQ",
    "GT",
    "IntPoly",
    "Interval",
    "LT",
    "Scalar",
    "Surd",
    "X",
    "as_scalar",
    "compare",
    "demote",
    "evaluate",
    "factor_poly",
    "floor_scalar",
    "format_factorization",
    "format_scalar",
    "isolate_real_roots",
    "largest_real_root",
    "parse_scalar",
    "real_roots",
    "sign",
    "sqrt",
    "sturm_count",
    "sturm_sequence",
    "surd",
]
