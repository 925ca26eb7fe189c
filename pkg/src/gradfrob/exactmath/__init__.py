"""Exact arithmetic kernel: rationals, sparse polynomials, linear algebra."""

from .forms import (
    DEFAULT_SAMPLE_BOUND,
    DEFAULT_TRIALS,
    STRATEGIES,
    GenericInvertibility,
    LinearForm,
    LinearFormMatrix,
    eval_at,
    is_generically_invertible,
    nonvanishing_point,
    sample_points,
    structural_rank,
    symbolic_det,
)
from .linalg import determinant, nullspace_basis, rational_rank, rref, transpose
from .poly import MultiPoly
from .rational import format_rational, parse_rational

__all__ = [
    "DEFAULT_SAMPLE_BOUND", "DEFAULT_TRIALS", "STRATEGIES", "GenericInvertibility",
    "LinearForm", "LinearFormMatrix", "MultiPoly", "determinant", "eval_at",
    "format_rational", "is_generically_invertible", "nonvanishing_point",
    "nullspace_basis", "parse_rational", "rational_rank", "rref", "sample_points",
    "structural_rank", "symbolic_det", "transpose",
]
