"""Exact scalar, super-polynomial and matrix arithmetic."""

from .scalars import (
    GaussianRational,
    format_gaussian,
    parse_gaussian,
    parse_rational,
)
from .poly import EVEN, ODD, SuperPolynomial, VariableTable, merge_odd_words, poly_mul
from .linalg import (
    ExactMatrix,
    SparseRowReducer,
    det_exact,
    kernel_basis,
    leading_minors_all_positive,
    rref,
    solve_square,
)
from .roots import rational_roots

__all__ = [
    "GaussianRational",
    "format_gaussian",
    "parse_gaussian",
    "parse_rational",
    "EVEN",
    "ODD",
    "SuperPolynomial",
    "VariableTable",
    "merge_odd_words",
    "poly_mul",
    "ExactMatrix",
    "SparseRowReducer",
    "det_exact",
    "kernel_basis",
    "leading_minors_all_positive",
    "rref",
    "solve_square",
    "rational_roots",
]
