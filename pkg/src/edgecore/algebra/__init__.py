from .fields import GF, QQ, FieldMismatch, Mod, PrimeField, RationalField, is_prime, parse_field
from .linalg import (
    DimensionError,
    Mat,
    RowSpace,
    determinant,
    intersect_row_spaces,
    intersect_spaces,
    kernel,
    left_kernel,
    rank,
    row_reduce,
    row_space,
)
from .poly import Monomial, Poly, monomials_of_degree, poly_mul

__all__ = [
    "GF", "QQ", "FieldMismatch", "Mod", "PrimeField", "RationalField", "is_prime", "parse_field",
    "DimensionError", "Mat", "RowSpace", "determinant", "intersect_row_spaces", "intersect_spaces",
    "kernel", "left_kernel", "rank", "row_reduce", "row_space",
    "Monomial", "Poly", "monomials_of_degree", "poly_mul",
]
