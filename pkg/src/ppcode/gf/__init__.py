"""Finite fields GF(p^r), polynomials over them, and dense linear algebra."""

from .field import GF, FieldCtx, FieldElement, element_order, field_create
from .linalg import nullspace, rank, rref
from .poly import BiPoly, UniPoly, bivariate_divide_by_univariate
from .splitting import splitting_degree_profile

__all__ = [
    "GF",
    "BiPoly",
    "FieldCtx",
    "FieldElement",
    "UniPoly",
    "bivariate_divide_by_univariate",
    "element_order",
    "field_create",
    "nullspace",
    "rank",
    "rref",
    "splitting_degree_profile",
]
