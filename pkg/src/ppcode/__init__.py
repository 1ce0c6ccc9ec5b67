"""Permuted product codes: list-decodable subcodes of Reed-Solomon codes."""

from .affine import AffineMap
from .code import PpcCode, encode, encode_via_tensor, ppc_code, ppc_default
from .decode import DecodeOutput, agreement_threshold, degree_budget, list_decode
from .gf import BiPoly, FieldCtx, UniPoly, field_create

__version__ = "0.1.0"

__all__ = [
    "AffineMap",
    "BiPoly",
    "DecodeOutput",
    "FieldCtx",
    "PpcCode",
    "UniPoly",
    "agreement_threshold",
    "degree_budget",
    "encode",
    "encode_via_tensor",
    "field_create",
    "list_decode",
    "ppc_code",
    "ppc_default",
]
