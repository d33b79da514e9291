"""Graded decomposition numbers for the blob algebra b_n(q, m) at a root of unity."""

from .laurent import LaurentPoly
from .params import BlobParams, cartan_entry, solve_k, validate_params

__all__ = ["BlobParams", "LaurentPoly", "cartan_entry", "solve_k", "validate_params"]
__version__ = "0.1.0"
