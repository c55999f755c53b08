"""Exact rational and cyclotomic arithmetic."""

from .arith import (kronecker_symbol, reconstruct_rational, squarefree_part)
from .cyclotomic import (CycloElt, CycloField, change_field, common_conductor,
                         cyclo_field, cyclotomic_polynomial, galois_group,
                         restrict, trace_over_subgroup)
from .matrix import Matrix
from .sqrt import normalize_sign, sqrt_cyclotomic, sqrt_rational

__all__ = [
    "CycloElt", "CycloField", "Matrix", "change_field", "common_conductor",
    "cyclo_field", "cyclotomic_polynomial", "galois_group", "kronecker_symbol",
    "normalize_sign", "reconstruct_rational", "restrict", "sqrt_cyclotomic",
    "sqrt_rational", "squarefree_part", "trace_over_subgroup",
]
