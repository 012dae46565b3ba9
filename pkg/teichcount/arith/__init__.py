"""
Exact integer and rational number theory kernel
"""

from .number_theory import (
    factorization,
    mobius,
    euler_phi,
    divisors,
    sigma1,
    iter_bilinear,
    iter_bilinear_tuples,
    count_bilinear,
    mobius_weight_sum,
    twist_count,
)
from .mzv import mzv_partial, mzv_targets
from .lattice import ext_gcd, hermite_basis, lattice_index, elementary_divisors, spans_z2

__all__ = [
    "factorization",
    "mobius",
    "euler_phi",
    "divisors",
    "sigma1",
    "iter_bilinear",
    "iter_bilinear_tuples",
    "count_bilinear",
    "mobius_weight_sum",
    "twist_count",
    "mzv_partial",
    "mzv_targets",
    "ext_gcd",
    "hermite_basis",
    "lattice_index",
    "elementary_divisors",
    "spans_z2",
]
