"""
Closed-form cover counts, Siegel-Veech constants and volume limits
"""

from .counts import (
    count_covers,
    count_covers_trusted,
    count_primitive,
    count_primitive_closed,
    leading_term,
    factorization_check,
    one_cylinder_classes,
)
from .constants import (
    THEOREM_TABLE_Q2,
    sv_constant,
    sv_constant_literal,
    theorem_constant,
    generic_constant,
    constants_report,
    limit_errors,
)
from .volumes import (
    volume_target,
    cumulative_counts,
    volume_series,
    volume_estimate,
    asymptotic_ratio,
)

__all__ = [
    "count_covers",
    "count_covers_trusted",
    "count_primitive",
    "count_primitive_closed",
    "leading_term",
    "factorization_check",
    "one_cylinder_classes",
    "THEOREM_TABLE_Q2",
    "sv_constant",
    "sv_constant_literal",
    "theorem_constant",
    "generic_constant",
    "constants_report",
    "limit_errors",
    "volume_target",
    "cumulative_counts",
    "volume_series",
    "volume_estimate",
    "asymptotic_ratio",
]
