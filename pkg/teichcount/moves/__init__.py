"""
Kernel-foliation moves and the normalization of primitive covers
"""

from .smith import smith_normal_form, mat_mul, mat_vec, det
from .kernel_moves import (
    ThreeCylState,
    move_horizontal,
    move_horizontal_inverse,
    move_vertical,
    case_b_window,
    collapse_steps,
)
from .slit_torus import SlitTorusState, to_slit_torus, canonical_slit_torus
from .normalize import normalize_to_canonical, canonical_state
from .connectivity import (
    NormalizationResult,
    FuzzSummary,
    kernel_components,
    sweep_normalization,
    fuzz_moves,
)

__all__ = [
    "smith_normal_form",
    "mat_mul",
    "mat_vec",
    "det",
    "ThreeCylState",
    "move_horizontal",
    "move_horizontal_inverse",
    "move_vertical",
    "case_b_window",
    "collapse_steps",
    "SlitTorusState",
    "to_slit_torus",
    "canonical_slit_torus",
    "normalize_to_canonical",
    "canonical_state",
    "NormalizationResult",
    "FuzzSummary",
    "kernel_components",
    "sweep_normalization",
    "fuzz_moves",
]
