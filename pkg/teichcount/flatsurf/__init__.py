"""
Exact flat geometry of the slit-torus surface and its length censuses
"""

from .field import FieldScalar
from .surface import (
    DEFAULT_ALPHA,
    Ray,
    Side,
    SlitTorusSurface,
    Zero,
    build_surface,
    parse_alpha,
    rays_from,
    zero_offset,
)
from .tracer import EndsAtRegularPoint, HitsZeroMidway, LandsOnZero, TraceOutcome, trace_ray
from .census import (
    MIN_FIT_POINTS,
    QUANTITIES,
    BandModel,
    band_model,
    brute_force_saddles,
    cylinder_census,
    direction_cylinders,
    growth_ratio,
    multiplicity,
    primitive_directions,
    quadratic_fit,
    run_census,
    saddle_candidates,
    saddle_census,
    t_grid,
)

__all__ = [
    "FieldScalar",
    "DEFAULT_ALPHA",
    "Ray",
    "Side",
    "SlitTorusSurface",
    "Zero",
    "build_surface",
    "parse_alpha",
    "rays_from",
    "zero_offset",
    "EndsAtRegularPoint",
    "HitsZeroMidway",
    "LandsOnZero",
    "TraceOutcome",
    "trace_ray",
    "MIN_FIT_POINTS",
    "QUANTITIES",
    "BandModel",
    "band_model",
    "brute_force_saddles",
    "cylinder_census",
    "direction_cylinders",
    "growth_ratio",
    "multiplicity",
    "primitive_directions",
    "quadratic_fit",
    "run_census",
    "saddle_candidates",
    "saddle_census",
    "t_grid",
]
