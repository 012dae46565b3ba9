"""
Enumeration of torus covers in cylinder coordinates and by monodromy
"""

from .states import CylCoords11, H2TwoCyl, H2OneCyl, FiberState
from .fiber import (
    enumerate_fiber,
    period_vectors,
    lattice_of,
    is_primitive,
    fiber_count,
    primitive_fiber_count,
    primitive_states,
)
from .monodromy import (
    MonodromyTuple,
    compose,
    inverse,
    commutator,
    cycle_type,
    sheet_graph,
    homology_image,
    class_representatives,
    monodromy_classes,
    oracle_bound,
)
from .consistency import consistency_report

__all__ = [
    "CylCoords11",
    "H2TwoCyl",
    "H2OneCyl",
    "FiberState",
    "enumerate_fiber",
    "period_vectors",
    "lattice_of",
    "is_primitive",
    "fiber_count",
    "primitive_fiber_count",
    "primitive_states",
    "MonodromyTuple",
    "compose",
    "inverse",
    "commutator",
    "cycle_type",
    "sheet_graph",
    "homology_image",
    "class_representatives",
    "monodromy_classes",
    "oracle_bound",
    "consistency_report",
]
