"""
Sweeps over the primitive fiber: connectivity, normalization and move fuzzing
"""

import logging
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, List, Sequence, Tuple

import networkx as nx

from ..cover_enum import CylCoords11, is_primitive, lattice_of, primitive_states
from ..errors import OutOfRange
from ..workers import SweepRunner, chunked
from .kernel_moves import ThreeCylState, move_horizontal, move_horizontal_inverse, move_vertical
from .normalize import normalize_to_canonical

logger = logging.getLogger(__name__)

_MOVES = {
    "F_h": move_horizontal,
    "F_h^-1": move_horizontal_inverse,
    "F_v": move_vertical,
}


@lru_cache(maxsize=None)
def _primitive_pool(d: int) -> Tuple[CylCoords11, ...]:
    return tuple(primitive_states(d))


def kernel_components(d: int) -> List[List[CylCoords11]]:
    """
    Connected components of the primitive fiber under F_h and F_v^sigma alone.

    No elementary-divisor or shear step is used, so a single component
    means the kernel moves already connect the fiber.

    Returns:
        Components as sorted state lists, largest first
    """
    if d < 2:
        raise OutOfRange(f"degree must be at least 2, got {d}", {"d": d})
    graph = nx.Graph()
    for coords in _primitive_pool(d):
        state = ThreeCylState(coords, d)
        graph.add_node(coords)
        graph.add_edge(coords, move_horizontal(state).coords)
        graph.add_edge(coords, move_vertical(state).coords)
    components = [sorted(component) for component in nx.connected_components(graph)]
    components.sort(key=lambda comp: (-len(comp), comp[0]))
    logger.info(f"Kernel moves at d={d}: {len(components)} component(s) over {graph.number_of_nodes()} states")
    return components


@dataclass(frozen=True)
class NormalizationResult:
    """Outcome of normalizing one primitive state"""
    state: CylCoords11
    length: int
    records: int
    reached: bool = True

    def to_dict(self) -> Dict[str, Any]:
        return {
            "state": self.state.to_dict(),
            "length": self.length,
            "records": self.records,
            "reached": self.reached,
        }


def _normalize_chunk(states: Sequence[CylCoords11]) -> List[NormalizationResult]:
    results = []
    for coords in states:
        trace = normalize_to_canonical(ThreeCylState(coords, coords.d))
        results.append(NormalizationResult(coords, trace.length, len(trace.records)))
    return results


def _concat(acc: List[NormalizationResult], part: List[NormalizationResult]) -> List[NormalizationResult]:
    return acc + part


def sweep_normalization(d: int, runner: SweepRunner | None = None, chunk_size: int = 256) -> List[NormalizationResult]:
    """
    Normalize every primitive state of degree d, in enumeration order.

    Any failure (NonTermination or an endgame invariant) propagates.
    """
    if d < 2:
        raise OutOfRange(f"degree must be at least 2, got {d}", {"d": d})
    chunks = chunked(_primitive_pool(d), chunk_size)
    runner = runner or SweepRunner(name=f"normalize-{d}")
    results = runner.run(_normalize_chunk, chunks, _concat, [])
    logger.info(
        f"Normalized {len(results)} primitive states at d={d}, "
        f"longest trace {max((r.length for r in results), default=0)}"
    )
    return results


@dataclass
class FuzzSummary:
    """Primitivity and lattice preservation over random move applications"""
    checked: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {"checked": self.checked, "ok": self.ok, "failures": self.failures[:20]}


def fuzz_moves(count: int, d_max: int = 12, seed: int = 0, walk: int = 4) -> FuzzSummary:
    """
    Apply random moves to random primitive states.

    Each sample starts at a uniformly chosen degree in [3, d_max] and a
    uniformly chosen primitive state, then takes up to `walk` random moves;
    every step is checked for primitivity and an unchanged period lattice.

    Args:
        count: Number of move applications to check
        d_max: Largest degree sampled
        seed: Random seed
        walk: Moves per starting state

    Returns:
        FuzzSummary with the number of checks and any failures
    """
    if d_max < 3:
        raise OutOfRange(f"d_max must be at least 3, got {d_max}", {"d_max": d_max})
    rng = random.Random(seed)
    summary = FuzzSummary()
    names = sorted(_MOVES)

    while summary.checked < count:
        d = rng.randint(3, d_max)
        state = ThreeCylState(rng.choice(_primitive_pool(d)), d)
        for _ in range(walk):
            name = rng.choice(names)
            moved = _MOVES[name](state)
            summary.checked += 1
            if not is_primitive(moved.coords) or lattice_of(moved.coords) != lattice_of(state.coords):
                summary.failures.append({"move": name, "before": state.to_dict(), "after": moved.to_dict()})
            state = moved
            if summary.checked >= count:
                break

    if summary.failures:
        logger.warning(f"Move fuzzing found {len(summary.failures)} failures in {summary.checked} checks")
    return summary
