"""
Saddle-connection and cylinder censuses on S(p/q, alpha)

Conventions: a saddle connection joins z_top to z_bot and is counted once
per segment, through its z_top -> z_bot holonomy; cylinders are counted per
orientation of the core curve and per multiple k of the core length.
"""

import logging
import math
from bisect import bisect_left, bisect_right
from collections import Counter
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import product
from math import gcd, isqrt
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from ..config.settings import get_settings
from ..counting import theorem_constant
from ..errors import InvariantViolation, OutOfRange, PreconditionFailed, SeparatrixOverrun
from ..models.data_models import CensusPoint, CensusResult, ConstantKind, FitResult
from ..workers import SweepRunner, chunked
from .field import FieldScalar
from .surface import Ray, SlitTorusSurface, Vector, Zero, rays_from, zero_offset
from .tracer import EndsAtRegularPoint, LandsOnZero, trace_ray

logger = logging.getLogger(__name__)

QUANTITIES: Dict[str, ConstantKind] = {
    "ns1": ConstantKind.S1,
    "ns2": ConstantKind.S2,
    "nc": ConstantKind.C,
}

MIN_FIT_POINTS = 3


def t_grid(T: Fraction | int | str | Iterable) -> Tuple[Fraction, ...]:
    """Sorted, deduplicated cutoffs; every cutoff must be positive"""
    values = [T] if isinstance(T, (int, float, str, Fraction)) else list(T)
    grid = tuple(sorted({Fraction(str(v)) if isinstance(v, float) else Fraction(v) for v in values}))
    if not grid or grid[0] <= 0:
        raise OutOfRange(f"cutoffs must be positive, got {values}", {"T": [str(v) for v in values]})
    return grid


# Saddle connections

def multiplicity(surface: SlitTorusSurface, v: Vector, source: Zero = Zero.TOP) -> int:
    """Number of the two rays of `source` in direction v that land on the other zero"""
    target = source.other
    count = 0
    for ray in rays_from(surface, source, v):
        outcome = trace_ray(surface, ray, v)
        if isinstance(outcome, LandsOnZero) and outcome.zero is target:
            count += 1
    return count


def saddle_candidates(surface: SlitTorusSurface, m: int, T: Fraction) -> List[Vector]:
    """
    Candidates v = (2m/q, 2n - 2 alpha) in column m with |v| <= T.

    These are the vectors congruent to pi(z_bot) - pi(z_top) mod Lambda_base.
    """
    vx = Fraction(2 * m, surface.q)
    room = T * T - vx * vx
    if room < 0:
        return []
    _, offset = zero_offset(surface)
    half = math.sqrt(float(room)) / 2
    center = -float(offset) / 2
    found = []
    for n in range(math.floor(center - half) - 1, math.ceil(center + half) + 2):
        vy = offset + 2 * n
        if vy * vy <= room:
            found.append((vx, vy))
    return found


def _saddle_chunk(task) -> Counter:
    surface, columns, grid, source = task
    sign = 1 if source is Zero.TOP else -1
    squares = [T * T for T in grid]
    tally: Counter = Counter()
    for m in columns:
        for vx, vy in saddle_candidates(surface, m, grid[-1]):
            index = bisect_left(squares, vy * vy + vx * vx)
            tally[(index, multiplicity(surface, (sign * vx, sign * vy), source))] += 1
    return tally


def _add_counters(acc: Counter, part: Counter) -> Counter:
    acc.update(part)
    return acc


def _columns(surface: SlitTorusSurface, T: Fraction) -> List[int]:
    reach = math.floor(T * surface.q / 2)
    return list(range(-reach, reach + 1))


def saddle_census(
    surface: SlitTorusSurface,
    T,
    runner: Optional[SweepRunner] = None,
    chunk_size: int = 4,
    source: Zero = Zero.TOP,
) -> CensusResult:
    """
    Count z_top -> z_bot saddle connections up to each cutoff.

    For every candidate v both rays of z_top in direction v are traced;
    k(v) is the number that land on z_bot. N_s1 counts candidates with
    k = 1 and N_s2 those with k = 2 (a parallel pair counts once).
    With source=Zero.BOTTOM the same segments are traced backwards: the
    candidates are negated and the rays leave z_bot.

    Args:
        surface: The surface
        T: A cutoff or a grid of cutoffs
        runner: Optional SweepRunner; candidate columns are split across it
        chunk_size: Columns per work item
        source: Zero the rays leave from

    Returns:
        CensusResult with ns1, ns2 filled in and the k-histogram at the largest cutoff
    """
    grid = t_grid(T)
    tasks = [(surface, tuple(chunk), grid, source) for chunk in chunked(_columns(surface, grid[-1]), chunk_size)]
    runner = runner or SweepRunner(name=f"saddles-{surface.p}/{surface.q}")
    tally = runner.run(_saddle_chunk, tasks, _add_counters, Counter())

    result = CensusResult(surface.p, surface.q, str(surface.alpha))
    ns1 = ns2 = 0
    for index, T_i in enumerate(grid):
        ns1 += tally[(index, 1)]
        ns2 += tally[(index, 2)]
        result.points.append(CensusPoint(T_i, ns1, ns2, 0))
    for (_, k), count in tally.items():
        result.multiplicity[k] = result.multiplicity.get(k, 0) + count
    if any(k > 2 for k in result.multiplicity):
        raise InvariantViolation("a candidate has more than two saddle connections", result.to_dict())
    logger.info(f"Saddle census on {surface.describe()} up to T={grid[-1]}: ns1={ns1}, ns2={ns2}")
    return result


def brute_force_saddles(surface: SlitTorusSurface, T) -> int:
    """
    Total number of z_top -> z_bot saddle connections of length <= T, found
    without the lattice congruence: every (m/q, n - 2 alpha) with |v| <= T is
    traced, a grid four times denser than the candidate lattice.
    """
    T = t_grid(T)[-1]
    reach = math.floor(T * surface.q)
    total = 0
    for m in range(-reach, reach + 1):
        vx = Fraction(m, surface.q)
        room = T * T - vx * vx
        span = math.isqrt(math.floor(room)) + 2
        for n in range(-span, span + 3):
            vy = n - 2 * surface.alpha
            if vy * vy <= room:
                total += multiplicity(surface, (vx, vy))
    return total


# Cylinders

@dataclass
class BandModel:
    """
    First-return model of the flow in a periodic direction v0 = (2m/q, 2n), m >= 1.

    The transversals Gamma_j sit at x = p/q + 1/q + 2j/q, halfway between
    consecutive lifts of the slit abscissa, one per sheet of the q-fold
    cover. One step moves by v0/m: it crosses exactly one lift of the slit
    line, rotates y by 2n/m and changes sheet. The 2m breakpoints are the
    orbits of the two heights at which a step runs into a zero; each
    (sheet, arc) pair is a node, and the step permutes the nodes.
    """
    surface: SlitTorusSurface
    m: int
    n: int
    breakpoints: List[FieldScalar] = field(init=False)

    def __post_init__(self):
        s = self.surface
        q = s.q
        self.base_x = s.a + Fraction(1, q)
        self.half = Fraction(self.n, self.m)
        self.shift = 2 * self.half
        top = (s.alpha - self.half).mod(2, -1)
        bottom = (-s.alpha - self.half).mod(2, -1)
        self.breakpoints = sorted(
            (start + Fraction(2 * k, self.m)).mod(2, -1)
            for start in (top, bottom)
            for k in range(self.m)
        )
        self._index = {b: i for i, b in enumerate(self.breakpoints)}

        self._slit: List[Optional[Fraction]] = []
        self._pass_to: List[int] = []
        self._teleport_to: List[int] = []
        for j in range(q):
            line = (self.base_x + Fraction(2 * j + 1, q)) % 2
            slit = s.slit_at(line)
            self._slit.append(slit)
            self._pass_to.append(self.sheet_of(line + Fraction(1, q)))
            self._teleport_to.append(
                self.sheet_of(s.partner(slit) + Fraction(1, q)) if slit is not None else -1
            )

    @property
    def direction(self) -> Vector:
        return Fraction(2 * self.m, self.surface.q), self.surface.scalar(2 * self.n)

    @property
    def sheets(self) -> int:
        return self.surface.q

    @property
    def arcs(self) -> int:
        return len(self.breakpoints)

    def transversal_x(self, j: int) -> Fraction:
        return (self.base_x + Fraction(2 * j, self.surface.q)) % 2

    def sheet_of(self, x: Fraction) -> int:
        offset = ((Fraction(x) - self.base_x) % 2) * self.surface.q / 2
        if offset.denominator != 1:
            raise InvariantViolation(f"x = {x} is not on a transversal", {"x": str(x)})
        return int(offset) % self.surface.q

    def arc_of(self, y: FieldScalar) -> int:
        return (bisect_right(self.breakpoints, y) - 1) % self.arcs

    def arc_midpoint(self, i: int) -> FieldScalar:
        low = self.breakpoints[i]
        high = self.breakpoints[i + 1] if i + 1 < self.arcs else self.breakpoints[0] + 2
        return ((low + high) / 2).mod(2, -1)

    def step(self, j: int, y: FieldScalar) -> Optional[Tuple[int, FieldScalar]]:
        """Next point on the transversals, or None if the step runs into a zero"""
        slit = self._slit[j]
        if slit is None:
            target = self._pass_to[j]
        else:
            crossing = abs((y + self.half).mod(2, -1))
            if crossing == self.surface.alpha:
                return None
            target = self._teleport_to[j] if crossing < self.surface.alpha else self._pass_to[j]
        return target, (y + self.shift).mod(2, -1)

    def node_map(self) -> Dict[Tuple[int, int], Tuple[int, int]]:
        """The step as a permutation of (sheet, arc) nodes"""
        mapping = {}
        for j, i in product(range(self.sheets), range(self.arcs)):
            image = self.step(j, self.arc_midpoint(i))
            if image is None:
                raise InvariantViolation("an arc interior ran into a zero", {"sheet": j, "arc": i})
            mapping[(j, i)] = (image[0], self.arc_of(image[1]))
        return mapping

    def breakpoint_leaves(self) -> Dict[Tuple[int, int], bool]:
        """
        For each (sheet, breakpoint): True if its leaf closes up regularly,
        False if it runs into a zero.

        Raises:
            SeparatrixOverrun: if a leaf neither closes nor meets a zero
                within separatrix_factor * q * |v0|
        """
        limit = get_settings().separatrix_factor * self.sheets * self.m
        status: Dict[Tuple[int, int], bool] = {}
        for start in product(range(self.sheets), range(self.arcs)):
            if start in status:
                continue
            path = [start]
            node = start
            while True:
                image = self.step(node[0], self.breakpoints[node[1]])
                if image is None:
                    verdict = False
                    break
                node = (image[0], self._index[image[1]])
                if node == start:
                    verdict = True
                    break
                if node in status:
                    verdict = status[node]
                    break
                path.append(node)
                if len(path) > limit:
                    raise SeparatrixOverrun(
                        f"leaf from breakpoint {start} exceeded {limit} steps",
                        {"surface": self.surface.to_dict(), "m": self.m, "n": self.n},
                    )
            for visited in path:
                status[visited] = verdict
        return status

    def cylinders(self) -> List[int]:
        """
        Circumferences of the maximal cylinders, in units of |v0|, sorted.

        Band cycles of the node map are glued across every breakpoint whose
        leaf is regular; the components are the maximal cylinders.
        """
        mapping = self.node_map()
        graph = nx.Graph()
        graph.add_nodes_from(mapping)
        graph.add_edges_from(mapping.items())
        for (j, i), regular in self.breakpoint_leaves().items():
            if regular:
                graph.add_edge((j, (i - 1) % self.arcs), (j, i))

        circumferences = []
        for component in nx.connected_components(graph):
            lengths = {self._cycle_length(mapping, node) for node in component}
            if len(lengths) != 1:
                raise InvariantViolation(
                    f"closed leaves of unequal length {sorted(lengths)} in one cylinder",
                    {"m": self.m, "n": self.n},
                )
            steps = lengths.pop()
            if steps % self.m:
                raise InvariantViolation(
                    f"core curve of {steps} steps is not a multiple of v0",
                    {"m": self.m, "n": self.n},
                )
            circumferences.append(steps // self.m)
        return sorted(circumferences)

    @staticmethod
    def _cycle_length(mapping, node) -> int:
        length, current = 1, mapping[node]
        while current != node:
            current = mapping[current]
            length += 1
        return length


def band_model(surface: SlitTorusSurface, v0: Vector) -> BandModel:
    """
    Build the first-return model for a primitive vector of Lambda_base.

    v0 and -v0 give the same model.

    Raises:
        PreconditionFailed: if v0 is vertical or not a primitive vector of Lambda_base
    """
    vx, vy = Fraction(v0[0]), surface.scalar(v0[1])
    if not vy.is_rational:
        raise PreconditionFailed("v0 must be a vector of the base lattice", {"v0": [str(c) for c in v0]})
    m, n = vx * surface.q / 2, vy.rational_part / 2
    if m.denominator != 1 or n.denominator != 1 or gcd(int(m), int(n)) != 1:
        raise PreconditionFailed("v0 must be a primitive vector of the base lattice", {"v0": [str(c) for c in v0]})
    m, n = int(m), int(n)
    if m == 0:
        raise PreconditionFailed("the vertical direction has no transversal model", {"v0": [str(c) for c in v0]})
    if m < 0:
        m, n = -m, -n
    return BandModel(surface, m, n)


def _vertical_cylinders(surface: SlitTorusSurface) -> List[int]:
    """The two vertical strips between the slit lines; each leaf closes after (0, 2)"""
    a, a2 = sorted(surface.slit_abscissas)
    circumferences = []
    for x in ((a + a2) / 2, ((a2 + a + 2) / 2) % 2):
        start = (x, surface.scalar(0))
        outcome = trace_ray(surface, Ray.at(start, (Fraction(0), surface.scalar(2))))
        if not isinstance(outcome, EndsAtRegularPoint) or outcome.position != start:
            raise InvariantViolation("vertical leaf did not close after one period", {"x": str(x)})
        circumferences.append(1)
    return circumferences


def direction_cylinders(surface: SlitTorusSurface, m: int, n: int) -> List[int]:
    """Cylinder circumferences, in units of |v0|, in direction (2m/q, 2n)"""
    if m == 0:
        return _vertical_cylinders(surface)
    return band_model(surface, (Fraction(2 * m, surface.q), Fraction(2 * n))).cylinders()


def primitive_directions(surface: SlitTorusSurface, T: Fraction) -> List[Tuple[int, int]]:
    """
    Primitive (m, n) with v0 = (2m/q, 2n), |v0| <= T, one per unoriented direction
    (m >= 1, or the vertical (0, 1))
    """
    q = surface.q
    directions = [(0, 1)] if T >= 2 else []
    for m in range(1, math.floor(T * q / 2) + 1):
        room = T * T - Fraction(4 * m * m, q * q)
        reach = isqrt(math.floor(room / 4))
        directions.extend((m, n) for n in range(-reach, reach + 1) if gcd(m, n) == 1)
    return directions


def _multiples(norm2: Fraction, circumference: int, T: Fraction) -> int:
    # largest k with k * c * |v0| <= T
    return isqrt(math.floor(T * T / (circumference * circumference * norm2)))


def _cylinder_chunk(task) -> Counter:
    surface, directions, grid = task
    q = surface.q
    tally: Counter = Counter()
    for m, n in directions:
        norm2 = Fraction(4 * m * m, q * q) + 4 * n * n
        found = direction_cylinders(surface, m, n)
        if m and (len(found) != 3 or found[2] != found[0] + found[1]):
            raise InvariantViolation(
                f"direction ({m}, {n}) has cylinders {found}", {"m": m, "n": n, "cylinders": found}
            )
        tally[("directions", len(found))] += 1
        for index, T_i in enumerate(grid):
            # both orientations of every core curve
            tally[("nc", index)] += 2 * sum(_multiples(norm2, c, T_i) for c in found)
    return tally


def cylinder_census(
    surface: SlitTorusSurface,
    T,
    runner: Optional[SweepRunner] = None,
    chunk_size: int = 64,
) -> CensusResult:
    """
    Count cylinders of closed geodesics up to each cutoff.

    Every primitive v0 in Lambda_base with |v0| <= T is a periodic direction.
    Each of its cylinders, with core length c |v0|, contributes one family
    per orientation and per multiple k with k c |v0| <= T.

    Returns:
        CensusResult with nc filled in and the histogram of cylinders per direction

    Raises:
        SeparatrixOverrun: if a separatrix does not close within the safety bound
        InvariantViolation: if a nonvertical direction lacks the three-cylinder structure
    """
    grid = t_grid(T)
    directions = primitive_directions(surface, grid[-1])
    tasks = [(surface, tuple(chunk), grid) for chunk in chunked(directions, chunk_size)]
    runner = runner or SweepRunner(name=f"cylinders-{surface.p}/{surface.q}")
    tally = runner.run(_cylinder_chunk, tasks, _add_counters, Counter())

    result = CensusResult(surface.p, surface.q, str(surface.alpha))
    for index, T_i in enumerate(grid):
        result.points.append(CensusPoint(T_i, 0, 0, tally[("nc", index)]))
    result.cylinders_per_direction = {
        count: total for (kind, count), total in tally.items() if kind == "directions"
    }
    logger.info(
        f"Cylinder census on {surface.describe()} up to T={grid[-1]}: "
        f"{len(directions)} directions, nc={result.points[-1].nc}"
    )
    return result


def run_census(surface: SlitTorusSurface, T, runner: Optional[SweepRunner] = None) -> CensusResult:
    """Saddle and cylinder censuses on the same grid, merged"""
    saddles = saddle_census(surface, T, runner)
    cylinders = cylinder_census(surface, T, runner)
    saddles.points = [replace(point, nc=other.nc) for point, other in zip(saddles.points, cylinders.points)]
    saddles.cylinders_per_direction = cylinders.cylinders_per_direction
    return saddles


def growth_ratio(point: CensusPoint, q: int, quantity: str) -> float:
    """N(T)/T^2 at one cutoff over (pi/4) * constant(q); NaN when the constant vanishes"""
    if quantity not in QUANTITIES:
        raise OutOfRange(f"unknown census quantity {quantity!r}", {"quantity": quantity})
    theory = float(theorem_constant(QUANTITIES[quantity], q)) * math.pi / 4
    if not theory:
        return math.nan
    return getattr(point, quantity) / float(point.T) ** 2 / theory


def quadratic_fit(census: CensusResult, quantities: Sequence[str] = tuple(QUANTITIES)) -> List[FitResult]:
    """
    Quadratic growth coefficients against the closed-form constants.

    coefficient = N(T)/T^2 at the largest cutoff; slope is the
    least-squares slope of N against T^2 (with intercept) over the grid;
    theory = (pi/4) * constant(q); ratio = coefficient / theory, NaN when
    the constant vanishes.

    Raises:
        OutOfRange: for fewer than MIN_FIT_POINTS cutoffs or an unknown quantity
    """
    if len(census.points) < MIN_FIT_POINTS:
        raise OutOfRange(
            f"a growth fit needs at least {MIN_FIT_POINTS} cutoffs, got {len(census.points)}",
            {"q": census.q, "cutoffs": len(census.points)},
        )
    squares = np.array([float(point.T) ** 2 for point in census.points])
    design = np.column_stack([squares, np.ones_like(squares)])
    fits = []
    for name in quantities:
        ratio = growth_ratio(census.points[-1], census.q, name)
        counts = np.array([getattr(point, name) for point in census.points], dtype=float)
        coefficient = float(counts[-1] / squares[-1])
        slope = float(np.linalg.lstsq(design, counts, rcond=None)[0][0])
        theory = float(theorem_constant(QUANTITIES[name], census.q)) * math.pi / 4
        fits.append(FitResult(name, coefficient, slope, theory, ratio))
    return fits
