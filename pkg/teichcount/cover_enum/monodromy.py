"""
Brute-force monodromy oracle for covers of the torus

Permutations are tuples in word notation, x = (x(0), ..., x(d-1)), and
compose right to left: (P * Q)(i) = P[Q[i]].

A degree-d cover of the torus branched over one point (H(2)) is a pair
(A, B) with commutator [A, B] a 3-cycle; a cover branched over two points
(H(1,1)) is a triple (A, B, C1) with C1 and C2 = C1^-1 [A, B] both
transpositions. The generated group must be transitive. Covers are counted
up to simultaneous conjugation.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
from sympy.utilities.iterables import partitions

from ..arith import elementary_divisors
from ..config.settings import get_settings
from ..errors import BoundExceeded, NonIntegerResult, OutOfRange, PreconditionFailed
from ..models.data_models import Stratum
from ..workers import SweepRunner

logger = logging.getLogger(__name__)

Perm = Tuple[int, ...]


def compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    """p * q, applying q first"""
    return tuple(p[i] for i in q)


def inverse(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for i, image in enumerate(p):
        inv[image] = i
    return tuple(inv)


def commutator(a: Sequence[int], b: Sequence[int]) -> Perm:
    """[A, B] = A B A^-1 B^-1"""
    return compose(compose(a, b), compose(inverse(a), inverse(b)))


def cycle_type(p: Sequence[int]) -> Tuple[int, ...]:
    """Lengths of the non-trivial cycles, in decreasing order"""
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            length += 1
        if length > 1:
            lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def transpositions(d: int) -> List[Perm]:
    result = []
    for i, j in itertools.combinations(range(d), 2):
        perm = list(range(d))
        perm[i], perm[j] = j, i
        result.append(tuple(perm))
    return result


def is_transitive(generators: Sequence[Sequence[int]], d: int) -> bool:
    """Forward orbit of 0 under the generators covers all d sheets"""
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for g in generators:
            j = g[i]
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == d


def centralizer_order(generators: Sequence[Sequence[int]], d: int) -> int:
    """
    Number of permutations commuting with every generator.

    The generated group is assumed transitive, so a commuting permutation is
    fixed by the image of sheet 0.
    """
    count = 0
    for target in range(d):
        phi = {0: target}
        stack = [0]
        consistent = True
        while stack and consistent:
            i = stack.pop()
            for g in generators:
                image = g[phi[i]]
                j = g[i]
                if j in phi:
                    if phi[j] != image:
                        consistent = False
                        break
                else:
                    phi[j] = image
                    stack.append(j)
        if consistent and len(set(phi.values())) == d:
            count += 1
    return count


@dataclass(frozen=True)
class MonodromyTuple:
    """Monodromy of a degree-d cover: A, B and, for H(1,1), C1"""
    d: int
    a: Perm
    b: Perm
    c1: Optional[Perm] = None

    @property
    def stratum(self) -> Stratum:
        return Stratum.H2 if self.c1 is None else Stratum.H11

    @property
    def c2(self) -> Optional[Perm]:
        if self.c1 is None:
            return None
        return compose(inverse(self.c1), commutator(self.a, self.b))

    @property
    def generators(self) -> Tuple[Perm, ...]:
        return (self.a, self.b) if self.c1 is None else (self.a, self.b, self.c1)

    def is_valid(self) -> bool:
        """Branching data of the stratum and transitivity"""
        if self.c1 is None:
            branching_ok = cycle_type(commutator(self.a, self.b)) == (3,)
        else:
            branching_ok = cycle_type(self.c1) == (2,) and cycle_type(self.c2) == (2,)
        return branching_ok and is_transitive(self.generators, self.d)

    def conjugate(self, g: Sequence[int]) -> "MonodromyTuple":
        """g X g^-1 applied to every permutation"""
        g_inv = inverse(g)

        def conj(p: Optional[Perm]) -> Optional[Perm]:
            return None if p is None else compose(compose(g, p), g_inv)

        return MonodromyTuple(self.d, conj(self.a), conj(self.b), conj(self.c1))

    def to_dict(self) -> Dict[str, object]:
        return {
            "d": self.d,
            "A": list(self.a),
            "B": list(self.b),
            "C1": None if self.c1 is None else list(self.c1),
        }


def sheet_graph(t: MonodromyTuple) -> nx.MultiDiGraph:
    """Sheets with an edge i -> g(i) per generator, labelled by its period"""
    graph = nx.MultiDiGraph()
    graph.add_nodes_from(range(t.d))
    labels = [(t.a, (1, 0)), (t.b, (0, 1))]
    if t.c1 is not None:
        labels.append((t.c1, (0, 0)))
    for perm, label in labels:
        for i in range(t.d):
            graph.add_edge(i, perm[i], label=label)
    return graph


def homology_image(t: MonodromyTuple) -> Tuple[int, int]:
    """
    Elementary divisors of the image of the cover's homology in Z^2.

    Sheet positions come from a BFS tree of the sheet graph; every edge
    closes a cycle whose period is position(i) + label - position(j).

    Args:
        t: A transitive monodromy tuple

    Returns:
        (d1, d2) with d1 | d2; the cover is primitive iff this is (1, 1)

    Raises:
        PreconditionFailed: if the tuple is not transitive
    """
    graph = sheet_graph(t)
    position = {0: (0, 0)}
    for u, v in nx.bfs_edges(graph.to_undirected(as_view=True), 0):
        forward = graph.get_edge_data(u, v)
        if forward:
            dx, dy = next(iter(forward.values()))["label"]
            position[v] = (position[u][0] + dx, position[u][1] + dy)
        else:
            dx, dy = next(iter(graph.get_edge_data(v, u).values()))["label"]
            position[v] = (position[u][0] - dx, position[u][1] - dy)

    if len(position) != t.d:
        raise PreconditionFailed("monodromy tuple is not transitive", {"tuple": t.to_dict()})

    periods = [
        (position[i][0] + dx - position[j][0], position[i][1] + dy - position[j][1])
        for i, j, (dx, dy) in graph.edges(data="label")
    ]
    return elementary_divisors(periods)


def class_representatives(d: int) -> Iterator[Tuple[Perm, int]]:
    """One permutation per cycle type, with the order of its centralizer"""
    for partition in partitions(d):
        multiplicities = dict(partition)
        perm: List[int] = []
        order = 1
        for length, count in sorted(multiplicities.items()):
            order *= length ** count * factorial(count)
            for _ in range(count):
                start = len(perm)
                perm.extend(range(start + 1, start + length))
                perm.append(start)
        yield tuple(perm), order


def _oracle_chunk(task: Tuple[str, int, Tuple[Tuple[Perm, int], ...]]) -> Tuple[Fraction, Fraction]:
    """
    Weighted class counts for a chunk of representatives A0.

    A tuple with A = A0 stands for |class(A0)| tuples overall; dividing
    by d! leaves |Cent(tuple)| / |Cent(A0)|.
    """
    stratum_value, d, reps = task
    stratum = Stratum(stratum_value)
    swaps = transpositions(d) if stratum is Stratum.H11 else []
    total = Fraction(0)
    primitive = Fraction(0)

    for a, a_centralizer in reps:
        a_inv = inverse(a)
        for b in itertools.permutations(range(d)):
            k = compose(compose(a, b), compose(a_inv, inverse(b)))
            if stratum is Stratum.H2:
                if cycle_type(k) != (3,):
                    continue
                candidates = [MonodromyTuple(d, a, b)]
            else:
                candidates = [
                    MonodromyTuple(d, a, b, c1)
                    for c1 in swaps
                    if cycle_type(compose(c1, k)) == (2,)
                ]
            for t in candidates:
                if not is_transitive(t.generators, d):
                    continue
                weight = Fraction(centralizer_order(t.generators, d), a_centralizer)
                total += weight
                if homology_image(t) == (1, 1):
                    primitive += weight
    return total, primitive


def _merge_counts(acc: Tuple[Fraction, Fraction], partial: Tuple[Fraction, Fraction]) -> Tuple[Fraction, Fraction]:
    return acc[0] + partial[0], acc[1] + partial[1]


def oracle_bound(stratum: Stratum | str) -> int:
    settings = get_settings()
    return settings.oracle_bound_h2 if Stratum(stratum) is Stratum.H2 else settings.oracle_bound_h11


def monodromy_classes(
    stratum: Stratum | str, d: int, runner: SweepRunner | None = None
) -> Tuple[int, int]:
    """
    Count degree-d covers by brute force over monodromy tuples.

    Args:
        stratum: H11 or H2
        d: Degree, at most the oracle bound of the stratum
        runner: Optional sweep runner; work is split over cycle types of A

    Returns:
        (total, primitive) numbers of conjugacy classes

    Raises:
        BoundExceeded: above the oracle bound
        NonIntegerResult: if the weighted sums are not integers
    """
    stratum = Stratum(stratum)
    if d < 1:
        raise OutOfRange(f"degree must be positive, got {d}", {"d": d})
    bound = oracle_bound(stratum)
    if d > bound:
        raise BoundExceeded(
            f"monodromy oracle for {stratum.value} is limited to d <= {bound}, got {d}",
            {"stratum": stratum.value, "d": d, "bound": bound},
        )

    tasks = [(stratum.value, d, (rep,)) for rep in class_representatives(d)]
    runner = runner or SweepRunner(name=f"oracle-{stratum.value}-{d}")
    total, primitive = runner.run(_oracle_chunk, tasks, _merge_counts, (Fraction(0), Fraction(0)))

    for name, value in (("total", total), ("primitive", primitive)):
        if value.denominator != 1:
            raise NonIntegerResult(
                f"oracle {name} count for {stratum.value} d={d} is {value}",
                {"stratum": stratum.value, "d": d, "value": str(value)},
            )
    logger.info(f"Oracle {stratum.value} d={d}: {total} classes, {primitive} primitive")
    return int(total), int(primitive)
