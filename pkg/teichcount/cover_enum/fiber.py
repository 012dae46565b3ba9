"""
Enumeration of the fiber over the standard torus in cylinder coordinates
"""

import logging
from functools import lru_cache
from math import gcd
from typing import Iterator, List, Tuple

from ..arith import divisors, hermite_basis, iter_bilinear_tuples
from ..errors import OutOfRange
from ..models.data_models import Stratum
from .states import CylCoords11, FiberState, H2OneCyl, H2TwoCyl

logger = logging.getLogger(__name__)

Vector = Tuple[int, int]


def _h11_states(d: int) -> Iterator[CylCoords11]:
    for s1, w1, s2, w2 in iter_bilinear_tuples(d):
        if (w1, s1) > (w2, s2):
            continue
        relabel_fixed = (w1, s1) == (w2, s2)
        low = min(s1, s2)
        for sigma in (1, -1):
            k3_values = range(1, low + 1) if sigma == 1 else range(0, low)
            for k3 in k3_values:
                for t1 in range(w1):
                    for t2 in range(t1 if relabel_fixed else 0, w2):
                        for t3 in range(w1 + w2):
                            yield CylCoords11(sigma, w1, w2, s1, s2, k3, t1, t2, t3)


def _h2_states(d: int) -> Iterator[FiberState]:
    for h1, w1, h2, w2 in iter_bilinear_tuples(d):
        if w1 >= w2:
            continue
        for t1 in range(w1):
            for t2 in range(w2):
                yield H2TwoCyl(w1, w2, h1, h2, t1, t2)

    for h in divisors(d):
        length = d // h
        for l1 in range(1, length - 1):
            for l2 in range(1, length - l1):
                l3 = length - l1 - l2
                for t in range(length):
                    state = H2OneCyl(l1, l2, l3, h, t)
                    if state.canonical() == state:
                        yield state


def enumerate_fiber(stratum: Stratum | str, d: int) -> Iterator[FiberState]:
    """
    Every degree-d cover of the stratum over the standard torus, once each.

    H(1,1) covers are yielded as CylCoords11 in canonical form; H(2) covers
    as H2TwoCyl states followed by canonical H2OneCyl states. The order is
    deterministic.

    Args:
        stratum: H11 or H2
        d: Degree (d >= 1)

    Returns:
        Iterator over the states
    """
    stratum = Stratum(stratum)
    if d < 1:
        raise OutOfRange(f"degree must be positive, got {d}", {"d": d})
    if stratum is Stratum.H11:
        return _h11_states(d)
    return _h2_states(d)


def period_vectors(state: FiberState) -> List[Vector]:
    """Integer vectors generating the absolute-period lattice of a state"""
    if isinstance(state, CylCoords11):
        return [
            (state.w1, 0),
            (state.w2, 0),
            (state.t1 + state.t3, state.s1),
            (state.t2 + state.t3, state.s2),
        ]
    if isinstance(state, H2TwoCyl):
        return [(state.w1, 0), (state.w2, 0), (state.t1, state.h1), (state.t2, state.h2)]
    return [(state.l1, 0), (state.l2, 0), (state.l3, 0), (state.t, state.h)]


def lattice_of(state: FiberState) -> Tuple[int, int, int]:
    """
    Absolute-period lattice of a state as its Hermite basis (a, b, c),
    meaning Z(a, 0) + Z(b, c). The cover is primitive exactly when this is
    (1, 0, 1).
    """
    return hermite_basis(period_vectors(state))


def is_primitive(state: FiberState) -> bool:
    """
    Gcd test for primitivity (the cover does not factor through a larger torus).

    H11: gcd(s1, s2) = 1 and gcd(w1, w2, s1(t2+t3) - s2(t1+t3)) = 1.
    H2 two-cylinder: gcd(h1, h2) = 1 and gcd(w1, w2, t1*h2 - t2*h1) = 1.
    H2 one-cylinder: h = 1 and gcd(l1, l2, l3) = 1.
    """
    if isinstance(state, CylCoords11):
        cross = state.s1 * (state.t2 + state.t3) - state.s2 * (state.t1 + state.t3)
        return gcd(state.s1, state.s2) == 1 and gcd(state.w1, state.w2, cross) == 1
    if isinstance(state, H2TwoCyl):
        cross = state.t1 * state.h2 - state.t2 * state.h1
        return gcd(state.h1, state.h2) == 1 and gcd(state.w1, state.w2, cross) == 1
    return state.h == 1 and gcd(state.l1, state.l2, state.l3) == 1


@lru_cache(maxsize=None)
def fiber_count(stratum: Stratum | str, d: int) -> int:
    """Number of states yielded by enumerate_fiber"""
    return sum(1 for _ in enumerate_fiber(stratum, d))


@lru_cache(maxsize=None)
def primitive_fiber_count(stratum: Stratum | str, d: int) -> int:
    """Number of primitive states in the fiber"""
    count = sum(1 for state in enumerate_fiber(stratum, d) if is_primitive(state))
    logger.debug(f"Fiber {Stratum(stratum).value} d={d}: {count} primitive states")
    return count


def primitive_states(d: int) -> List[CylCoords11]:
    """All primitive H(1,1) states of degree d, in enumeration order"""
    return [state for state in enumerate_fiber(Stratum.H11, d) if is_primitive(state)]
