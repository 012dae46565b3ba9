"""
Normalization of primitive H(1,1) covers to the canonical cover S0

The path follows the connectivity argument: rotate widths with F_h and
F_v^sigma until the narrow widths agree, pass to the two-slit torus, move
the lattice to Z x dZ with an elementary-divisor change of basis and finish
with a shear that puts the second slit at (0, 1).
"""

import logging
from math import gcd
from typing import Optional

from ..config.settings import get_settings
from ..cover_enum import CylCoords11, is_primitive
from ..errors import InvariantViolation, NonTermination, NotPrimitive, OutOfRange
from ..models.data_models import MoveKind, MoveTrace
from .kernel_moves import (
    ThreeCylState,
    case_b_window,
    collapse_steps,
    move_horizontal,
    move_vertical,
)
from .slit_torus import SlitTorusState, canonical_slit_torus, to_slit_torus
from .smith import det, mat_mul, smith_normal_form

logger = logging.getLogger(__name__)


def canonical_state(d: int) -> ThreeCylState:
    """
    The cylinder coordinates of S0: two unit-width narrow cylinders of
    heights 1 and d - 1 and a wide cylinder of height eps.
    """
    if d < 2:
        raise OutOfRange(f"canonical cover needs d >= 2, got {d}", {"d": d})
    return ThreeCylState(CylCoords11(-1, 1, 1, 1, d - 1, 0, 0, 0, 1), d)


class _Budget:
    def __init__(self, d: int, limit: int):
        self.d = d
        self.limit = limit
        self.used = 0

    def spend(self, steps: int, trace: MoveTrace) -> None:
        self.used += steps
        if self.used > self.limit:
            raise NonTermination(
                f"normalization at d={self.d} exceeded {self.limit} moves",
                {"d": self.d, "budget": self.limit, "start": trace.start.to_dict()},
            )


def _repeat(move, s: ThreeCylState, times: int) -> ThreeCylState:
    for _ in range(times):
        s = move(s)
    return s


def _reduce_widths(s: ThreeCylState, trace: MoveTrace, budget: _Budget) -> ThreeCylState:
    """Apply F_h and F_v^sigma until the two narrow widths agree"""
    while s.coords.w1 < s.coords.w2:
        c = s.coords
        window = case_b_window(c)
        # F_h moves t3 by -sigma, so the window is reached within w1 + w2 steps
        shift = 0 if c.t3 in window else (c.sigma * (c.t3 - window.start)) % c.wide_width
        budget.spend(shift, trace)
        s = _repeat(move_horizontal, s, shift)
        trace.add(MoveKind.HORIZONTAL, shift, sigma=c.sigma)
        if s.coords.t3 not in case_b_window(s.coords):
            raise InvariantViolation(
                "horizontal moves missed the rotation window", {"state": s.to_dict()}
            )

        before = s.coords.wide_width
        steps = collapse_steps(s.coords)
        budget.spend(steps, trace)
        sigma = s.coords.sigma
        s = _repeat(move_vertical, s, steps)
        trace.add(MoveKind.VERTICAL, steps, sigma=sigma, widths=[s.coords.w1, s.coords.w2])
        if s.coords.wide_width >= before:
            raise InvariantViolation(
                "vertical collapse did not reduce the widths", {"state": s.to_dict()}
            )
    return s


def _prepare_slits(s: ThreeCylState, trace: MoveTrace, budget: _Budget) -> ThreeCylState:
    """Rotate twists with F_h until t3 = w"""
    c = s.coords
    shift = (c.sigma * (c.t3 - c.w1)) % c.wide_width
    budget.spend(shift, trace)
    s = _repeat(move_horizontal, s, shift)
    trace.add(MoveKind.HORIZONTAL, shift, sigma=c.sigma)
    return s


def _smith_step(slit: SlitTorusState, trace: MoveTrace) -> SlitTorusState:
    d1, d2, left, _ = smith_normal_form(slit.matrix)
    if det(left) == -1:
        left = mat_mul(((-1, 0), (0, 1)), left)
    if d1 != 1:
        raise InvariantViolation(
            f"primitive slit torus has elementary divisors ({d1}, {d2})",
            {"slit": slit.to_dict(), "d1": d1, "d2": d2},
        )
    reduced = slit.apply(left)
    if reduced != slit:
        trace.add(MoveKind.SMITH, 1, g=[list(row) for row in left], d1=d1, d2=d2)
    return reduced


def _shear_step(slit: SlitTorusState, trace: MoveTrace) -> SlitTorusState:
    d = slit.d
    u2 = slit.u[1]
    if gcd(u2, d) != 1:
        raise InvariantViolation(
            f"slit offset {u2} is not a unit mod {d}", {"slit": slit.to_dict()}
        )
    if u2 == 1:
        return slit
    k = pow(u2, -1, d)
    b = (u2 * k - 1) // d
    g = ((u2, b), (d, k))
    trace.add(MoveKind.SHEAR, 1, g=[list(row) for row in g], k=k)
    return slit.apply(g)


def normalize_to_canonical(s: ThreeCylState | CylCoords11, budget: Optional[int] = None) -> MoveTrace:
    """
    Move a primitive state to the canonical cover S0.

    Args:
        s: Primitive state (a bare CylCoords11 is wrapped)
        budget: Maximum number of elementary moves (default 10 * d^3)

    Returns:
        MoveTrace from s whose final state is the 1 x d slit torus with
        slits at (0, 0) and (0, 1)

    Raises:
        NotPrimitive: if s is not primitive
        NonTermination: if the move budget is exhausted
        InvariantViolation: if the endgame finds a non-unit divisor
    """
    if isinstance(s, CylCoords11):
        s = ThreeCylState.of(s)
    s.coords.validate()
    if not is_primitive(s.coords):
        raise NotPrimitive("only primitive states can be normalized", {"state": s.to_dict()})

    d = s.d
    trace = MoveTrace(d=d, start=s)
    guard = _Budget(d, budget if budget is not None else get_settings().step_budget(d))

    s = _reduce_widths(s, trace, guard)
    s = _prepare_slits(s, trace, guard)
    # shortening the slits is k3 vertical steps that keep (L, u)
    guard.spend(s.coords.k3, trace)
    trace.add(MoveKind.SHORTEN, s.coords.k3)
    slit = to_slit_torus(s)

    slit = _smith_step(slit, trace)
    slit = _shear_step(slit, trace)

    target = canonical_slit_torus(d)
    if slit != target:
        raise InvariantViolation(
            f"normalization ended at {slit.to_dict()} instead of S0",
            {"final": slit.to_dict(), "start": trace.start.to_dict()},
        )
    trace.final = slit
    logger.debug(f"Normalized {trace.start.coords} in {trace.length} moves")
    return trace
