"""
Kernel-foliation moves on the fiber of H(1,1) covers

Both moves drag the second zero around the base torus while the first
stays put: F_h horizontally by one unit, F_v^sigma vertically by one unit.
Neither changes the absolute-period lattice of the cover, so both preserve
primitivity.
"""

import logging
from dataclasses import dataclass, replace
from typing import Any, Dict

from ..cover_enum import CylCoords11, is_primitive
from ..errors import NotPrimitive, PreconditionFailed

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ThreeCylState:
    """A canonical CylCoords11 state together with its degree"""
    coords: CylCoords11
    d: int

    def __post_init__(self):
        if self.coords.d != self.d:
            raise PreconditionFailed(
                f"state has degree {self.coords.d}, expected {self.d}",
                {"state": self.coords.to_dict(), "d": self.d},
            )

    @classmethod
    def of(cls, coords: CylCoords11) -> "ThreeCylState":
        coords = coords.validate().canonical()
        return cls(coords, coords.d)

    @property
    def primitive(self) -> bool:
        return is_primitive(self.coords)

    def to_dict(self) -> Dict[str, Any]:
        return {"d": self.d, **self.coords.to_dict()}


def _shift_twists(c: CylCoords11, step: int) -> CylCoords11:
    return replace(
        c,
        t1=(c.t1 + step) % c.w1,
        t2=(c.t2 + step) % c.w2,
        t3=(c.t3 - step) % c.wide_width,
    ).canonical()


def move_horizontal(s: ThreeCylState) -> ThreeCylState:
    """
    F_h: (t1, t2, t3) -> (t1 + sigma, t2 + sigma, t3 - sigma), reduced mod
    (w1, w2, w1 + w2). Every other coordinate is fixed.
    """
    return ThreeCylState(_shift_twists(s.coords, s.coords.sigma), s.d)


def move_horizontal_inverse(s: ThreeCylState) -> ThreeCylState:
    """Inverse of F_h: the same update with sigma negated"""
    return ThreeCylState(_shift_twists(s.coords, -s.coords.sigma), s.d)


def case_b_window(c: CylCoords11) -> range:
    """
    Values of t3 for which the next vertical collapse rotates the widths.

    The comparison t3 - sigma*eps > w1 (and the matching upper bound by w2)
    resolves to integers once the sign of the eps-term is known.
    """
    if c.sigma == 1:
        return range(c.w1 + 1, c.w2 + 1)
    return range(c.w1, c.w2)


def collapse_steps(c: CylCoords11) -> int:
    """Number of F_v^sigma applications up to and including the next collapse"""
    return c.k3 if c.sigma == 1 else c.k3 + 1


def _lifted_t3(c: CylCoords11) -> int:
    # representative of t3 with t3 - sigma*eps in (-w1, w2)
    top = c.w2 if c.sigma == 1 else c.w2 - 1
    return c.t3 if c.t3 <= top else c.t3 - c.wide_width


def _collapse_flip(c: CylCoords11) -> CylCoords11:
    """Wide cylinder shrinks away with unchanged widths; sigma changes sign"""
    lifted = _lifted_t3(c)
    return CylCoords11(
        sigma=-c.sigma,
        w1=c.w1,
        w2=c.w2,
        s1=c.s1,
        s2=c.s2,
        k3=0 if c.sigma == 1 else 1,
        t1=(c.t1 + 2 * lifted) % c.w1,
        t2=(c.t2 + 2 * lifted) % c.w2,
        t3=(-c.t3) % c.wide_width,
    ).canonical()


def _collapse_rotate(c: CylCoords11) -> CylCoords11:
    """Widths (w1, w2, w1 + w2) become (w1, w2 - w1, w2)"""
    narrow = c.w2 - c.w1
    return CylCoords11(
        sigma=c.sigma,
        w1=c.w1,
        w2=narrow,
        s1=c.s1 + c.s2,
        s2=c.s2,
        k3=c.s2 if c.sigma == 1 else c.s2 - 1,
        t1=c.t1,
        t2=(c.w2 - c.t3) % narrow,
        t3=(c.t2 + 2 * c.t3 - c.w1) % c.w2,
    ).canonical()


def move_vertical(s: ThreeCylState) -> ThreeCylState:
    """
    F_v^sigma: move the second zero one unit vertically.

    Away from a collapse only k3 decreases by one. At a collapse the wide
    cylinder disappears and the surface is re-cut: inside the case-B window
    the widths rotate to (w1, w2 - w1, w2), otherwise sigma flips and the
    widths stay.

    Args:
        s: A primitive state

    Returns:
        The moved state, in canonical form

    Raises:
        NotPrimitive: if the state is not primitive
    """
    c = s.coords
    if not is_primitive(c):
        raise NotPrimitive("vertical move needs a primitive state", {"state": c.to_dict()})

    if collapse_steps(c) > 1:
        return ThreeCylState(replace(c, k3=c.k3 - 1), s.d)
    if c.t3 in case_b_window(c):
        moved = _collapse_rotate(c)
    else:
        moved = _collapse_flip(c)
    logger.debug(f"Collapse {c} -> {moved}")
    return ThreeCylState(moved, s.d)
