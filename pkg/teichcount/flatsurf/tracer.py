"""
Exact development of straight segments on S(p/q, alpha)

x stays rational and y stays in Q(sqrt N) along any segment whose
holonomy has a rational x-component, so every decision below is an exact
comparison.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..errors import DegenerateStart, PreconditionFailed
from .field import FieldScalar
from .surface import Point, Ray, Side, SlitTorusSurface, Vector, Zero

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LandsOnZero:
    """The segment ends exactly at a zero and meets none before"""
    zero: Zero

    def to_dict(self):
        return {"outcome": "lands_on_zero", "zero": self.zero.value}


@dataclass(frozen=True)
class HitsZeroMidway:
    """The segment runs into a zero after `fraction` of its holonomy"""
    zero: Zero
    fraction: FieldScalar

    def to_dict(self):
        return {"outcome": "hits_zero_midway", "zero": self.zero.value, "fraction": str(self.fraction)}


@dataclass(frozen=True)
class EndsAtRegularPoint:
    """The segment ends at a regular point, given in the normalized domain"""
    position: Point

    def to_dict(self):
        return {"outcome": "ends_at_regular_point", "position": [str(c) for c in self.position]}


TraceOutcome = Union[LandsOnZero, HitsZeroMidway, EndsAtRegularPoint]


def _check_direction(surface: SlitTorusSurface, ray: Ray, vx: Fraction, vy: FieldScalar) -> None:
    dx, dy = Fraction(ray.direction[0]), surface.scalar(ray.direction[1])
    if vx == 0 and not vy:
        raise PreconditionFailed("holonomy must be nonzero", {"ray": ray.to_dict()})
    cross = vx * dy - vy * dx
    dot = vy * dy + vx * dx
    if cross or dot <= 0:
        raise PreconditionFailed(
            "holonomy is not a positive multiple of the ray direction",
            {"ray": ray.to_dict(), "holonomy": [str(vx), str(vy)]},
        )


def trace_ray(surface: SlitTorusSurface, ray: Ray, holonomy: Vector | None = None) -> TraceOutcome:
    """
    Develop the segment of displacement `holonomy` from the start of `ray`.

    Crossing a slit line at |y| < alpha continues from the partner slit;
    at |y| > alpha the line is crossed as is; at |y| = alpha the segment
    meets a zero.

    Args:
        surface: The surface
        ray: Start point, direction and (for rays along a slit) side
        holonomy: Displacement, a positive multiple of the ray direction
            (defaults to the direction itself)

    Returns:
        LandsOnZero, HitsZeroMidway or EndsAtRegularPoint

    Raises:
        PreconditionFailed: if the holonomy is zero or points elsewhere
        DegenerateStart: if the ray starts inside a slit with no side given
    """
    vx, vy = holonomy if holonomy is not None else ray.direction
    vx, vy = Fraction(vx), surface.scalar(vy)
    _check_direction(surface, ray, vx, vy)
    x, y = surface.normalize(ray.start)

    if vx == 0:
        return _trace_vertical(surface, ray, x, y, vy)

    if surface.in_slit((x, y)):
        if ray.side is None:
            raise DegenerateStart("ray starts inside a slit without a side", {"ray": ray.to_dict()})
        # leaving through the slit itself continues from the partner
        if (ray.side is Side.LEFT) == (vx > 0):
            x = surface.partner(surface.slit_at(x))
    return _trace_across(surface, x, y, vx, vy)


def _trace_across(
    surface: SlitTorusSurface, x: Fraction, y: FieldScalar, vx: Fraction, vy: FieldScalar
) -> TraceOutcome:
    alpha = surface.alpha
    a, a2 = surface.slit_abscissas
    if vx > 0:
        lines = sorted((a, a2, a + 2, a2 + 2))
    else:
        lines = sorted((a - 2, a2 - 2, a, a2), reverse=True)
    t = Fraction(0)

    while True:
        line = next(L for L in lines if (L > x if vx > 0 else L < x))
        t_cross = t + (line - x) / vx
        if t_cross > 1:
            return EndsAtRegularPoint(surface.normalize((x + (1 - t) * vx, y + (1 - t) * vy)))
        y_cross = (y + (t_cross - t) * vy).mod(2, -1)
        slit = line % 2
        height = abs(y_cross)
        if height == alpha:
            zero = Zero.TOP if y_cross == alpha else Zero.BOTTOM
            if t_cross == 1:
                return LandsOnZero(zero)
            return HitsZeroMidway(zero, surface.scalar(t_cross))
        if height < alpha:
            if t_cross == 1:
                return EndsAtRegularPoint((slit, y_cross))
            x = surface.partner(slit)
        else:
            x = slit
        y, t = y_cross, t_cross


def _trace_vertical(
    surface: SlitTorusSurface, ray: Ray, x: Fraction, y: FieldScalar, vy: FieldScalar
) -> TraceOutcome:
    if surface.slit_at(x) is None:
        return EndsAtRegularPoint(surface.normalize((x, y + vy)))

    alpha = surface.alpha
    upward = vy > 0
    entering = abs(y) < alpha or (y == alpha and not upward) or (y == -alpha and upward)
    if entering and ray.side is None:
        raise DegenerateStart("vertical ray along a slit needs a side", {"ray": ray.to_dict()})

    def distance(level: FieldScalar) -> FieldScalar:
        gap = ((level - y) if upward else (y - level)).mod(2)
        return gap if gap else surface.scalar(2)

    to_top, to_bottom = distance(alpha), distance(-alpha)
    zero, gap = (Zero.TOP, to_top) if to_top < to_bottom else (Zero.BOTTOM, to_bottom)
    length = abs(vy)
    if length < gap:
        return EndsAtRegularPoint(surface.normalize((x, y + vy)))
    if length == gap:
        return LandsOnZero(zero)
    return HitsZeroMidway(zero, gap / length)
