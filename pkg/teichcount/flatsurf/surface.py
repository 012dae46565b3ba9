"""
The slit-torus surface S(p/q, alpha)

Four unit squares glued into the torus R^2 / 2Z^2, drawn on the domain
[0, 2) x [-1, 1), with two vertical slits of half-height alpha at
x = p/q and x = 2 - p/q. Crossing the interior of one slit continues from
the other at the same height in the same direction; the slit endpoints
are the two simple zeros.
"""

import logging
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Any, Dict, Optional, Tuple

from ..errors import OutOfRange, PreconditionFailed, RationalAlpha
from .field import FieldScalar

logger = logging.getLogger(__name__)

Point = Tuple[Fraction, FieldScalar]
Vector = Tuple[Fraction, FieldScalar]

DEFAULT_ALPHA = "-1,1,2,1"  # sqrt(2) - 1


class Zero(str, Enum):
    """The two cone points"""
    TOP = "z_top"
    BOTTOM = "z_bot"

    @property
    def other(self) -> "Zero":
        return Zero.BOTTOM if self is Zero.TOP else Zero.TOP


class Side(str, Enum):
    """Side of a slit for rays running along it"""
    LEFT = "left"
    RIGHT = "right"


def parse_alpha(value: str) -> FieldScalar:
    """
    Parse a slit height.

    Accepts "A,B,N,C" for (A + B*sqrt(N))/C, or a plain rational "r" / "p/q"
    (which is always rejected downstream as rational).

    Raises:
        OutOfRange: if the text is malformed
    """
    text = value.strip()
    if re.fullmatch(r"-?\d+(/\d+)?", text):
        return FieldScalar.from_rational(Fraction(text))
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 4 or not all(re.fullmatch(r"-?\d+", part) for part in parts):
        raise OutOfRange(f"alpha must be 'A,B,N,C' integers, got {value!r}", {"alpha": value})
    a, b, n, c = (int(part) for part in parts)
    if c == 0 or n <= 0:
        raise OutOfRange(f"alpha needs C != 0 and N > 0, got {value!r}", {"alpha": value})
    return FieldScalar(a, b, n, c)


@dataclass(frozen=True)
class SlitTorusSurface:
    """
    S(p/q, alpha): a q-fold cover of R^2 / Lambda_base with
    Lambda_base = Z(2/q, 0) + Z(0, 2), of total area 4.
    """
    p: int
    q: int
    alpha: FieldScalar

    @property
    def a(self) -> Fraction:
        return Fraction(self.p, self.q)

    @property
    def a_prime(self) -> Fraction:
        return 2 - self.a

    @property
    def slit_abscissas(self) -> Tuple[Fraction, Fraction]:
        return self.a, self.a_prime

    @property
    def base_lattice(self) -> Tuple[Vector, Vector]:
        zero = FieldScalar.from_rational(0, self.alpha.n)
        return (Fraction(2, self.q), zero), (Fraction(0), zero + 2)

    @property
    def area(self) -> int:
        return 4

    @property
    def radicand(self) -> int:
        return self.alpha.n

    def scalar(self, value) -> FieldScalar:
        """Lift a rational into the surface's field"""
        if isinstance(value, FieldScalar):
            return value
        return FieldScalar.from_rational(value, self.alpha.n)

    def zero_points(self, zero: Zero) -> Tuple[Point, Point]:
        """The two representatives of a zero, on slit a and on slit a'"""
        y = self.alpha if zero is Zero.TOP else -self.alpha
        return (self.a, y), (self.a_prime, y)

    def zero_at(self, point: Point) -> Optional[Zero]:
        x, y = self.normalize(point)
        if self.slit_at(x) is None:
            return None
        if y == self.alpha:
            return Zero.TOP
        if y == -self.alpha:
            return Zero.BOTTOM
        return None

    def normalize(self, point: Point) -> Point:
        """Reduce a point into [0, 2) x [-1, 1)"""
        x, y = point
        return Fraction(x) % 2, self.scalar(y).mod(2, -1)

    def slit_at(self, x: Fraction) -> Optional[Fraction]:
        """The slit abscissa equal to x mod 2, if any"""
        x = Fraction(x) % 2
        if x == self.a:
            return self.a
        if x == self.a_prime:
            return self.a_prime
        return None

    def partner(self, slit: Fraction) -> Fraction:
        return self.a_prime if slit == self.a else self.a

    def in_slit(self, point: Point) -> bool:
        """Point lies in the open interior of a slit"""
        x, y = self.normalize(point)
        return self.slit_at(x) is not None and abs(y) < self.alpha

    def base_projection(self, x: Fraction) -> Fraction:
        """Abscissa in R / (2/q)Z"""
        return Fraction(x) % Fraction(2, self.q)

    def describe(self) -> str:
        return f"S({self.p}/{self.q}, {self.alpha})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "q": self.q,
            "alpha": str(self.alpha),
            "slits": [str(self.a), str(self.a_prime)],
            "area": self.area,
        }


def build_surface(p: int, q: int, alpha: FieldScalar | str = DEFAULT_ALPHA) -> SlitTorusSurface:
    """
    Construct S(p/q, alpha).

    Args:
        p, q: Slit position p/q with 0 < p < q and gcd(p, q) = 1
        alpha: Slit half-height, a FieldScalar or an "A,B,N,C" string

    Returns:
        The surface

    Raises:
        OutOfRange: if p/q or alpha is out of range
        RationalAlpha: if alpha is rational
    """
    if not (0 < p < q) or gcd(p, q) != 1:
        raise OutOfRange(f"need 0 < p < q with gcd(p, q) = 1, got p={p}, q={q}", {"p": p, "q": q})
    if isinstance(alpha, str):
        alpha = parse_alpha(alpha)
    if alpha.is_rational:
        raise RationalAlpha(f"alpha = {alpha} is rational", {"alpha": str(alpha)})
    if not (0 < alpha < 1):
        raise OutOfRange(f"alpha must lie in (0, 1), got {alpha}", {"alpha": str(alpha)})
    surface = SlitTorusSurface(p, q, alpha)
    logger.debug(f"Built {surface.describe()} with slits at {surface.a}, {surface.a_prime}")
    return surface


def zero_offset(surface: SlitTorusSurface) -> Vector:
    """pi(z_bot) - pi(z_top) in the base torus"""
    return Fraction(0), -2 * surface.alpha


@dataclass(frozen=True)
class Ray:
    """
    A ray leaving `start` in `direction`.

    `zero` is set for separatrices; `side` is set only for rays running
    along a slit, where the position alone does not say which side.
    """
    start: Point
    direction: Vector
    zero: Optional[Zero] = None
    side: Optional[Side] = None

    @classmethod
    def at(cls, start: Point, direction: Vector, side: Optional[Side] = None) -> "Ray":
        return cls(start, direction, None, side)

    @property
    def vertical(self) -> bool:
        return self.direction[0] == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "zero": self.zero.value if self.zero else None,
            "start": [str(self.start[0]), str(self.start[1])],
            "direction": [str(self.direction[0]), str(self.direction[1])],
            "side": self.side.value if self.side else None,
        }


def _into_slit(zero: Zero, vy: FieldScalar) -> bool:
    # the slit hangs below z_top and above z_bot
    return vy < 0 if zero is Zero.TOP else vy > 0


def rays_from(surface: SlitTorusSurface, zero: Zero, direction: Vector) -> Tuple[Ray, Ray]:
    """
    The two rays of a zero in a planar direction (cone angle 4 pi).

    In a general direction they leave the two representatives. In the
    vertical direction that runs along the slit both rays leave the
    representative on slit a, one down each side.

    Raises:
        PreconditionFailed: for the zero vector
    """
    vx, vy = Fraction(direction[0]), surface.scalar(direction[1])
    if vx == 0 and not vy:
        raise PreconditionFailed("a ray needs a nonzero direction", {"zero": zero.value})
    first, second = surface.zero_points(zero)
    if vx == 0 and _into_slit(zero, vy):
        return (
            Ray(first, (vx, vy), zero, Side.LEFT),
            Ray(first, (vx, vy), zero, Side.RIGHT),
        )
    return Ray(first, (vx, vy), zero), Ray(second, (vx, vy), zero)
