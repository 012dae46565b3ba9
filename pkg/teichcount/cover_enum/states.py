"""
Discrete states of the fiber over the standard torus

The marked-point offsets are a fixed symbolic epsilon, so every state is a
tuple of integers. All states are stored in canonical form under their
relabelling symmetry.
"""

from dataclasses import astuple, dataclass
from typing import Any, Dict, Tuple, Union

from ..errors import PreconditionFailed


@dataclass(frozen=True, order=True)
class CylCoords11:
    """
    Three-cylinder coordinates of a cover in H(1,1)

    Attributes:
        sigma: +1 or -1, the side of the second zero relative to the first
        w1, w2: Widths of the two narrow cylinders
        s1, s2: Integer parts of their heights
        k3: Integer datum of the wide cylinder height (h3 = k3 - sigma * eps)
        t1, t2, t3: Twists, t1 mod w1, t2 mod w2, t3 mod w1 + w2
    """
    sigma: int
    w1: int
    w2: int
    s1: int
    s2: int
    k3: int
    t1: int
    t2: int
    t3: int

    @property
    def d(self) -> int:
        return self.s1 * self.w1 + self.s2 * self.w2

    @property
    def wide_width(self) -> int:
        return self.w1 + self.w2

    def k3_range(self) -> range:
        """Admissible k3 values for the current sigma and heights"""
        top = min(self.s1, self.s2)
        return range(1, top + 1) if self.sigma == 1 else range(0, top)

    def validate(self) -> "CylCoords11":
        """
        Check the coordinate ranges.

        Raises:
            PreconditionFailed: on any out-of-range field
        """
        problems = []
        if self.sigma not in (1, -1):
            problems.append("sigma")
        if min(self.w1, self.w2, self.s1, self.s2) < 1:
            problems.append("widths/heights")
        elif self.k3 not in self.k3_range():
            problems.append("k3")
        if not (0 <= self.t1 < max(self.w1, 1) and 0 <= self.t2 < max(self.w2, 1)):
            problems.append("t1/t2")
        if not 0 <= self.t3 < max(self.wide_width, 1):
            problems.append("t3")
        if problems:
            raise PreconditionFailed(
                f"invalid H11 state ({', '.join(problems)}): {self}",
                {"state": self.to_dict(), "fields": problems},
            )
        return self

    def swapped(self) -> "CylCoords11":
        """Exchange the labels of the two narrow cylinders"""
        return CylCoords11(
            self.sigma, self.w2, self.w1, self.s2, self.s1, self.k3, self.t2, self.t1, self.t3
        )

    def canonical(self) -> "CylCoords11":
        if (self.w2, self.s2, self.t2) < (self.w1, self.s1, self.t1):
            return self.swapped()
        return self

    def is_canonical(self) -> bool:
        return (self.w1, self.s1, self.t1) <= (self.w2, self.s2, self.t2)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "sigma": self.sigma,
            "w": [self.w1, self.w2],
            "s": [self.s1, self.s2],
            "k3": self.k3,
            "t": [self.t1, self.t2, self.t3],
        }


@dataclass(frozen=True, order=True)
class H2TwoCyl:
    """Two horizontal cylinders of widths w1 < w2 in a cover in H(2)"""
    w1: int
    w2: int
    h1: int
    h2: int
    t1: int
    t2: int

    @property
    def d(self) -> int:
        return self.h1 * self.w1 + self.h2 * self.w2

    def validate(self) -> "H2TwoCyl":
        if not (
            1 <= self.w1 < self.w2
            and min(self.h1, self.h2) >= 1
            and 0 <= self.t1 < self.w1
            and 0 <= self.t2 < self.w2
        ):
            raise PreconditionFailed(f"invalid two-cylinder H2 state: {self}", {"state": self.to_dict()})
        return self

    def canonical(self) -> "H2TwoCyl":
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cylinders": 2,
            "w": [self.w1, self.w2],
            "h": [self.h1, self.h2],
            "t": [self.t1, self.t2],
        }


@dataclass(frozen=True, order=True)
class H2OneCyl:
    """
    One horizontal cylinder of circumference L = l1 + l2 + l3 and height h

    The top boundary carries three saddle connections of lengths l1, l2, l3
    in cyclic order; the twist t is taken mod L.
    """
    l1: int
    l2: int
    l3: int
    h: int
    t: int

    @property
    def length(self) -> int:
        return self.l1 + self.l2 + self.l3

    @property
    def d(self) -> int:
        return self.length * self.h

    def rotated(self) -> "H2OneCyl":
        """Cyclic relabelling of the three saddle connections"""
        return H2OneCyl(self.l2, self.l3, self.l1, self.h, (self.t - 2 * self.l1) % self.length)

    def orbit(self) -> Tuple["H2OneCyl", "H2OneCyl", "H2OneCyl"]:
        once = self.rotated()
        return self, once, once.rotated()

    def canonical(self) -> "H2OneCyl":
        return min(self.orbit(), key=astuple)

    def validate(self) -> "H2OneCyl":
        if min(self.l1, self.l2, self.l3, self.h) < 1 or not 0 <= self.t < self.length:
            raise PreconditionFailed(f"invalid one-cylinder H2 state: {self}", {"state": self.to_dict()})
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cylinders": 1,
            "l": [self.l1, self.l2, self.l3],
            "h": self.h,
            "t": self.t,
        }


FiberState = Union[CylCoords11, H2TwoCyl, H2OneCyl]
