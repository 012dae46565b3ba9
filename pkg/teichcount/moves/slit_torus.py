"""
Two-slit torus presentation of covers with equal narrow widths
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterable, Tuple

from ..arith import hermite_basis, spans_z2
from ..errors import PreconditionFailed
from .kernel_moves import ThreeCylState
from .smith import Matrix, mat_vec

Vector = Tuple[int, int]


@dataclass(frozen=True)
class SlitTorusState:
    """
    Torus R^2/L with two short slits in direction (eps, eps), based at 0 and u

    The lattice is stored by its Hermite basis (a, b, c), L = Z(a, 0) + Z(b, c),
    and u is reduced modulo L, so equal surfaces compare equal.
    """
    basis: Tuple[int, int, int]
    u: Vector

    @classmethod
    def from_vectors(cls, vectors: Iterable[Vector], u: Vector) -> "SlitTorusState":
        a, b, c = hermite_basis(vectors)
        u1, u2 = u
        k = u2 // c
        u1, u2 = u1 - k * b, u2 - k * c
        return cls((a, b, c), (u1 % a, u2))

    @property
    def matrix(self) -> Matrix:
        """Basis vectors of L as the columns of a 2x2 matrix"""
        a, b, c = self.basis
        return ((a, b), (0, c))

    @property
    def columns(self) -> Tuple[Vector, Vector]:
        a, b, c = self.basis
        return (a, 0), (b, c)

    @property
    def d(self) -> int:
        return self.basis[0] * self.basis[2]

    def is_primitive(self) -> bool:
        """L together with u generates Z^2"""
        return spans_z2([*self.columns, self.u])

    def apply(self, g: Matrix) -> "SlitTorusState":
        """Image under g in SL(2, Z), acting on the lattice and the slit offset"""
        return SlitTorusState.from_vectors([mat_vec(g, v) for v in self.columns], mat_vec(g, self.u))

    def to_dict(self) -> Dict[str, Any]:
        a, b, c = self.basis
        return {"L": [[a, b], [0, c]], "u": list(self.u), "d": self.d}


def canonical_slit_torus(d: int) -> SlitTorusState:
    """The 1 x d strip with slits based at (0, 0) and (0, 1)"""
    return SlitTorusState((1, 0, d), (0, 1))


def to_slit_torus(s: ThreeCylState) -> SlitTorusState:
    """
    Develop a state with two narrow cylinders of equal width w into a slit torus.

    With t3 = w every vertical trajectory passes from the first narrow
    cylinder into the second; stacking them over the wide cylinder gives a
    parallelogram of width w and area d. Shortening both slits to (eps, eps)
    is a vertical kernel move of k3 steps that leaves (L, u) unchanged.

    Args:
        s: State with w1 == w2 and t3 == w1

    Returns:
        SlitTorusState with L = <(w, 0), (t1 + t2, s1 + s2)> and u = (t1, s1)

    Raises:
        PreconditionFailed: if the widths differ or the twists are not prepared
    """
    c = s.coords
    if c.w1 != c.w2:
        raise PreconditionFailed(
            f"slit torus needs equal narrow widths, got ({c.w1}, {c.w2})", {"state": c.to_dict()}
        )
    if c.t3 != c.w1:
        raise PreconditionFailed(
            f"slit torus needs t3 = {c.w1}, got {c.t3}", {"state": c.to_dict()}
        )
    return SlitTorusState.from_vectors(
        [(c.w1, 0), (c.t1 + c.t2, c.s1 + c.s2)],
        (c.t1, c.s1),
    )
