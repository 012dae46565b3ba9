"""
Sublattices of Z^2 given by generating vectors
"""

from math import gcd
from typing import Iterable, Tuple

from ..errors import Singular

Vector = Tuple[int, int]


def ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0"""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        k, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def hermite_basis(vectors: Iterable[Vector]) -> Tuple[int, int, int]:
    """
    Hermite basis of the lattice spanned by integer vectors.

    Returns (a, b, c) such that the lattice equals Z(a, 0) + Z(b, c) with
    a > 0, c > 0 and 0 <= b < a.

    Raises:
        Singular: if the vectors span a lattice of rank < 2
    """
    a = 0
    b, c = 0, 0
    for x, y in vectors:
        if y == 0:
            a = gcd(a, x)
            continue
        if c == 0:
            b, c = (x, y) if y > 0 else (-x, -y)
            continue
        g, p, r = ext_gcd(c, y)
        # (y/g)*(b,c) - (c/g)*(x,y) lies on the x-axis
        a = gcd(a, (y // g) * b - (c // g) * x)
        b, c = p * b + r * x, g
    if a == 0 or c == 0:
        raise Singular("vectors do not span a rank-2 lattice", {"basis": (a, b, c)})
    return a, b % a, c


def lattice_index(vectors: Iterable[Vector]) -> int:
    """Index of the spanned lattice in Z^2"""
    a, _, c = hermite_basis(vectors)
    return a * c


def elementary_divisors(vectors: Iterable[Vector]) -> Tuple[int, int]:
    """
    Elementary divisors (d1, d2), d1 | d2, of the spanned lattice.

    The lattice is the image of diag(d1, d2) under some unimodular change of
    basis; it is all of Z^2 exactly when (d1, d2) == (1, 1).
    """
    a, b, c = hermite_basis(vectors)
    d1 = gcd(gcd(a, b), c)
    return d1, a * c // d1


def spans_z2(vectors: Iterable[Vector]) -> bool:
    """True when the vectors generate Z^2"""
    try:
        return elementary_divisors(vectors) == (1, 1)
    except Singular:
        return False
