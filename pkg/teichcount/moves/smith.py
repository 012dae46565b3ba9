"""
Smith normal form of 2x2 integer matrices with unimodular factors
"""

from typing import Sequence, Tuple

from ..errors import Singular

Matrix = Tuple[Tuple[int, int], Tuple[int, int]]

IDENTITY: Matrix = ((1, 0), (0, 1))
SWAP: Matrix = ((0, 1), (1, 0))
FOLD: Matrix = ((1, 1), (0, 1))


def as_matrix(m: Sequence[Sequence[int]]) -> Matrix:
    return ((int(m[0][0]), int(m[0][1])), (int(m[1][0]), int(m[1][1])))


def mat_mul(x: Matrix, y: Matrix) -> Matrix:
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


def mat_vec(x: Matrix, v: Tuple[int, int]) -> Tuple[int, int]:
    return (x[0][0] * v[0] + x[0][1] * v[1], x[1][0] * v[0] + x[1][1] * v[1])


def det(x: Matrix) -> int:
    return x[0][0] * x[1][1] - x[0][1] * x[1][0]


def smith_normal_form(m: Sequence[Sequence[int]]) -> Tuple[int, int, Matrix, Matrix]:
    """
    Diagonalize a nonsingular 2x2 integer matrix.

    Args:
        m: Matrix as rows ((a, b), (c, e))

    Returns:
        (d1, d2, U, V) with U * m * V = diag(d1, d2), d1 | d2, d1, d2 > 0
        and U, V unimodular

    Raises:
        Singular: if det m == 0
    """
    a = as_matrix(m)
    if det(a) == 0:
        raise Singular(f"matrix {a} is singular", {"matrix": a})

    left, right = IDENTITY, IDENTITY
    while True:
        if a[1][0] == 0 and a[0][1] == 0:
            if a[1][1] % a[0][0] == 0:
                break
            # d1 must divide d2: fold the second row into the first and repeat
            a, left = mat_mul(FOLD, a), mat_mul(FOLD, left)
            continue
        # smallest nonzero entry of the first row and column becomes the pivot
        pivot = min(
            (entry for entry in ((0, 0), (1, 0), (0, 1)) if a[entry[0]][entry[1]] != 0),
            key=lambda entry: abs(a[entry[0]][entry[1]]),
        )
        if pivot == (1, 0):
            a, left = mat_mul(SWAP, a), mat_mul(SWAP, left)
        elif pivot == (0, 1):
            a, right = mat_mul(a, SWAP), mat_mul(right, SWAP)
        # remainders are strictly smaller than the pivot
        q = a[1][0] // a[0][0]
        op = ((1, 0), (-q, 1))
        a, left = mat_mul(op, a), mat_mul(op, left)
        q = a[0][1] // a[0][0]
        op = ((1, -q), (0, 1))
        a, right = mat_mul(a, op), mat_mul(right, op)

    for row in (0, 1):
        if a[row][row] < 0:
            flip = ((-1, 0), (0, 1)) if row == 0 else ((1, 0), (0, -1))
            a, left = mat_mul(flip, a), mat_mul(flip, left)
    return a[0][0], a[1][1], left, right
