"""
Truncated zeta and double zeta sums in high precision
"""

import mpmath

from ..config.settings import get_settings
from ..models.data_models import MzvKind


def mzv_partial(kind: MzvKind | str, N: int, dps: int | None = None) -> mpmath.mpf:
    """
    Partial sum of zeta(2), zeta(4), zeta(2,2) or zeta(1,3) truncated at N.

    The double sums run over s1 < s2 <= N:
    zeta(2,2) = sum s1^-2 s2^-2 and zeta(1,3) = sum s1^-1 s2^-3.

    Args:
        kind: One of zeta2, zeta4, z22, z13
        N: Cutoff (N >= 2)
        dps: Decimal digits of working precision (settings.mzv_precision by default)

    Returns:
        mpmath.mpf partial sum
    """
    kind = MzvKind(kind)
    if N < 2:
        raise ValueError(f"cutoff must be at least 2, got {N}")

    with mpmath.workdps(dps or get_settings().mzv_precision):
        total = mpmath.mpf(0)
        if kind is MzvKind.ZETA2:
            for s in range(1, N + 1):
                total += mpmath.mpf(1) / (s * s)
        elif kind is MzvKind.ZETA4:
            for s in range(1, N + 1):
                total += mpmath.mpf(1) / (s ** 4)
        elif kind is MzvKind.Z22:
            inner = mpmath.mpf(0)  # sum over s1 < s2 of s1^-2
            for s2 in range(2, N + 1):
                inner += mpmath.mpf(1) / ((s2 - 1) ** 2)
                total += inner / (s2 * s2)
        else:
            inner = mpmath.mpf(0)  # harmonic number H(s2 - 1)
            for s2 in range(2, N + 1):
                inner += mpmath.mpf(1) / (s2 - 1)
                total += inner / (s2 ** 3)
        return +total


def mzv_targets(dps: int | None = None) -> dict:
    """Closed forms of the four limits: pi^2/6, pi^4/90, pi^4/120, pi^4/360"""
    with mpmath.workdps(dps or get_settings().mzv_precision):
        pi = mpmath.pi
        return {
            MzvKind.ZETA2: +(pi ** 2 / 6),
            MzvKind.ZETA4: +(pi ** 4 / 90),
            MzvKind.Z22: +(pi ** 4 / 120),
            MzvKind.Z13: +(pi ** 4 / 360),
        }
