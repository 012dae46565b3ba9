"""
Stratum volume estimates from cumulative cover counts

The cumulative sums run over the (s1, w1) rows of the bilinear equation
and are vectorized over the second height with numpy; rows are split into
chunks and summed by the sweep runner.
"""

import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

import mpmath
import numpy as np

from ..config.settings import get_settings
from ..errors import OutOfRange
from ..models.data_models import Stratum, VolumeEstimate
from ..workers import SweepRunner, chunked
from .counts import count_primitive, leading_term

logger = logging.getLogger(__name__)

# (dimension prefactor, power of D) per stratum
_SCALING = {Stratum.H11: (10, 5), Stratum.H2: (8, 4)}

# int64 holds every row sum below this cutoff
_INT64_CUTOFF = 20000


def volume_target(stratum: Stratum | str) -> mpmath.mpf:
    """pi^4/135 for H11, pi^4/120 for H2"""
    stratum = Stratum(stratum)
    return mpmath.pi ** 4 / (135 if stratum is Stratum.H11 else 120)


def _dtype(cutoff: int):
    return np.int64 if cutoff < _INT64_CUTOFF else object


def _h11_rows(task: Tuple[Tuple[Tuple[int, int], ...], Tuple[int, ...]]) -> List[int]:
    """
    Partial cumulative H11 twist sums for a chunk of (s1, w1) rows.

    For each cutoff D, sums min(s1, s2) * w1*w2*(w1 + w2) over s2 >= 1 and
    1 <= w2 <= (D - s1*w1) // s2 in closed form in w2.
    """
    rows, cutoffs = task
    dtype = _dtype(max(cutoffs))
    totals = [0] * len(cutoffs)
    for s1, w1 in rows:
        base = s1 * w1
        for i, cutoff in enumerate(cutoffs):
            rem = cutoff - base
            if rem < 1:
                continue
            s2 = np.arange(1, rem + 1, dtype=dtype)
            W = rem // s2
            sum_w = W * (W + 1) // 2
            sum_w2 = W * (W + 1) * (2 * W + 1) // 6
            weight = np.minimum(s2, s1)
            totals[i] += int((weight * (w1 * w1 * sum_w + w1 * sum_w2)).sum())
    return totals


def _h2_rows(task: Tuple[Tuple[Tuple[int, int], ...], Tuple[int, ...]]) -> List[int]:
    """
    Partial cumulative two-cylinder H2 sums for a chunk of (h1, w1) rows.

    For each cutoff D, sums w1*w2 over h2 >= 1 and w1 < w2 <= (D - h1*w1) // h2.
    """
    rows, cutoffs = task
    dtype = _dtype(max(cutoffs))
    totals = [0] * len(cutoffs)
    for h1, w1 in rows:
        base = h1 * w1
        for i, cutoff in enumerate(cutoffs):
            rem = cutoff - base
            if rem <= w1:
                continue
            h2 = np.arange(1, rem // (w1 + 1) + 1, dtype=dtype)
            W = rem // h2
            upper = W * (W + 1) // 2 - w1 * (w1 + 1) // 2
            totals[i] += int((w1 * upper).sum())
    return totals


def _fixed_state_total(cutoff: int) -> int:
    """Sum over 2*s*w <= D of 2*w^2*s (relabelling-fixed H11 states)"""
    total = 0
    for w in range(1, cutoff // 2 + 1):
        top = cutoff // (2 * w)
        total += 2 * w * w * (top * (top + 1) // 2)
    return total


def _one_cylinder_total(cutoff: int, trusted: bool) -> int:
    """Sum over h*L <= D of the one-cylinder terms"""
    total = Fraction(0)
    for length in range(3, cutoff + 1):
        term = Fraction(length * (length - 1) * (length - 2), 6)
        if not trusted and length % 3 == 0:
            term += Fraction(2 * length, 3)
        total += (cutoff // length) * term
    return int(total)


def _merge(acc: List[int], partial: List[int]) -> List[int]:
    return [a + b for a, b in zip(acc, partial)]


def cumulative_counts(
    stratum: Stratum | str,
    cutoffs: Sequence[int],
    trusted: bool = False,
    runner: SweepRunner | None = None,
) -> List[int]:
    """
    Sum over d <= D of N_d for every cutoff D, in one sweep.

    Args:
        stratum: H11 or H2
        cutoffs: Cutoffs D >= 1
        trusted: Use the trusted H2 one-cylinder term
        runner: Sweep runner (a default one is created otherwise)

    Returns:
        Cumulative counts in the order of `cutoffs`
    """
    stratum = Stratum(stratum)
    cutoffs = tuple(int(D) for D in cutoffs)
    if not cutoffs or min(cutoffs) < 1:
        raise OutOfRange(f"cutoffs must be positive, got {cutoffs}", {"cutoffs": cutoffs})

    top = max(cutoffs)
    rows = tuple((a, b) for a in range(1, top) for b in range(1, (top - 1) // a + 1))
    chunks = [(chunk, cutoffs) for chunk in chunked(rows, get_settings().volume_chunk)]
    row_func = _h11_rows if stratum is Stratum.H11 else _h2_rows

    runner = runner or SweepRunner(name=f"volume-{stratum.value}")
    totals = runner.run(row_func, chunks, _merge, [0] * len(cutoffs))

    if stratum is Stratum.H11:
        return [t + _fixed_state_total(D) for t, D in zip(totals, cutoffs)]
    return [t + _one_cylinder_total(D, trusted) for t, D in zip(totals, cutoffs)]


def volume_series(
    stratum: Stratum | str,
    cutoffs: Sequence[int],
    trusted: bool = False,
    runner: SweepRunner | None = None,
) -> List[VolumeEstimate]:
    """
    Volume estimates n/D^k * sum_{d<=D} N_d at several cutoffs.

    n = 10, k = 5 for H11 and n = 8, k = 4 for H2.
    """
    stratum = Stratum(stratum)
    prefactor, power = _SCALING[stratum]
    totals = cumulative_counts(stratum, cutoffs, trusted=trusted, runner=runner)
    target = volume_target(stratum)

    estimates = []
    for D, total in zip(cutoffs, totals):
        value = mpmath.mpf(prefactor) * mpmath.mpf(total) / mpmath.mpf(D) ** power
        estimate = VolumeEstimate(stratum, int(D), value, target, trusted)
        logger.info(f"Volume {stratum.value} D={D}: {mpmath.nstr(value, 8)} (rel. error {estimate.relative_error:.4f})")
        estimates.append(estimate)
    return estimates


def volume_estimate(
    stratum: Stratum | str,
    D: int,
    trusted: bool = False,
    runner: SweepRunner | None = None,
) -> VolumeEstimate:
    """
    Estimate the stratum volume from the covers of degree at most D.

    Args:
        stratum: H11 or H2
        D: Cutoff
        trusted: Use count_covers_trusted for H2 instead of the printed count
        runner: Optional sweep runner

    Returns:
        VolumeEstimate with value, target and relative error
    """
    return volume_series(stratum, [D], trusted=trusted, runner=runner)[0]


def asymptotic_ratio(stratum: Stratum | str, d: int) -> mpmath.mpf:
    """
    Primitive count over its leading asymptotic term.

    Equals (d-1)/d for H11 and (d-2)/d for H2 exactly.
    """
    stratum = Stratum(stratum)
    if d < 3:
        raise OutOfRange(f"asymptotic ratio needs d >= 3, got {d}", {"d": d})
    ratio = Fraction(count_primitive(stratum, d)) / leading_term(stratum, d)
    return mpmath.mpf(ratio.numerator) / ratio.denominator
