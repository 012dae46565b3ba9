"""
Cross-check of cover counts from formulas, enumeration and the oracle
"""

import logging
from typing import Optional

from ..counting import count_covers, count_covers_trusted, count_primitive, factorization_check
from ..errors import OutOfRange
from ..models.data_models import ConsistencyReport, ConsistencyRow, Stratum
from ..workers import SweepRunner
from .fiber import fiber_count, primitive_fiber_count
from .monodromy import monodromy_classes, oracle_bound

logger = logging.getLogger(__name__)


def _row(stratum: Stratum, d: int, runner: Optional[SweepRunner]) -> ConsistencyRow:
    n_oracle = np_oracle = None
    if d <= oracle_bound(stratum):
        n_oracle, np_oracle = monodromy_classes(stratum, d, runner=runner)

    row = ConsistencyRow(
        stratum=stratum,
        d=d,
        n_formula=count_covers(stratum, d),
        n_trusted=count_covers_trusted(stratum, d),
        n_enum=fiber_count(stratum, d),
        np_formula=count_primitive(stratum, d),
        np_enum=primitive_fiber_count(stratum, d),
        n_oracle=n_oracle,
        np_oracle=np_oracle,
    )

    # both sides from the enumeration, so the identity is tested and not assumed
    variants = (True, False) if stratum is Stratum.H11 else (False,)
    for weighted in variants:
        row.factorization.append(
            factorization_check(
                stratum,
                d,
                weighted=weighted,
                total=lambda n: fiber_count(stratum, n),
                primitive=lambda n: primitive_fiber_count(stratum, n),
            )
        )
    return row


def consistency_report(d: int, runner: Optional[SweepRunner] = None) -> ConsistencyReport:
    """
    Tabulate every independent count of both strata at degree d.

    Args:
        d: Degree (d >= 2)
        runner: Optional sweep runner for the oracle

    Returns:
        ConsistencyReport with one row per stratum; rows carry the pairwise
        deltas and the factorization checks
    """
    if d < 2:
        raise OutOfRange(f"consistency report needs d >= 2, got {d}", {"d": d})

    report = ConsistencyReport(d=d)
    for stratum in Stratum:
        row = _row(stratum, d, runner)
        if row.delta_flags:
            logger.info(f"Deltas for {stratum.value} d={d}: {row.delta_flags}")
        report.rows.append(row)
    return report
