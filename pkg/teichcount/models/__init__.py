"""
Data models and report rows for the teichcount engine
"""

from .data_models import (
    fraction_str,
    real_str,
    Stratum,
    ConstantKind,
    ConstantSource,
    MzvKind,
    MoveKind,
    BilinearSolution,
    ConstantValue,
    ConstantsReport,
    VolumeEstimate,
    FactorizationCheck,
    ConsistencyRow,
    ConsistencyReport,
    MoveRecord,
    MoveTrace,
    CensusPoint,
    CensusResult,
    FitResult,
)

from .report_models import (
    CountsRow,
    ConstantsRow,
    VolumesRow,
    CensusRow,
    ConnectivityRow,
    ReportCheck,
)

__all__ = [
    "fraction_str",
    "real_str",
    "Stratum",
    "ConstantKind",
    "ConstantSource",
    "MzvKind",
    "MoveKind",
    "BilinearSolution",
    "ConstantValue",
    "ConstantsReport",
    "VolumeEstimate",
    "FactorizationCheck",
    "ConsistencyRow",
    "ConsistencyReport",
    "MoveRecord",
    "MoveTrace",
    "CensusPoint",
    "CensusResult",
    "FitResult",
    "CountsRow",
    "ConstantsRow",
    "VolumesRow",
    "CensusRow",
    "ConnectivityRow",
    "ReportCheck",
]
