"""
Pydantic rows for the CSV and JSON reports

Column order of every CSV is the field order of its row model; the JSON
output is the list of `model_dump()` of the same rows.
"""

import math
import re
from typing import Optional

from pydantic import BaseModel, Field, field_validator

_FRACTION = re.compile(r"-?\d+/\d+")


def _check_fraction(v: str) -> str:
    if not _FRACTION.fullmatch(v):
        raise ValueError(f"exact values are written as 'num/den', got {v!r}")
    return v


def _check_real(v: str) -> str:
    try:
        value = float(v)
    except ValueError:
        raise ValueError(f"not a real number: {v!r}")
    if not math.isnan(value) and len(re.sub(r"[^0-9]", "", v.split("e")[0]).lstrip("0")) > 12:
        raise ValueError(f"reals carry at most 12 significant digits, got {v!r}")
    return v


class CountsRow(BaseModel):
    """Cover counts of one stratum at one degree"""
    d: int = Field(..., ge=1, description="Degree of the cover")
    stratum: str = Field(..., description="H11 or H2")
    n_formula: int = Field(..., description="N_d from the printed closed form")
    n_enum: int = Field(..., description="N_d from cylinder-coordinate enumeration")
    n_oracle: Optional[int] = Field(None, description="N_d from monodromy classes, when within the oracle bound")
    np_formula: int = Field(..., description="Primitive count from the closed form")
    np_enum: int = Field(..., description="Primitive count from enumeration")
    np_oracle: Optional[int] = Field(None, description="Primitive count from monodromy classes")
    delta_flags: str = Field(default="", description="Semicolon-separated nonzero deltas")

    @field_validator("stratum")
    @classmethod
    def validate_stratum(cls, v: str) -> str:
        if v not in ("H11", "H2"):
            raise ValueError(f"stratum must be H11 or H2, got {v!r}")
        return v


class ConstantsRow(BaseModel):
    """Formula and theorem values of the Siegel-Veech constants at one q"""
    q: int = Field(..., ge=2, description="Denominator of the slit position")
    c: str = Field(..., description="Cylinder constant from the counting formulas")
    s1: str = Field(..., description="Simple saddle constant from the counting formulas")
    s2: str = Field(..., description="Double saddle constant from the counting formulas")
    thm_c: str = Field(..., description="Closed form of c")
    thm_s1: str = Field(..., description="Closed form of s1")
    thm_s2: str = Field(..., description="Closed form of s2")
    ok_c: bool = Field(..., description="c equals its closed form exactly")
    ok_s1: bool = Field(..., description="s1 equals its closed form exactly")
    ok_s2: bool = Field(..., description="s2 equals its closed form exactly")

    @field_validator("c", "s1", "s2", "thm_c", "thm_s1", "thm_s2")
    @classmethod
    def validate_fraction(cls, v: str) -> str:
        return _check_fraction(v)


class VolumesRow(BaseModel):
    """Volume estimate of one stratum at one cutoff"""
    stratum: str = Field(..., description="H11 or H2")
    D: int = Field(..., ge=1, description="Degree cutoff")
    estimate: str = Field(..., description="Normalized cumulative count")
    target: str = Field(..., description="Exact volume, pi^4/135 or pi^4/120")
    rel_err: str = Field(..., description="Relative error of the estimate")

    @field_validator("estimate", "target", "rel_err")
    @classmethod
    def validate_real(cls, v: str) -> str:
        return _check_real(v)


class CensusRow(BaseModel):
    """Saddle and cylinder counts at one length cutoff"""
    T: str = Field(..., description="Length cutoff")
    ns1: int = Field(..., ge=0, description="Saddle connections of multiplicity 1")
    ns2: int = Field(..., ge=0, description="Parallel pairs of saddle connections")
    nc: int = Field(..., ge=0, description="Cylinders, per orientation and multiple")
    ratio_s1: str = Field(..., description="ns1 / T^2 over (pi/4) s1(q)")
    ratio_s2: str = Field(..., description="ns2 / T^2 over (pi/4) s2(q)")
    ratio_c: str = Field(..., description="nc / T^2 over (pi/4) c(q)")

    @field_validator("T")
    @classmethod
    def validate_cutoff(cls, v: str) -> str:
        return _check_fraction(v)

    @field_validator("ratio_s1", "ratio_s2", "ratio_c")
    @classmethod
    def validate_ratio(cls, v: str) -> str:
        return _check_real(v)


class ConnectivityRow(BaseModel):
    """One primitive H(1,1) state and the length of its path to S0"""
    d: int = Field(..., ge=2, description="Degree")
    sigma: int = Field(..., description="Orientation of the wide cylinder")
    w1: int = Field(..., ge=1, description="Width of the first narrow cylinder")
    w2: int = Field(..., ge=1, description="Width of the second narrow cylinder")
    s1: int = Field(..., ge=1, description="Height of the first narrow cylinder")
    s2: int = Field(..., ge=1, description="Height of the second narrow cylinder")
    k3: int = Field(..., ge=0, description="Integer height of the wide cylinder")
    t1: int = Field(..., ge=0, description="Twist of the first narrow cylinder")
    t2: int = Field(..., ge=0, description="Twist of the second narrow cylinder")
    t3: int = Field(..., ge=0, description="Twist of the wide cylinder")
    length: int = Field(..., ge=0, description="Elementary moves to reach S0")

    @field_validator("sigma")
    @classmethod
    def validate_sigma(cls, v: int) -> int:
        if v not in (1, -1):
            raise ValueError(f"sigma must be +1 or -1, got {v}")
        return v


class ReportCheck(BaseModel):
    """Outcome of one acceptance check"""
    check: str = Field(..., description="Check name")
    passed: bool = Field(..., description="Whether the check holds")
    detail: str = Field(default="", description="Measured values behind the verdict")
