"""
Core data models shared by the counting, enumeration, move and census code
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

import mpmath


def fraction_str(value: Fraction | int) -> str:
    """Serialize an exact rational as "num/den" (denominator 1 included)"""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def real_str(value: Any) -> str:
    """Serialize a real with 12 significant digits"""
    return mpmath.nstr(mpmath.mpf(value), 12, min_fixed=-6, max_fixed=12)


class Stratum(str, Enum):
    """The two genus-2 strata"""
    H11 = "H11"
    H2 = "H2"


class ConstantKind(str, Enum):
    """Siegel-Veech constants tracked by the engine"""
    C = "c"
    S1 = "s1"
    S2 = "s2"


class ConstantSource(str, Enum):
    """Which path produced a constant"""
    FORMULA = "formula"
    THEOREM_TABLE = "theorem-table"


class MzvKind(str, Enum):
    """Truncated zeta sums"""
    ZETA2 = "zeta2"
    ZETA4 = "zeta4"
    Z22 = "z22"
    Z13 = "z13"


class MoveKind(str, Enum):
    """Steps recorded in a normalization trace"""
    HORIZONTAL = "F_h"
    VERTICAL = "F_v"
    SLIT = "slit"
    SHORTEN = "shorten"
    SMITH = "smith"
    SHEAR = "shear"


@dataclass(frozen=True)
class BilinearSolution:
    """Positive solution of s1*w1 + s2*w2 = d"""
    s1: int
    w1: int
    s2: int
    w2: int

    @property
    def d(self) -> int:
        return self.s1 * self.w1 + self.s2 * self.w2

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization"""
        return {"s1": self.s1, "w1": self.w1, "s2": self.s2, "w2": self.w2}


@dataclass(frozen=True)
class ConstantValue:
    """An exact constant together with the path that produced it"""
    kind: ConstantKind
    d: int
    value: Fraction
    source: ConstantSource = ConstantSource.FORMULA

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "d": self.d,
            "value": fraction_str(self.value),
            "source": self.source.value,
        }


@dataclass
class ConstantsReport:
    """
    Formula and theorem values of c, s1, s2 at one degree

    Attributes:
        d: Degree (the q of the billiard)
        c, s1, s2: Values from the cover-counting formulas
        theorem_c, theorem_s1, theorem_s2: Closed forms
        source: Whether the formula values come from the formulas or the table
    """
    d: int
    c: Fraction
    s1: Fraction
    s2: Fraction
    theorem_c: Fraction
    theorem_s1: Fraction
    theorem_s2: Fraction
    source: ConstantSource = ConstantSource.FORMULA

    @property
    def identity_ok(self) -> Dict[str, bool]:
        return {
            "c": self.c == self.theorem_c,
            "s1": self.s1 == self.theorem_s1,
            "s2": self.s2 == self.theorem_s2,
        }

    @property
    def all_ok(self) -> bool:
        return all(self.identity_ok.values())

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization"""
        return {
            "d": self.d,
            "c": fraction_str(self.c),
            "s1": fraction_str(self.s1),
            "s2": fraction_str(self.s2),
            "theorem_c": fraction_str(self.theorem_c),
            "theorem_s1": fraction_str(self.theorem_s1),
            "theorem_s2": fraction_str(self.theorem_s2),
            "identity_ok": self.identity_ok,
            "source": self.source.value,
        }


@dataclass
class VolumeEstimate:
    """Cumulative-count estimate of a stratum volume at cutoff D"""
    stratum: Stratum
    D: int
    value: mpmath.mpf
    target: mpmath.mpf
    trusted: bool = False

    @property
    def relative_error(self) -> float:
        return float(abs(self.value - self.target) / self.target)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "stratum": self.stratum.value,
            "D": self.D,
            "value": real_str(self.value),
            "target": real_str(self.target),
            "relative_error": real_str(self.relative_error),
            "trusted": self.trusted,
        }


@dataclass(frozen=True)
class FactorizationCheck:
    """Both sides of N_d = sum over e | d of weight(d/e) * N_e^P"""
    stratum: Stratum
    d: int
    lhs: int
    rhs: int
    weighted: bool

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> Dict[str, Any]:
        return {
            "stratum": self.stratum.value,
            "d": self.d,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "weighted": self.weighted,
            "holds": self.holds,
        }


@dataclass
class ConsistencyRow:
    """Counts of one stratum at one degree from every independent source"""
    stratum: Stratum
    d: int
    n_formula: int
    n_trusted: int
    n_enum: int
    np_formula: int
    np_enum: int
    n_oracle: Optional[int] = None
    np_oracle: Optional[int] = None
    factorization: List[FactorizationCheck] = field(default_factory=list)

    @property
    def deltas(self) -> Dict[str, int]:
        """Nonzero pairwise differences between the count sources"""
        pairs = {
            "n_formula-n_enum": (self.n_formula, self.n_enum),
            "n_trusted-n_enum": (self.n_trusted, self.n_enum),
            "np_formula-np_enum": (self.np_formula, self.np_enum),
            "n_oracle-n_enum": (self.n_oracle, self.n_enum),
            "np_oracle-np_enum": (self.np_oracle, self.np_enum),
        }
        return {
            name: a - b
            for name, (a, b) in pairs.items()
            if a is not None and b is not None and a != b
        }

    @property
    def delta_flags(self) -> str:
        flags = [f"{name}={delta:+d}" for name, delta in self.deltas.items()]
        flags += [
            f"factorization{'_weighted' if check.weighted else ''}_fails"
            for check in self.factorization
            if not check.holds
        ]
        return ";".join(flags)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "stratum": self.stratum.value,
            "d": self.d,
            "n_formula": self.n_formula,
            "n_trusted": self.n_trusted,
            "n_enum": self.n_enum,
            "n_oracle": self.n_oracle,
            "np_formula": self.np_formula,
            "np_enum": self.np_enum,
            "np_oracle": self.np_oracle,
            "factorization": [check.to_dict() for check in self.factorization],
            "deltas": self.deltas,
        }


@dataclass
class ConsistencyReport:
    """Cross-check of formula, enumeration and oracle at one degree"""
    d: int
    rows: List[ConsistencyRow] = field(default_factory=list)

    def row(self, stratum: Stratum) -> ConsistencyRow:
        return next(r for r in self.rows if r.stratum == Stratum(stratum))

    def to_dict(self) -> Dict[str, Any]:
        return {"d": self.d, "rows": [r.to_dict() for r in self.rows]}


@dataclass(frozen=True)
class MoveRecord:
    """One non-trivial step of a normalization trace"""
    kind: MoveKind
    count: int = 1
    detail: Dict[str, Any] = field(default_factory=dict, hash=False, compare=False)

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind.value, "count": self.count, "detail": self.detail}


@dataclass
class MoveTrace:
    """Sequence of moves taking a state to the canonical cover"""
    d: int
    start: Any
    records: List[MoveRecord] = field(default_factory=list)
    final: Any = None

    @property
    def length(self) -> int:
        """Total number of elementary moves"""
        return sum(r.count for r in self.records)

    def add(self, kind: MoveKind, count: int = 1, **detail) -> None:
        if count > 0:
            self.records.append(MoveRecord(kind, count, detail))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "d": self.d,
            "start": self.start.to_dict() if hasattr(self.start, "to_dict") else self.start,
            "records": [r.to_dict() for r in self.records],
            "final": self.final.to_dict() if hasattr(self.final, "to_dict") else self.final,
            "length": self.length,
        }


@dataclass(frozen=True)
class CensusPoint:
    """Census counts at one length cutoff"""
    T: Fraction
    ns1: int
    ns2: int
    nc: int

    def to_dict(self) -> Dict[str, Any]:
        return {"T": fraction_str(self.T), "ns1": self.ns1, "ns2": self.ns2, "nc": self.nc}


@dataclass
class CensusResult:
    """
    Saddle-connection and cylinder counts on a slit-torus surface

    Attributes:
        p, q: Slit position p/q
        alpha: Slit half-height, as a string
        points: Counts per cutoff, in increasing T
        multiplicity: Histogram of k(v) over saddle candidates at the largest T
        cylinders_per_direction: Histogram of cylinder counts per direction
    """
    p: int
    q: int
    alpha: str
    points: List[CensusPoint] = field(default_factory=list)
    multiplicity: Dict[int, int] = field(default_factory=dict)
    cylinders_per_direction: Dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "q": self.q,
            "alpha": self.alpha,
            "points": [pt.to_dict() for pt in self.points],
            "multiplicity": {str(k): v for k, v in sorted(self.multiplicity.items())},
            "cylinders_per_direction": {
                str(k): v for k, v in sorted(self.cylinders_per_direction.items())
            },
        }


@dataclass(frozen=True)
class FitResult:
    """Quadratic growth coefficient of one census quantity"""
    quantity: str
    coefficient: float
    slope: float
    theory: float
    ratio: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "quantity": self.quantity,
            "coefficient": real_str(self.coefficient),
            "slope": real_str(self.slope),
            "theory": real_str(self.theory),
            "ratio": real_str(self.ratio),
        }
