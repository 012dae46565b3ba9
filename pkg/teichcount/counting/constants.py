"""
Siegel-Veech constants of the slit-torus covers, exact
"""

import logging
from fractions import Fraction
from typing import Dict

import sympy

from ..arith import divisors, euler_phi, mobius
from ..errors import OutOfRange
from ..models.data_models import ConstantKind, ConstantSource, ConstantsReport, ConstantValue, Stratum
from .counts import coprime_cylinder_weight_sum, coprime_two_cylinder_sum, count_primitive

logger = logging.getLogger(__name__)

# Degree-2 values; the cover formulas are stated for d >= 3 only
THEOREM_TABLE_Q2: Dict[ConstantKind, Fraction] = {
    ConstantKind.C: Fraction(9, 2),
    ConstantKind.S1: Fraction(0),
    ConstantKind.S2: Fraction(2),
}


def _c_formula(d: int) -> Fraction:
    weighted = sum(
        (mobius(r) * coprime_cylinder_weight_sum(d // r) for r in divisors(d) if mobius(r)),
        Fraction(0),
    )
    return Fraction(d, count_primitive(Stratum.H11, d)) * weighted


def _s1_formula(d: int) -> Fraction:
    return Fraction(3 * d * count_primitive(Stratum.H2, d), count_primitive(Stratum.H11, d))


def _s2_formula(d: int) -> Fraction:
    two_cylinder = sum(
        mobius(r) * r * coprime_two_cylinder_sum(d // r) for r in divisors(d) if mobius(r)
    )
    # sum over r | w of mu(r)/r * w^2 equals w * phi(w)
    crossing = sum(euler_phi(d // w) * w * euler_phi(w) for w in divisors(d) if w != d)
    bracket = two_cylinder + crossing + Fraction(d * euler_phi(d), 2)
    return Fraction(d, count_primitive(Stratum.H11, d)) * bracket


_FORMULAS = {
    ConstantKind.C: _c_formula,
    ConstantKind.S1: _s1_formula,
    ConstantKind.S2: _s2_formula,
}


def sv_constant(kind: ConstantKind | str, d: int) -> ConstantValue:
    """
    Constant c, s1 or s2 of the degree-d covers from the cover-count formulas.

    d = 2 returns the table value with source "theorem-table"; literal
    evaluation there disagrees (the c-formula gives 9/4).

    Args:
        kind: c, s1 or s2
        d: Degree (d >= 2)

    Returns:
        ConstantValue with the exact rational and its source
    """
    kind = ConstantKind(kind)
    if d < 2:
        raise OutOfRange(f"constants are defined for d >= 2, got {d}", {"d": d})
    if d == 2:
        return ConstantValue(kind, d, THEOREM_TABLE_Q2[kind], ConstantSource.THEOREM_TABLE)
    return ConstantValue(kind, d, _FORMULAS[kind](d), ConstantSource.FORMULA)


def sv_constant_literal(kind: ConstantKind | str, d: int) -> Fraction:
    """Literal formula value, also at d = 2 where it is not the constant"""
    kind = ConstantKind(kind)
    if d < 2:
        raise OutOfRange(f"constants are defined for d >= 2, got {d}", {"d": d})
    return _FORMULAS[kind](d)


def theorem_constant(kind: ConstantKind | str, q: int) -> Fraction:
    """
    Closed forms: c = (10q-11)/(2q-2), s1 = 27(q-2)/(8(q-1)), s2 = (5q+6)/(8(q-1)),
    with the table {9/2, 0, 2} at q = 2.
    """
    kind = ConstantKind(kind)
    if q < 2:
        raise OutOfRange(f"q must be at least 2, got {q}", {"q": q})
    if q == 2:
        return THEOREM_TABLE_Q2[kind]
    if kind is ConstantKind.C:
        return Fraction(10 * q - 11, 2 * q - 2)
    if kind is ConstantKind.S1:
        return Fraction(27 * (q - 2), 8 * (q - 1))
    return Fraction(5 * q + 6, 8 * (q - 1))


def generic_constant(kind: ConstantKind | str) -> Fraction:
    """
    Constants of a generic surface in H(1,1), from the stratum volumes.

    s1 = 3 nu(H2)/nu(H11), s2 = nu(H0)^2 / (24 nu(H11)), c = 2 zeta(2) nu(H0) / (3 nu(H11)),
    with nu(H11) = pi^4/135, nu(H2) = pi^4/120, nu(H0) = pi^2/3.
    """
    kind = ConstantKind(kind)
    pi = sympy.pi
    nu_h11 = pi ** 4 / 135
    nu_h2 = pi ** 4 / 120
    nu_torus = pi ** 2 / 3
    if kind is ConstantKind.S1:
        value = 3 * nu_h2 / nu_h11
    elif kind is ConstantKind.S2:
        value = sympy.Rational(1, 24) * nu_torus ** 2 / nu_h11
    else:
        value = 2 * sympy.zeta(2) * sympy.Rational(1, 3) * nu_torus / nu_h11
    value = sympy.nsimplify(sympy.simplify(value))
    if not value.is_Rational:
        raise ValueError(f"pi did not cancel for {kind.value}: {value}")
    return Fraction(int(value.p), int(value.q))


def constants_report(d: int) -> ConstantsReport:
    """Formula values and closed forms of all three constants at degree d"""
    values = {kind: sv_constant(kind, d) for kind in ConstantKind}
    report = ConstantsReport(
        d=d,
        c=values[ConstantKind.C].value,
        s1=values[ConstantKind.S1].value,
        s2=values[ConstantKind.S2].value,
        theorem_c=theorem_constant(ConstantKind.C, d),
        theorem_s1=theorem_constant(ConstantKind.S1, d),
        theorem_s2=theorem_constant(ConstantKind.S2, d),
        source=values[ConstantKind.C].source,
    )
    if not report.all_ok:
        logger.warning(f"Constant identity mismatch at d={d}: {report.identity_ok}")
    return report


def limit_errors(q: int) -> Dict[ConstantKind, float]:
    """Relative distance of the closed forms at q from the generic constants"""
    errors = {}
    for kind in ConstantKind:
        generic = generic_constant(kind)
        errors[kind] = float(abs(theorem_constant(kind, q) - generic) / generic)
    return errors
