"""
Exact cover counts of the genus-2 strata over the standard torus
"""

import logging
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Callable, Optional

from ..arith import divisors, iter_bilinear_tuples, mobius, mobius_weight_sum, sigma1
from ..errors import NonIntegerResult, OutOfRange
from ..models.data_models import FactorizationCheck, Stratum

logger = logging.getLogger(__name__)


def _as_int(value: Fraction, what: str, d: int) -> int:
    if value.denominator != 1:
        raise NonIntegerResult(
            f"{what} at d={d} is not an integer: {value}",
            {"what": what, "d": d, "value": str(value)},
        )
    return value.numerator


# Inner sums, cached per reduced degree n = d / r


@lru_cache(maxsize=None)
def twist_weight_sum(n: int) -> int:
    """Sum over s1*u1 + s2*u2 = n of u1*u2*(u1+u2)*min(s1, s2), all solutions"""
    return sum(
        w1 * w2 * (w1 + w2) * min(s1, s2)
        for s1, w1, s2, w2 in iter_bilinear_tuples(n)
    )


@lru_cache(maxsize=None)
def coprime_twist_weight_sum(n: int) -> int:
    """Same sum restricted to gcd(s1, s2) = 1"""
    return sum(
        u1 * u2 * (u1 + u2) * min(s1, s2)
        for s1, u1, s2, u2 in iter_bilinear_tuples(n)
        if gcd(s1, s2) == 1
    )


@lru_cache(maxsize=None)
def coprime_cylinder_weight_sum(n: int) -> Fraction:
    """
    Sum over gcd(s1, s2) = 1, s1*u1 + s2*u2 = n of
    min(s1, s2) * u1*u2*(u1+u2) * (1/u1^2 + 1/u2^2 + 1/(u1+u2)^2).
    """
    # numerators grouped by denominator keep the Fraction work to one pass
    buckets: dict[int, int] = {}
    for s1, u1, s2, u2 in iter_bilinear_tuples(n):
        if gcd(s1, s2) != 1:
            continue
        m = min(s1, s2)
        buckets[u1] = buckets.get(u1, 0) + m * (u1 + u2) * u2
        buckets[u2] = buckets.get(u2, 0) + m * (u1 + u2) * u1
        buckets[u1 + u2] = buckets.get(u1 + u2, 0) + m * u1 * u2
    return sum((Fraction(num, den) for den, num in sorted(buckets.items())), Fraction(0))


def _two_cylinder_pairs(n: int, coprime: bool):
    """(h1, u1, h2, u2) with h1*u1 + h2*u2 = n and u1 < u2"""
    for h1, u1, h2, u2 in iter_bilinear_tuples(n):
        if u1 < u2 and (not coprime or gcd(h1, h2) == 1):
            yield h1, u1, h2, u2


@lru_cache(maxsize=None)
def two_cylinder_sum(n: int) -> int:
    """Sum over h1*u1 + h2*u2 = n, u1 < u2 of u1*u2"""
    return sum(u1 * u2 for _, u1, _, u2 in _two_cylinder_pairs(n, coprime=False))


@lru_cache(maxsize=None)
def coprime_two_cylinder_sum(n: int) -> int:
    """Sum over h1*u1 + h2*u2 = n, u1 < u2, gcd(h1, h2) = 1 of u1*u2"""
    return sum(u1 * u2 for _, u1, _, u2 in _two_cylinder_pairs(n, coprime=True))


def one_cylinder_classes(length: int) -> int:
    """Twisted one-cylinder states of circumference L up to relabelling: L*C(L-1,2)/3"""
    return length * comb(length - 1, 2) // 3


# Public counts


def count_covers(stratum: Stratum | str, d: int) -> int:
    """
    Number of degree-d covers of the standard torus, as printed.

    For H11 the twist-weighted sum over s1*w1 + s2*w2 = d plus the
    correction for relabelling-fixed states. For H2 the two-cylinder sum plus
    both one-cylinder terms, including the (2/3)-weighted term for L = 3l
    (which overcounts when 3 | d; see count_covers_trusted).

    Args:
        stratum: H11 or H2
        d: Degree (d >= 1)

    Returns:
        The count
    """
    stratum = Stratum(stratum)
    if d < 1:
        raise OutOfRange(f"degree must be positive, got {d}", {"d": d})

    if stratum is Stratum.H11:
        total = twist_weight_sum(d)
        if d % 2 == 0:
            total += sum(2 * w * w * (d // 2 // w) for w in divisors(d // 2))
        return total

    total = Fraction(two_cylinder_sum(d))
    for h in divisors(d):
        length = d // h
        total += Fraction(length * comb(length - 1, 2), 3)
        if length % 3 == 0:
            total += Fraction(2 * length, 3)
    return _as_int(total, "N_d(2)", d)


def count_covers_trusted(stratum: Stratum | str, d: int) -> int:
    """
    Cover count that agrees with enumeration and the monodromy oracle.

    Identical to count_covers for H11. For H2 the one-cylinder states carry
    a twist and the cyclic relabelling acts freely, so each height h
    contributes L*C(L-1,2)/3 with L = d/h and no extra term.
    """
    stratum = Stratum(stratum)
    if stratum is Stratum.H11:
        return count_covers(stratum, d)
    if d < 1:
        raise OutOfRange(f"degree must be positive, got {d}", {"d": d})
    return two_cylinder_sum(d) + sum(one_cylinder_classes(d // h) for h in divisors(d))


def count_primitive(stratum: Stratum | str, d: int) -> int:
    """
    Number of primitive degree-d covers by Möbius inversion.

    H11: 4 at d = 2, otherwise
        sum_{r|d} mu(r) * r^2 * sum_{(s1,s2)=1, s1u1+s2u2=d/r} u1u2(u1+u2)min(s1,s2).
    H2: 0 at d = 2, 3 at d = 3, otherwise
        sum_{r|d} mu(r) * (r * sum_{(h1,h2)=1, u1<u2} u1u2 + C(d/r-1, 2) * d / 3).
    Degree 1 has no branched covers and returns 0.
    """
    stratum = Stratum(stratum)
    if d < 1:
        raise OutOfRange(f"degree must be positive, got {d}", {"d": d})
    if d == 1:
        return 0

    if stratum is Stratum.H11:
        if d == 2:
            return 4
        return sum(
            mobius(r) * r * r * coprime_twist_weight_sum(d // r)
            for r in divisors(d)
            if mobius(r)
        )

    if d == 2:
        return 0
    if d == 3:
        return 3
    total = Fraction(0)
    for r in divisors(d):
        mu = mobius(r)
        if mu:
            n = d // r
            total += mu * (r * coprime_two_cylinder_sum(n) + Fraction(comb(n - 1, 2) * d, 3))
    return _as_int(total, "N_d^P(2)", d)


def count_primitive_closed(stratum: Stratum | str, d: int) -> int:
    """
    Closed forms (1/3) d^3 (d-1) S and (3/8) d^2 (d-2) S, S = sum mu(r)/r^2.

    Raises:
        OutOfRange: for d < 3
        NonIntegerResult: if the rational value is not integral
    """
    stratum = Stratum(stratum)
    if d < 3:
        raise OutOfRange(f"closed forms hold for d >= 3, got {d}", {"d": d})
    weight = mobius_weight_sum(d)
    if stratum is Stratum.H11:
        value = Fraction(d ** 3 * (d - 1), 3) * weight
    else:
        value = Fraction(3 * d * d * (d - 2), 8) * weight
    return _as_int(value, f"closed N_d^P({stratum.value})", d)


def leading_term(stratum: Stratum | str, d: int) -> Fraction:
    """Leading asymptotic term d^4/3 * S (H11) or 3/8 * d^3 * S (H2)"""
    stratum = Stratum(stratum)
    if stratum is Stratum.H11:
        return Fraction(d ** 4, 3) * mobius_weight_sum(d)
    return Fraction(3 * d ** 3, 8) * mobius_weight_sum(d)


def factorization_check(
    stratum: Stratum | str,
    d: int,
    weighted: bool = True,
    total: Optional[Callable[[int], int]] = None,
    primitive: Optional[Callable[[int], int]] = None,
) -> FactorizationCheck:
    """
    Compare N_d with the sum over e | d of weight(d/e) * N_e^P.

    The literal weight is sigma1(m): the number of index-m sublattices.
    With `weighted=True` the H11 weight becomes m * sigma1(m), since the
    intermediate isogeny also chooses which of the m preimages of the second
    marked point carries the second zero. H2 has a single branch point, so
    both variants use sigma1(m) there.

    Args:
        stratum: H11 or H2
        d: Degree
        weighted: Use the marked-point weight for H11
        total: Source of N_d (defaults to the trusted formula)
        primitive: Source of N_e^P (defaults to count_primitive)

    Returns:
        FactorizationCheck with both sides
    """
    stratum = Stratum(stratum)
    total = total or (lambda n: count_covers_trusted(stratum, n))
    primitive = primitive or (lambda n: count_primitive(stratum, n))

    rhs = 0
    for e in divisors(d):
        m = d // e
        weight = sigma1(m)
        if weighted and stratum is Stratum.H11:
            weight *= m
        rhs += weight * primitive(e)
    check = FactorizationCheck(stratum, d, total(d), rhs, weighted)
    if not check.holds:
        logger.debug(f"Factorization fails for {stratum.value} d={d}: {check.lhs} != {check.rhs} (weighted={weighted})")
    return check
