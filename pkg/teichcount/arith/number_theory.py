"""
Exact multiplicative number theory used by every counting routine
"""

from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Tuple

import sympy

from ..models.data_models import BilinearSolution


def _require_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


@lru_cache(maxsize=None)
def factorization(n: int) -> Tuple[Tuple[int, int], ...]:
    """Prime factorization of n as sorted (prime, exponent) pairs"""
    _require_positive(n)
    return tuple(sorted(sympy.factorint(n).items()))


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    """
    Möbius function.

    Returns 0 when a square divides n, otherwise (-1)^k for k prime factors.
    """
    exponents = [e for _, e in factorization(n)]
    if any(e > 1 for e in exponents):
        return 0
    return -1 if len(exponents) % 2 else 1


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """Number of 1 <= k <= n with gcd(k, n) = 1"""
    _require_positive(n)
    return int(sympy.totient(n))


@lru_cache(maxsize=None)
def divisors(n: int) -> Tuple[int, ...]:
    """All positive divisors of n in increasing order"""
    _require_positive(n)
    return tuple(int(k) for k in sympy.divisors(n))


@lru_cache(maxsize=None)
def sigma1(n: int) -> int:
    """Sum of the positive divisors of n"""
    _require_positive(n)
    return int(sympy.divisor_sigma(n, 1))


def iter_bilinear_tuples(d: int) -> Iterator[Tuple[int, int, int, int]]:
    """Raw (s1, w1, s2, w2) tuples in the order of iter_bilinear, for hot loops"""
    _require_positive(d)
    for s1 in range(1, d):
        for w1 in range(1, (d - 1) // s1 + 1):
            m = d - s1 * w1
            for s2 in divisors(m):
                yield s1, w1, s2, m // s2


def iter_bilinear(d: int) -> Iterator[BilinearSolution]:
    """
    Stream every positive solution of s1*w1 + s2*w2 = d exactly once.

    The order is fixed: s1 ascending, then w1 ascending, then s2 over the
    divisors of d - s1*w1 in increasing order.

    Args:
        d: Target value (d >= 1)

    Yields:
        BilinearSolution(s1, w1, s2, w2)
    """
    for s1, w1, s2, w2 in iter_bilinear_tuples(d):
        yield BilinearSolution(s1, w1, s2, w2)


def count_bilinear(d: int) -> int:
    """Number of solutions of s1*w1 + s2*w2 = d, as sum over m of tau(m)*tau(d-m)"""
    _require_positive(d)
    return sum(len(divisors(m)) * len(divisors(d - m)) for m in range(1, d))


def mobius_weight_sum(d: int, power: int = 2) -> Fraction:
    """Exact value of sum over r | d of mu(r) / r**power"""
    return sum((Fraction(mobius(r), r ** power) for r in divisors(d)), Fraction(0))


def twist_count(w1: int, w2: int, s1: int, s2: int, r: int) -> int:
    """
    Number of twist triples (t1, t2, t3) in [0,w1) x [0,w2) x [0,w1+w2)
    with r dividing s1*(t2 + t3) - s2*(t1 + t3), by direct enumeration.

    For gcd(s1, s2) = 1 and r | w1, r | w2 this equals w1*w2*(w1 + w2)/r.
    """
    for value in (w1, w2, s1, s2, r):
        _require_positive(value)
    count = 0
    for t1 in range(w1):
        for t2 in range(w2):
            for t3 in range(w1 + w2):
                if (s1 * (t2 + t3) - s2 * (t1 + t3)) % r == 0:
                    count += 1
    return count
