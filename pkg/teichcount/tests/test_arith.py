"""
Tests for the number theory kernel, truncated zeta sums and lattice helpers
"""

from fractions import Fraction
from math import gcd

import mpmath
import pytest

from teichcount.arith import (
    count_bilinear,
    divisors,
    elementary_divisors,
    euler_phi,
    ext_gcd,
    hermite_basis,
    iter_bilinear,
    lattice_index,
    mobius,
    mobius_weight_sum,
    mzv_partial,
    mzv_targets,
    sigma1,
    spans_z2,
    twist_count,
)
from teichcount.errors import Singular
from teichcount.models import MzvKind


@pytest.mark.parametrize("n,expected", [(1, 1), (2, -1), (6, 1), (12, 0), (30, -1)])
def test_mobius(n, expected):
    assert mobius(n) == expected


@pytest.mark.parametrize("n,expected", [(1, 1), (3, 2), (12, 4), (13, 12)])
def test_euler_phi(n, expected):
    assert euler_phi(n) == expected


def test_divisors_and_sigma():
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    assert divisors(1) == (1,)
    assert sigma1(4) == 7
    assert sigma1(12) == 28


def test_nonpositive_input_rejected():
    with pytest.raises(ValueError):
        divisors(0)
    with pytest.raises(ValueError):
        euler_phi(-3)


def test_mobius_sums_vanish_above_one():
    assert sum(mobius(r) for r in divisors(1)) == 1
    for n in range(2, 60):
        assert sum(mobius(r) for r in divisors(n)) == 0


def test_iter_bilinear_small_cases():
    assert list(iter_bilinear(1)) == []
    assert [s.to_dict() for s in iter_bilinear(2)] == [{"s1": 1, "w1": 1, "s2": 1, "w2": 1}]
    solutions = {(s.s1, s.w1, s.s2, s.w2) for s in iter_bilinear(3)}
    assert solutions == {(1, 1, 1, 2), (1, 1, 2, 1), (1, 2, 1, 1), (2, 1, 1, 1)}


def test_iter_bilinear_is_exhaustive_and_ordered():
    for d in range(2, 16):
        solutions = list(iter_bilinear(d))
        assert all(s.d == d for s in solutions)
        assert len(solutions) == len(set(solutions)) == count_bilinear(d)
        keys = [(s.s1, s.w1, s.s2) for s in solutions]
        assert keys == sorted(keys)


def test_mobius_weight_sum():
    assert mobius_weight_sum(1) == 1
    assert mobius_weight_sum(6) == Fraction(2, 3)
    assert mobius_weight_sum(9) == Fraction(8, 9)


def test_twist_count_matches_closed_form():
    # gcd(s1, s2) = 1 and r | w1, r | w2
    assert twist_count(2, 4, 1, 3, 2) == 2 * 4 * 6 // 2
    assert twist_count(3, 3, 2, 5, 3) == 3 * 3 * 6 // 3
    assert twist_count(2, 3, 1, 1, 1) == 2 * 3 * 5


def test_mzv_partial_small_cutoff_is_exact():
    assert mzv_partial(MzvKind.ZETA2, 2) == mpmath.mpf("1.25")
    assert mzv_partial("z22", 2) == mpmath.mpf(1) / 4
    assert mzv_partial("z13", 2) == mpmath.mpf(1) / 8


def test_mzv_partial_rejects_tiny_cutoff():
    with pytest.raises(ValueError):
        mzv_partial(MzvKind.ZETA4, 1)


def test_mzv_partial_sums_approach_targets():
    targets = mzv_targets()
    for kind in MzvKind:
        value = mzv_partial(kind, 10_000)
        assert abs(value - targets[kind]) / targets[kind] < 1e-3


def test_mzv_identities_hold_on_partial_sums():
    n = 5000
    sums = {kind: mzv_partial(kind, n) for kind in MzvKind}
    assert abs(sums[MzvKind.Z22] + sums[MzvKind.Z13] - sums[MzvKind.ZETA4]) < 1e-3
    assert abs(sums[MzvKind.ZETA2] ** 2 - 2 * sums[MzvKind.Z22] - sums[MzvKind.ZETA4]) < 1e-3


def test_ext_gcd():
    g, x, y = ext_gcd(240, 46)
    assert g == 2 and 240 * x + 46 * y == 2
    g, x, y = ext_gcd(-4, 6)
    assert g == 2 and -4 * x + 6 * y == 2


def test_hermite_basis_and_index():
    assert hermite_basis([(2, 0), (0, 3)]) == (2, 0, 3)
    assert hermite_basis([(1, 1), (1, -1)]) == (2, 1, 1)
    assert lattice_index([(1, 1), (1, -1)]) == 2
    assert lattice_index([(3, 0), (1, 2), (0, 4)]) == 2


def test_elementary_divisors():
    assert elementary_divisors([(2, 0), (0, 2)]) == (2, 2)
    assert elementary_divisors([(1, 1), (1, -1)]) == (1, 2)
    assert elementary_divisors([(4, 0), (0, 1)]) == (1, 4)


def test_spans_z2():
    assert spans_z2([(1, 0), (0, 1)])
    assert spans_z2([(2, 0), (0, 2), (1, 1), (0, 1)])
    assert not spans_z2([(2, 0), (0, 1)])
    assert not spans_z2([(1, 0), (2, 0)])


def test_rank_one_lattice_is_singular():
    with pytest.raises(Singular):
        hermite_basis([(1, 0), (2, 0)])


def _trial_division_mobius(n: int) -> int:
    value, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            value = -value
        p += 1
    return -value if n > 1 else value


def test_multiplicative_functions_against_direct_counts():
    for n in range(1, 200):
        assert mobius(n) == _trial_division_mobius(n)
        assert euler_phi(n) == sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)
        assert sigma1(n) == sum(k for k in range(1, n + 1) if n % k == 0)
