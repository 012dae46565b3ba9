"""
Tests for fiber enumeration, the monodromy oracle and the consistency report
"""

from math import factorial

import pytest

from teichcount.counting import count_covers, count_covers_trusted, count_primitive
from teichcount.cover_enum import (
    CylCoords11,
    H2OneCyl,
    H2TwoCyl,
    MonodromyTuple,
    class_representatives,
    consistency_report,
    enumerate_fiber,
    fiber_count,
    homology_image,
    is_primitive,
    lattice_of,
    monodromy_classes,
    primitive_fiber_count,
)
from teichcount.errors import BoundExceeded, OutOfRange, PreconditionFailed
from teichcount.models import Stratum


def test_degree_one_fiber_is_empty():
    assert list(enumerate_fiber(Stratum.H11, 1)) == []
    assert list(enumerate_fiber(Stratum.H2, 1)) == []


def test_degree_two_h11_fiber():
    states = list(enumerate_fiber(Stratum.H11, 2))
    assert len(states) == 4
    assert all(is_primitive(s) for s in states)
    assert all(s.is_canonical() for s in states)


def test_degree_three_h2_fiber():
    states = list(enumerate_fiber(Stratum.H2, 3))
    assert len(states) == 3
    assert sum(isinstance(s, H2TwoCyl) for s in states) == 2
    assert sum(isinstance(s, H2OneCyl) for s in states) == 1


def test_enumeration_is_deterministic():
    assert list(enumerate_fiber(Stratum.H11, 5)) == list(enumerate_fiber(Stratum.H11, 5))


def test_negative_degree_rejected():
    with pytest.raises(OutOfRange):
        enumerate_fiber(Stratum.H2, 0)


@pytest.mark.parametrize("d", range(2, 9))
def test_enumeration_matches_formulas(d):
    assert fiber_count(Stratum.H11, d) == count_covers(Stratum.H11, d)
    assert fiber_count(Stratum.H2, d) == count_covers_trusted(Stratum.H2, d)
    for stratum in Stratum:
        assert primitive_fiber_count(stratum, d) == count_primitive(stratum, d)


def test_primitivity_gcd_conditions():
    assert not is_primitive(CylCoords11(1, 1, 1, 2, 2, 1, 0, 0, 0))
    assert is_primitive(CylCoords11(1, 1, 1, 1, 1, 1, 0, 0, 0))
    assert not is_primitive(H2TwoCyl(1, 2, 2, 2, 0, 0))
    assert not is_primitive(H2OneCyl(1, 1, 1, 2, 0))
    assert not is_primitive(H2OneCyl(2, 2, 2, 1, 0))


def test_primitive_states_have_full_lattice():
    for state in enumerate_fiber(Stratum.H11, 6):
        assert is_primitive(state) == (lattice_of(state) == (1, 0, 1))


def test_state_validation():
    with pytest.raises(PreconditionFailed):
        CylCoords11(1, 1, 2, 1, 1, 0, 0, 0, 0).validate()
    with pytest.raises(PreconditionFailed):
        CylCoords11(1, 1, 2, 1, 1, 1, 0, 2, 0).validate()
    with pytest.raises(PreconditionFailed):
        H2TwoCyl(2, 2, 1, 1, 0, 0).validate()
    assert CylCoords11(-1, 1, 2, 1, 1, 0, 0, 1, 2).validate().d == 3


def test_canonical_form_swaps_narrow_cylinders():
    state = CylCoords11(1, 2, 1, 1, 1, 1, 1, 0, 2)
    canonical = state.canonical()
    assert (canonical.w1, canonical.w2) == (1, 2)
    assert canonical.swapped() == state


def test_one_cylinder_rotation_has_period_three():
    state = H2OneCyl(1, 2, 3, 1, 4)
    once, twice = state.rotated(), state.rotated().rotated()
    assert twice.rotated() == state
    assert {once.length, twice.length} == {6}
    assert state.canonical() == min(state.orbit(), key=lambda s: (s.l1, s.l2, s.l3, s.h, s.t))


class TestMonodromyOracle:
    def test_h2_degree_three(self):
        assert monodromy_classes(Stratum.H2, 3) == (3, 3)

    def test_h11_degree_two(self):
        assert monodromy_classes(Stratum.H11, 2) == (4, 4)

    def test_h2_degree_two_has_no_covers(self):
        assert monodromy_classes(Stratum.H2, 2) == (0, 0)

    def test_oracle_agrees_with_enumeration(self):
        for d in (3, 4):
            assert monodromy_classes(Stratum.H11, d) == (
                fiber_count(Stratum.H11, d),
                primitive_fiber_count(Stratum.H11, d),
            )
        for d in (4, 5):
            assert monodromy_classes(Stratum.H2, d) == (
                fiber_count(Stratum.H2, d),
                primitive_fiber_count(Stratum.H2, d),
            )

    def test_bound_exceeded(self):
        with pytest.raises(BoundExceeded):
            monodromy_classes(Stratum.H2, 8)
        with pytest.raises(BoundExceeded):
            monodromy_classes("H11", 7)

    def test_class_representatives_cover_the_group(self):
        for d in range(1, 7):
            assert sum(factorial(d) // order for _, order in class_representatives(d)) == factorial(d)


class TestHomologyImage:
    def test_transposition_pair(self):
        t = MonodromyTuple(2, (1, 0), (0, 1), (1, 0))
        assert t.is_valid()
        assert homology_image(t) == (1, 1)

    def test_trivial_translations(self):
        t = MonodromyTuple(2, (0, 1), (0, 1), (1, 0))
        assert homology_image(t) == (1, 1)

    def test_branch_cut_between_adjacent_sheets(self):
        t = MonodromyTuple(4, (1, 2, 3, 0), (0, 1, 2, 3), (1, 0, 2, 3))
        assert t.is_valid()
        assert homology_image(t) == (1, 1)

    def test_branch_cut_between_opposite_sheets(self):
        t = MonodromyTuple(4, (1, 2, 3, 0), (0, 1, 2, 3), (2, 1, 0, 3))
        assert t.is_valid()
        assert homology_image(t) == (1, 2)

    def test_disconnected_tuple_rejected(self):
        t = MonodromyTuple(2, (0, 1), (0, 1), (0, 1))
        with pytest.raises(PreconditionFailed):
            homology_image(t)


class TestConsistencyReport:
    def test_degree_two(self):
        row = consistency_report(2).row(Stratum.H11)
        assert row.n_formula == row.n_enum == row.n_oracle == 4
        assert row.np_formula == row.np_enum == row.np_oracle == 4
        assert all(check.holds for check in row.factorization if check.weighted)
        assert row.deltas == {}

    def test_degree_three_h2_delta(self):
        row = consistency_report(3).row(Stratum.H2)
        assert (row.n_enum, row.n_oracle, row.n_formula) == (3, 3, 5)
        assert row.deltas == {"n_formula-n_enum": 2}
        assert row.delta_flags == "n_formula-n_enum=+2"

    def test_degree_six_h11_identity(self):
        row = consistency_report(6).row(Stratum.H11)
        assert row.n_enum == row.n_formula == 384
        weighted = [check for check in row.factorization if check.weighted]
        literal = [check for check in row.factorization if not check.weighted]
        assert weighted[0].holds
        assert not literal[0].holds
        assert "factorization_fails" in row.delta_flags

    def test_degree_must_be_at_least_two(self):
        with pytest.raises(OutOfRange):
            consistency_report(1)
