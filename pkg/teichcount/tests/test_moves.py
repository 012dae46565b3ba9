"""
Tests for kernel moves, Smith reduction and normalization to S0
"""

import random
from math import lcm

import pytest
from sympy import ZZ, Matrix
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from teichcount.cover_enum import CylCoords11, is_primitive, lattice_of, primitive_states
from teichcount.errors import NonTermination, NotPrimitive, OutOfRange, PreconditionFailed, Singular
from teichcount.models import MoveKind
from teichcount.moves import (
    SlitTorusState,
    ThreeCylState,
    canonical_slit_torus,
    canonical_state,
    case_b_window,
    det,
    fuzz_moves,
    kernel_components,
    mat_mul,
    move_horizontal,
    move_horizontal_inverse,
    move_vertical,
    normalize_to_canonical,
    smith_normal_form,
    sweep_normalization,
    to_slit_torus,
)


def _state(*fields) -> ThreeCylState:
    return ThreeCylState.of(CylCoords11(*fields))


class TestSmithNormalForm:
    @pytest.mark.parametrize(
        "matrix,expected",
        [
            (((1, 0), (0, 6)), (1, 6)),
            (((2, 1), (0, 3)), (1, 6)),
            (((2, 0), (0, 2)), (2, 2)),
            (((4, 6), (2, 8)), (2, 10)),
            (((7, 9), (-3, -4)), (1, 1)),
            (((1, 1), (1, 2)), (1, 1)),
            (((2, 2), (2, 6)), (2, 4)),
            (((0, 1), (1, 0)), (1, 1)),
            (((0, 3), (-6, 0)), (3, 6)),
        ],
    )
    def test_divisors(self, matrix, expected):
        d1, d2, left, right = smith_normal_form(matrix)
        assert (d1, d2) == expected
        assert mat_mul(mat_mul(left, matrix), right) == ((d1, 0), (0, d2))
        assert abs(det(left)) == abs(det(right)) == 1

    def test_agrees_with_sympy(self):
        rng = random.Random(11)
        for _ in range(200):
            matrix = tuple(tuple(rng.randint(-9, 9) for _ in range(2)) for _ in range(2))
            if det(matrix) == 0:
                continue
            reference = sympy_snf(Matrix(matrix), domain=ZZ)
            expected = sorted(abs(int(reference[i, i])) for i in range(2))
            assert list(smith_normal_form(matrix)[:2]) == expected

    def test_singular(self):
        with pytest.raises(Singular):
            smith_normal_form(((1, 2), (2, 4)))


class TestHorizontalMove:
    def test_positive_orientation(self):
        moved = move_horizontal(_state(1, 1, 2, 1, 1, 1, 0, 0, 0))
        assert (moved.coords.t1, moved.coords.t2, moved.coords.t3) == (0, 1, 2)

    def test_negative_orientation(self):
        moved = move_horizontal(_state(-1, 1, 1, 1, 1, 0, 0, 0, 0))
        assert (moved.coords.t1, moved.coords.t2, moved.coords.t3) == (0, 0, 1)

    def test_other_coordinates_fixed(self):
        start = _state(1, 2, 3, 1, 1, 1, 1, 2, 4)
        moved = move_horizontal(start).coords
        assert (moved.sigma, moved.w1, moved.w2, moved.s1, moved.s2, moved.k3) == (1, 2, 3, 1, 1, 1)

    def test_inverse_and_period(self):
        for coords in primitive_states(5):
            state = ThreeCylState(coords, 5)
            assert move_horizontal_inverse(move_horizontal(state)) == state
            period = lcm(coords.w1, coords.w2, coords.wide_width)
            current = state
            for _ in range(period):
                current = move_horizontal(current)
            assert current == state


class TestVerticalMove:
    def test_generic_step_only_lowers_k3(self):
        start = _state(1, 1, 1, 4, 5, 3, 0, 0, 0)
        moved = move_vertical(start).coords
        assert moved.k3 == 2
        assert (moved.s1, moved.s2, moved.w1, moved.w2) == (4, 5, 1, 1)
        assert (moved.t1, moved.t2, moved.t3) == (0, 0, 0)

    def test_collapse_outside_window_flips_sigma(self):
        start = _state(1, 1, 2, 1, 1, 1, 0, 0, 0)
        assert start.coords.t3 not in case_b_window(start.coords)
        moved = move_vertical(start).coords
        assert moved.sigma == -1
        assert (moved.w1, moved.w2) == (1, 2)

    def test_collapse_inside_window_rotates_widths(self):
        start = _state(1, 1, 2, 1, 1, 1, 0, 0, 2)
        assert start.coords.t3 in case_b_window(start.coords)
        moved = move_vertical(start).coords
        assert sorted((moved.w1, moved.w2, moved.wide_width)) == [1, 1, 2]
        assert moved.d == 3

    def test_non_primitive_rejected(self):
        with pytest.raises(NotPrimitive):
            move_vertical(_state(1, 1, 1, 2, 2, 1, 0, 0, 0))

    def test_moves_preserve_lattice(self):
        for d in (4, 6):
            for coords in primitive_states(d):
                state = ThreeCylState(coords, d)
                for move in (move_horizontal, move_vertical):
                    moved = move(state).coords
                    assert moved.d == d
                    assert is_primitive(moved)
                    assert lattice_of(moved) == lattice_of(coords)


class TestSlitTorus:
    def test_degree_two_development(self):
        slit = to_slit_torus(_state(1, 1, 1, 1, 1, 1, 0, 0, 1))
        assert slit.d == 2
        assert slit.u in {(0, 0), (0, 1)}
        assert slit.is_primitive()

    def test_unequal_widths_rejected(self):
        with pytest.raises(PreconditionFailed):
            to_slit_torus(_state(1, 1, 2, 1, 1, 1, 0, 0, 1))

    def test_unprepared_twist_rejected(self):
        with pytest.raises(PreconditionFailed):
            to_slit_torus(_state(1, 1, 1, 1, 1, 1, 0, 0, 0))

    def test_canonical_strip(self):
        strip = canonical_slit_torus(5)
        assert strip.to_dict() == {"L": [[1, 0], [0, 5]], "u": [0, 1], "d": 5}
        assert strip.is_primitive()
        assert not SlitTorusState((2, 0, 2), (0, 0)).is_primitive()

    def test_sl2_action_keeps_determinant(self):
        moved = canonical_slit_torus(6).apply(((1, 1), (0, 1)))
        assert moved.d == 6


class TestNormalization:
    def test_canonical_state_has_empty_trace(self):
        for d in (2, 3, 7):
            trace = normalize_to_canonical(canonical_state(d))
            assert trace.records == []
            assert trace.final == canonical_slit_torus(d)

    def test_degree_three_states_all_reach_s0(self):
        results = sweep_normalization(3)
        assert len(results) == 16
        assert all(result.reached for result in results)

    @pytest.mark.parametrize("d", [4, 5, 6, 7])
    def test_every_primitive_state_reaches_s0(self, d):
        for coords in primitive_states(d):
            trace = normalize_to_canonical(coords)
            assert trace.final == canonical_slit_torus(d)
            assert trace.length <= 10 * d ** 3

    @pytest.mark.slow
    @pytest.mark.parametrize("d", [8, 9, 10])
    def test_larger_degrees_reach_s0(self, d):
        results = sweep_normalization(d)
        assert len(results) == len(primitive_states(d))
        assert all(result.reached for result in results)

    def test_trace_records_moves(self):
        trace = normalize_to_canonical(CylCoords11(1, 1, 2, 1, 1, 1, 0, 0, 0))
        kinds = {record.kind for record in trace.records}
        assert MoveKind.VERTICAL in kinds
        assert trace.to_dict()["length"] == trace.length

    def test_non_primitive_rejected(self):
        with pytest.raises(NotPrimitive):
            normalize_to_canonical(CylCoords11(1, 1, 1, 2, 2, 1, 0, 0, 0))

    def test_budget_exhaustion(self):
        with pytest.raises(NonTermination):
            normalize_to_canonical(CylCoords11(1, 1, 2, 1, 1, 1, 0, 0, 0), budget=0)

    def test_canonical_state_needs_degree_two(self):
        with pytest.raises(OutOfRange):
            canonical_state(1)


def test_kernel_components_partition_the_fiber():
    components = kernel_components(4)
    assert sum(len(component) for component in components) == 48
    sizes = [len(component) for component in components]
    assert sizes == sorted(sizes, reverse=True)


def test_fuzz_small_sample():
    summary = fuzz_moves(300, d_max=7, seed=3)
    assert summary.checked == 300
    assert summary.ok, summary.failures[:3]


@pytest.mark.slow
def test_fuzz_full_sample():
    assert fuzz_moves(10_000).ok
