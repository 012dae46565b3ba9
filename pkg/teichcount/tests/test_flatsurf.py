"""
Tests for exact geometry on S(p/q, alpha): field arithmetic, tracing and censuses
"""

import math
from fractions import Fraction

import pytest

from teichcount.errors import DegenerateStart, OutOfRange, PreconditionFailed, RationalAlpha
from teichcount.flatsurf import (
    BandModel,
    EndsAtRegularPoint,
    FieldScalar,
    HitsZeroMidway,
    LandsOnZero,
    Ray,
    Side,
    Zero,
    band_model,
    brute_force_saddles,
    build_surface,
    cylinder_census,
    direction_cylinders,
    growth_ratio,
    multiplicity,
    parse_alpha,
    primitive_directions,
    quadratic_fit,
    rays_from,
    run_census,
    saddle_candidates,
    saddle_census,
    t_grid,
    trace_ray,
    zero_offset,
)
from teichcount.models import CensusPoint, CensusResult

SQRT2 = FieldScalar(0, 1, 2)
ALPHA = FieldScalar(-1, 1, 2)


class TestFieldScalar:
    def test_normalized_representation(self):
        assert FieldScalar(2, 4, 2, 6) == FieldScalar(1, 2, 2, 3)
        assert FieldScalar(1, 1, 2, -1) == FieldScalar(-1, -1, 2, 1)
        square = FieldScalar(0, 1, 4)
        assert square.is_rational and square == 2

    def test_arithmetic(self):
        assert SQRT2 * SQRT2 == 2
        assert 1 / ALPHA == SQRT2 + 1
        assert (ALPHA + 1) - SQRT2 == 0
        assert ALPHA.conjugate() == FieldScalar(-1, -1, 2)
        assert Fraction(1, 2) * SQRT2 == FieldScalar(0, 1, 2, 2)

    def test_exact_order_and_sign(self):
        assert 0 < ALPHA < 1
        assert ALPHA < Fraction(5, 12)
        assert ALPHA > Fraction(41, 100)
        assert (-ALPHA).sign() == -1
        assert abs(-ALPHA) == ALPHA

    def test_floor_and_mod(self):
        assert ALPHA.floor() == 0
        assert FieldScalar(1, -1, 2).floor() == -1
        assert FieldScalar(0, -1, 2, 2).floor() == -1
        assert math.floor(SQRT2 * 3) == 4
        assert FieldScalar.from_rational(5).mod(2, -1) == -1
        assert (ALPHA + 4).mod(2, -1) == ALPHA

    def test_hash_agrees_with_fraction(self):
        half = FieldScalar.from_rational(Fraction(1, 2))
        assert hash(half) == hash(Fraction(1, 2))
        assert {half: "x"}[FieldScalar(1, 0, 2, 2)] == "x"

    def test_mixed_radicands_rejected(self):
        with pytest.raises(ValueError):
            SQRT2 + FieldScalar(0, 1, 3)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            SQRT2 / FieldScalar(0)

    def test_float_value(self):
        assert float(ALPHA) == pytest.approx(math.sqrt(2) - 1)
        assert str(ALPHA) == "-1+1*sqrt(2)"


class TestSurface:
    def test_parse_alpha(self):
        assert parse_alpha("-1,1,2,1") == ALPHA
        assert parse_alpha("1/2").is_rational
        for bad in ("1,2", "a,b,c,d", "1,1,2,0", "1,1,-2,1"):
            with pytest.raises(OutOfRange):
                parse_alpha(bad)

    def test_slit_positions(self, surface_q2):
        assert surface_q2.slit_abscissas == (Fraction(1, 2), Fraction(3, 2))
        assert surface_q2.area == 4
        assert surface_q2.zero_points(Zero.TOP) == ((Fraction(1, 2), ALPHA), (Fraction(3, 2), ALPHA))

    def test_slits_share_projection(self, surface_q3):
        a, a_prime = surface_q3.slit_abscissas
        assert surface_q3.base_projection(a) == surface_q3.base_projection(a_prime) == Fraction(1, 3)

    def test_invalid_surfaces(self):
        with pytest.raises(OutOfRange):
            build_surface(2, 4)
        with pytest.raises(OutOfRange):
            build_surface(1, 1)
        with pytest.raises(RationalAlpha):
            build_surface(1, 2, "1/2")
        with pytest.raises(OutOfRange):
            build_surface(1, 2, "1,1,2,1")

    def test_zero_lookup(self, surface_q2):
        assert surface_q2.zero_at((Fraction(5, 2), -ALPHA)) is Zero.BOTTOM
        assert surface_q2.zero_at((Fraction(1), ALPHA)) is None
        assert surface_q2.in_slit((Fraction(3, 2), FieldScalar(0)))
        assert zero_offset(surface_q2) == (0, -2 * ALPHA)


class TestRays:
    def test_vertical_rays_into_the_slit_carry_sides(self, surface_q2):
        down = (Fraction(0), -2 * ALPHA)
        first, second = rays_from(surface_q2, Zero.TOP, down)
        assert {first.side, second.side} == {Side.LEFT, Side.RIGHT}
        assert first.start == second.start == (Fraction(1, 2), ALPHA)

    def test_other_directions_leave_both_representatives(self, surface_q2):
        first, second = rays_from(surface_q2, Zero.TOP, (Fraction(0), FieldScalar(1)))
        assert first.side is second.side is None
        assert {first.start[0], second.start[0]} == {Fraction(1, 2), Fraction(3, 2)}

    def test_zero_direction_rejected(self, surface_q2):
        with pytest.raises(PreconditionFailed):
            rays_from(surface_q2, Zero.BOTTOM, (Fraction(0), FieldScalar(0)))


class TestTracer:
    def test_zero_met_halfway(self, surface_q2):
        ray = Ray.at((Fraction(1, 2), ALPHA), (Fraction(2), FieldScalar(0)))
        outcome = trace_ray(surface_q2, ray)
        assert isinstance(outcome, HitsZeroMidway)
        assert outcome.zero is Zero.TOP
        assert outcome.fraction == Fraction(1, 2)

    def test_lands_on_zero(self, surface_q2):
        ray = Ray.at((Fraction(1), ALPHA), (Fraction(1, 2), FieldScalar(0)))
        assert trace_ray(surface_q2, ray) == LandsOnZero(Zero.TOP)

    def test_slit_side_is_a_saddle_connection(self, surface_q2):
        ray = Ray.at((Fraction(1, 2), ALPHA), (Fraction(0), -2 * ALPHA), Side.RIGHT)
        assert trace_ray(surface_q2, ray) == LandsOnZero(Zero.BOTTOM)
        with pytest.raises(DegenerateStart):
            trace_ray(surface_q2, Ray.at((Fraction(1, 2), ALPHA), (Fraction(0), -2 * ALPHA)))

    def test_unit_step_to_the_next_top_endpoint_lands(self, surface_q2):
        ray = Ray.at((Fraction(1, 2), ALPHA), (Fraction(1), FieldScalar(0)))
        assert trace_ray(surface_q2, ray) == LandsOnZero(Zero.TOP)

    def test_regular_loop_closes(self, surface_q2):
        start = (Fraction(1), FieldScalar.from_rational(Fraction(1, 2)))
        outcome = trace_ray(surface_q2, Ray.at(start, (Fraction(2), FieldScalar(0))))
        assert outcome == EndsAtRegularPoint(start)

    def test_crossing_a_slit_teleports(self, surface_q2):
        start = (Fraction(0), FieldScalar(0))
        outcome = trace_ray(surface_q2, Ray.at(start, (Fraction(1), FieldScalar(0))))
        assert outcome == EndsAtRegularPoint(start)

    def test_side_decides_start_in_slit(self, surface_q2):
        start = (Fraction(1, 2), FieldScalar(0))
        direction = (Fraction(1), FieldScalar(0))
        with pytest.raises(DegenerateStart):
            trace_ray(surface_q2, Ray.at(start, direction))
        left = trace_ray(surface_q2, Ray.at(start, direction, Side.LEFT))
        right = trace_ray(surface_q2, Ray.at(start, direction, Side.RIGHT))
        assert left == EndsAtRegularPoint((Fraction(1, 2), FieldScalar(0)))
        assert right == EndsAtRegularPoint((Fraction(3, 2), FieldScalar(0)))

    def test_holonomy_must_match_direction(self, surface_q2):
        ray = Ray.at((Fraction(1), FieldScalar(0)), (Fraction(1), FieldScalar(0)))
        with pytest.raises(PreconditionFailed):
            trace_ray(surface_q2, ray, (Fraction(-1), FieldScalar(0)))
        with pytest.raises(PreconditionFailed):
            trace_ray(surface_q2, ray, (Fraction(1), FieldScalar(1)))


class TestSaddleConnections:
    def test_slit_itself_has_multiplicity_two(self, surface_q2):
        assert multiplicity(surface_q2, (Fraction(0), -2 * ALPHA)) == 2
        assert multiplicity(surface_q2, (Fraction(0), 2 - 2 * ALPHA)) == 2

    def test_candidates_in_the_vertical_column(self, surface_q2):
        found = saddle_candidates(surface_q2, 0, Fraction(2))
        assert sorted(vy for _, vy in found) == [-2 * ALPHA, 2 - 2 * ALPHA]

    def test_q2_connections_come_in_pairs(self, surface_q2):
        census = saddle_census(surface_q2, 12)
        assert set(census.multiplicity) <= {0, 2}
        assert all(point.ns1 == 0 for point in census.points)

    def test_reversed_direction_from_the_other_zero(self, surface_q3):
        for m in range(-6, 7):
            for vx, vy in saddle_candidates(surface_q3, m, Fraction(5)):
                forward = multiplicity(surface_q3, (vx, vy))
                assert forward == multiplicity(surface_q3, (-vx, -vy), Zero.BOTTOM)

    def test_brute_force_agrees_with_candidate_lattice(self, surface_q3):
        census = saddle_census(surface_q3, 6)
        total = sum(k * count for k, count in census.multiplicity.items())
        assert brute_force_saddles(surface_q3, 6) == total

    def test_counts_are_monotone(self, surface_q3):
        census = saddle_census(surface_q3, [4, 8, 12])
        assert [point.T for point in census.points] == [4, 8, 12]
        for earlier, later in zip(census.points, census.points[1:]):
            assert earlier.ns1 <= later.ns1
            assert earlier.ns2 <= later.ns2
        assert census.points[-1].ns1 > 0

    @pytest.mark.parametrize("fixture", ["surface_q2", "surface_q3"])
    def test_counts_survive_reversed_orientation(self, fixture, request):
        surface = request.getfixturevalue(fixture)
        forward = saddle_census(surface, [4, 8])
        backward = saddle_census(surface, [4, 8], source=Zero.BOTTOM)
        assert [(p.ns1, p.ns2) for p in backward.points] == [(p.ns1, p.ns2) for p in forward.points]
        assert backward.multiplicity == forward.multiplicity

    @pytest.mark.slow
    def test_q2_connections_pair_up_to_fifty(self, surface_q2):
        census = saddle_census(surface_q2, 50)
        assert set(census.multiplicity) <= {0, 2}
        assert census.points[0].ns1 == 0
        assert census.points[0].ns2 > 0


class TestCylinders:
    def test_horizontal_direction_q2(self, surface_q2):
        model = band_model(surface_q2, (Fraction(1), FieldScalar(0)))
        assert isinstance(model, BandModel)
        assert model.arcs == 2 and model.sheets == 2
        assert model.cylinders() == [1, 1, 2]

    def test_opposite_vectors_share_a_model(self, surface_q3):
        forward = band_model(surface_q3, (Fraction(2, 3), FieldScalar(2)))
        backward = band_model(surface_q3, (Fraction(-2, 3), FieldScalar(-2)))
        assert (forward.m, forward.n) == (backward.m, backward.n) == (1, 1)

    def test_vertical_direction(self, surface_q3):
        assert direction_cylinders(surface_q3, 0, 1) == [1, 1]

    def test_band_model_preconditions(self, surface_q2):
        with pytest.raises(PreconditionFailed):
            band_model(surface_q2, (Fraction(2), FieldScalar(0)))
        with pytest.raises(PreconditionFailed):
            band_model(surface_q2, (Fraction(0), FieldScalar(2)))
        with pytest.raises(PreconditionFailed):
            band_model(surface_q2, (Fraction(1), ALPHA))

    def test_three_cylinders_in_every_direction(self, surface_q2, surface_q3):
        for surface in (surface_q2, surface_q3):
            for m, n in primitive_directions(surface, Fraction(8)):
                if m == 0:
                    continue
                found = direction_cylinders(surface, m, n)
                assert len(found) == 3
                assert found[2] == found[0] + found[1]
                if surface.q == 2:
                    assert found == [1, 1, 2]

    @pytest.mark.slow
    def test_three_cylinders_up_to_twenty(self, surface_q2):
        for m, n in primitive_directions(surface_q2, Fraction(20)):
            if m:
                assert direction_cylinders(surface_q2, m, n) == [1, 1, 2]

    def test_directions_are_primitive_and_short(self, surface_q3):
        T = Fraction(6)
        for m, n in primitive_directions(surface_q3, T):
            assert math.gcd(m, n) == 1
            assert Fraction(4 * m * m, 9) + 4 * n * n <= T * T

    def test_cylinder_census_histogram(self, surface_q2):
        census = cylinder_census(surface_q2, [5, 10])
        assert census.cylinders_per_direction[2] == 1
        assert set(census.cylinders_per_direction) == {2, 3}
        assert census.points[0].nc < census.points[1].nc


class TestCensus:
    def test_t_grid(self):
        assert t_grid([3, 1, 2, 2]) == (1, 2, 3)
        assert t_grid("5/2") == (Fraction(5, 2),)
        with pytest.raises(OutOfRange):
            t_grid([0, 4])

    def test_run_census_merges_both_counts(self, surface_q3):
        census = run_census(surface_q3, [6])
        point = census.points[0]
        assert point.nc == cylinder_census(surface_q3, [6]).points[0].nc
        assert point.ns1 == saddle_census(surface_q3, [6]).points[0].ns1
        assert census.to_dict()["q"] == 3

    def test_quadratic_fit_on_exact_growth(self):
        points = [CensusPoint(Fraction(T), 0, 3 * T * T, 2 * T * T) for T in (10, 20, 30)]
        fits = {fit.quantity: fit for fit in quadratic_fit(CensusResult(1, 2, "a", points))}
        assert fits["nc"].coefficient == pytest.approx(2.0)
        assert fits["nc"].slope == pytest.approx(2.0)
        assert fits["nc"].theory == pytest.approx(4.5 * math.pi / 4)
        assert fits["ns2"].ratio == pytest.approx(3.0 / (2 * math.pi / 4))
        assert math.isnan(fits["ns1"].ratio)

    @pytest.mark.parametrize("cutoffs", [0, 1, 2])
    def test_quadratic_fit_needs_three_cutoffs(self, cutoffs):
        points = [CensusPoint(Fraction(T), 0, T * T, T * T) for T in range(1, cutoffs + 1)]
        with pytest.raises(OutOfRange):
            quadratic_fit(CensusResult(1, 2, "a", points))

    def test_quadratic_fit_unknown_quantity(self):
        points = [CensusPoint(Fraction(T), 0, 0, 0) for T in (1, 2, 3)]
        with pytest.raises(OutOfRange):
            quadratic_fit(CensusResult(1, 2, "a", points), ["nx"])

    def test_growth_ratio_at_one_cutoff(self):
        point = CensusPoint(Fraction(10), 27, 0, 0)
        assert growth_ratio(point, 3, "ns1") == pytest.approx(0.27 / (27 / 16 * math.pi / 4))
        assert math.isnan(growth_ratio(point, 2, "ns1"))
        with pytest.raises(OutOfRange):
            growth_ratio(point, 3, "nx")


@pytest.mark.slow
@pytest.mark.parametrize("q,T,quantities", [(2, 80, ("ns2", "nc")), (3, 100, ("ns1", "ns2", "nc"))])
def test_census_growth_matches_constants(q, T, quantities):
    census = run_census(build_surface(1, q), [T // 2, 3 * T // 4, T])
    for fit in quadratic_fit(census, quantities):
        assert abs(fit.ratio - 1) <= 0.15, fit.to_dict()
