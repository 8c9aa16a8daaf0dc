import math

import pytest

from mixvol.errors import (
    CapacityError,
    DimensionMismatchError,
    ParameterError,
    UndefinedValueError,
)
from mixvol.services.bodies import Ball, Segment, TruncatedPrism, box_polytope
from mixvol.services.mixed_volume import (
    BodyArgs,
    first_variation,
    info,
    info_of_sum,
    mixed_volume,
    mstar,
    mstar_planar,
    mv_with_ball,
    quermassintegral_Mstar,
    segment_mv,
    steiner_info,
)
from mixvol.services.sphere import kappa


class TestBodyArgs:
    def test_multiplicities_must_sum_to_dim(self, cube):
        with pytest.raises(ParameterError):
            BodyArgs(((cube, 2),))

    def test_dimension_mismatch(self, square, cube):
        with pytest.raises(DimensionMismatchError):
            BodyArgs(((square, 1), (cube, 2)))


class TestPlanarMixedVolume:
    """Tests for mixed areas"""

    def test_repeated_body_is_volume(self, triangle):
        assert mixed_volume(BodyArgs(((triangle, 2),))) == pytest.approx(0.5)

    def test_boxes(self, square, rectangle):
        # V([0,a]x[0,b], [0,c]x[0,d]) = (ad + bc)/2
        assert mixed_volume(BodyArgs.of(square, rectangle)) == pytest.approx(1.5)

    def test_symmetric(self, triangle, planar_zonotope):
        a = mixed_volume(BodyArgs.of(triangle, planar_zonotope))
        b = mixed_volume(BodyArgs.of(planar_zonotope, triangle))
        assert a == pytest.approx(b)

    def test_translation_invariant(self, triangle, square):
        a = mixed_volume(BodyArgs.of(triangle, square))
        b = mixed_volume(BodyArgs.of(triangle.translate([3.0, -2.0]), square))
        assert a == pytest.approx(b)

    def test_ball_slot_is_half_perimeter(self, square):
        value = mixed_volume(BodyArgs.of(square, Ball.unit(2)))
        assert value == pytest.approx(2.0)

    def test_orthogonal_segments(self):
        value = mixed_volume(
            BodyArgs.of(Segment([0.0, 0.0], [2.0, 0.0]), Segment([0.0, 0.0], [0, 3.0]))
        )
        assert value == pytest.approx(3.0)

    def test_mstar_planar(self, square):
        assert mstar_planar(square) == pytest.approx(2.0 / math.pi)
        assert mstar(square) == pytest.approx(2.0 / math.pi, rel=1e-5)


class TestSpatialMixedVolume:
    """Tests for mixed volumes in R^3"""

    def test_cube_with_ball(self, cube, ball3):
        value = mixed_volume(BodyArgs(((cube, 2), (ball3, 1))))
        assert value == pytest.approx(2.0)

    def test_mv_with_ball_matches_surface(self, cube):
        assert mv_with_ball(cube, cube) == pytest.approx(cube.surface_area() / 3.0)

    def test_mean_width_of_cube(self, cube, ball3):
        assert mstar(cube) == pytest.approx(0.75, rel=2e-3)
        value = mixed_volume(BodyArgs(((cube, 1), (ball3, 2))))
        assert value == pytest.approx(math.pi, rel=2e-3)
        m, v = quermassintegral_Mstar(cube)
        assert v == pytest.approx(kappa(3) * m)

    def test_segment_slot(self, cube):
        direct = mixed_volume(
            BodyArgs(((Segment([0.0, 0.0, 0.0], [0.0, 0.0, 1.0]), 1), (cube, 2)))
        )
        assert direct == pytest.approx(1.0 / 3.0)
        assert segment_mv([0.0, 0.0, 1.0], [(cube, 2)]) == pytest.approx(direct)

    def test_segment_mv_slot_count(self, cube):
        with pytest.raises(ParameterError):
            segment_mv([0.0, 0.0, 1.0], [(cube, 1)])

    def test_multilinear_in_scaling(self, cube, rng):
        K = box_polytope([1.0, 2.0, 0.5])
        base = mixed_volume(BodyArgs.of(K, cube, cube))
        assert mixed_volume(BodyArgs.of(K.scale(3.0), cube, cube)) == pytest.approx(
            3.0 * base
        )

    def test_dimension_four(self):
        ball = Ball.unit(4)
        with pytest.raises(CapacityError):
            mixed_volume(BodyArgs(((ball, 4),)))


class TestIsoperimetricRatio:
    """Tests for I(K) and its first variation"""

    def test_info(self, square, ball3):
        assert info(square) == pytest.approx(0.25)
        assert info(ball3) == pytest.approx(1.0 / 3.0)

    def test_info_undefined(self, segment_e3):
        with pytest.raises(UndefinedValueError):
            info(segment_e3)

    def test_steiner(self, square):
        assert steiner_info(square, 0.0) == pytest.approx(0.25)
        expected = (5.0 + math.pi) / (4.0 + 2.0 * math.pi)
        assert steiner_info(square, 1.0) == pytest.approx(expected)
        assert info_of_sum(square, Ball.unit(2)) == pytest.approx(expected)

    def test_steiner_negative_radius(self, square):
        with pytest.raises(ParameterError):
            steiner_info(square, -1.0)

    def test_info_of_sum(self, square):
        assert info_of_sum(square, square) == pytest.approx(0.5)

    def test_first_variation_homothety(self, square):
        # I(A + λA) = (1 + λ)/4
        report = first_variation(square, square)
        assert report.V0 == pytest.approx(1.0)
        assert report.W0 == pytest.approx(2.0)
        assert report.V1 == pytest.approx(1.0)
        assert report.W1 == pytest.approx(2.0)
        assert report.fprime0 == pytest.approx(0.25)

    def test_first_variation_matches_difference_quotient(self, triangle):
        T = Segment([0.0, 0.0], [1.0, 2.0])
        h = 1e-6
        moved = info_of_sum(triangle, T.scale(h))
        slope = (moved - info(triangle)) / h
        assert first_variation(triangle, T).fprime0 == pytest.approx(slope, rel=1e-4)

    def test_first_variation_negative_for_prism(self):
        A = TruncatedPrism(3, 0.1, 400.0).as_polytope()
        report = first_variation(A, Segment([0.0, 0.0, 0.0], [0.0, 0.0, 1.0]))
        assert report.fprime0 < 0

    def test_first_variation_needs_full_body(self, segment_e3, cube):
        with pytest.raises(UndefinedValueError):
            first_variation(segment_e3, cube)
