"""
Unit tests for the L_p affine surface area kernels.
"""

import math

import numpy as np
import pytest

from lp_affine.asa import (
    AsaCalculator,
    asa_boundary_form,
    asa_closed_form,
    asa_infinity,
    asa_minus_n,
    asa_sphere_form,
    check_exponent,
    f_p_weight,
    lp_weight,
)
from lp_affine.bodies import (
    CrossPolytope,
    Cube,
    Direction,
    Ellipsoid,
    LinearMap,
    linear_image,
    make_disc_support,
    polar_body,
    volume,
)
from lp_affine.exceptions import ConfigurationError, ExponentError, UnsupportedKindError
from lp_affine.inequalities import random_smooth_body
from lp_affine.quadrature import grid_sphere3


class TestExponents:
    """Test exponent validation."""

    def test_pole_rejected(self):
        """Test p within 1e-6 of -n raises ExponentError."""
        with pytest.raises(ExponentError):
            check_exponent(-2.0 + 1e-8, 2)

    def test_nan_rejected(self):
        """Test NaN exponents are rejected."""
        with pytest.raises(ExponentError):
            check_exponent(float("nan"), 2)

    def test_infinity_accepted(self):
        """Test both infinite endpoints pass validation."""
        assert check_exponent(math.inf, 2) == math.inf
        assert check_exponent(-math.inf, 3) == -math.inf

    def test_sphere_form_at_pole(self, disc, circle_grid):
        """Test the sphere form refuses p = -n."""
        with pytest.raises(ExponentError):
            asa_sphere_form(disc, -2.0, circle_grid)


class TestSphereForm:
    """Test the sphere-form integral on closed-form bodies."""

    @pytest.mark.parametrize("p", [-6.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 5.0, math.inf, -math.inf])
    def test_disc_is_two_pi(self, disc, circle_grid, p):
        """Test as_p(B_2^2) = 2 pi for every admissible p."""
        result = asa_sphere_form(disc, p, circle_grid)
        assert result.value == pytest.approx(2.0 * math.pi, rel=1e-12)
        assert not result.divergent

    def test_ellipse_p1(self, ellipse, circle_grid):
        """Test as_1 of the ellipse (2, 1) is 2 pi 2^{1/3}."""
        result = asa_sphere_form(ellipse, 1.0, circle_grid)
        assert result.value == pytest.approx(2.0 * math.pi * 2.0 ** (1.0 / 3.0), rel=1e-10)
        assert result.relative_error < 1e-8

    @pytest.mark.parametrize("p", [-8.0, -1.0, 0.0, 1.0, 2.0, 4.0, math.inf])
    def test_ellipse_matches_closed_form(self, ellipse, circle_grid, p):
        """Test quadrature agrees with |det T|^{(n-p)/(n+p)} n|B_2^n|."""
        result = asa_sphere_form(ellipse, p, circle_grid)
        assert result.value == pytest.approx(asa_closed_form(ellipse, p), rel=1e-10)

    def test_ellipsoid_in_three_dimensions(self):
        """Test the product grid reproduces the 3D closed form."""
        body = Ellipsoid(3, semi_axes=np.array([1.2, 1.0, 0.8]))
        result = asa_sphere_form(body, 1.0, grid_sphere3(128, 64))
        assert result.value == pytest.approx(asa_closed_form(body, 1.0), rel=1e-6)

    def test_p0_is_n_times_volume(self, smooth_body, circle_grid):
        """Test as_0(K) = n|K|."""
        result = asa_sphere_form(smooth_body, 0.0, circle_grid)
        assert result.value == pytest.approx(2.0 * volume(smooth_body), rel=1e-10)

    def test_infinity_is_n_times_polar_volume(self, ellipse, circle_grid):
        """Test as_inf(K) = n|K°|."""
        result = asa_infinity(ellipse, circle_grid)
        assert result.value == pytest.approx(2.0 * volume(polar_body(ellipse)), rel=1e-10)

    def test_grid_dimension_mismatch(self, disc):
        """Test a 3D grid on a planar body is rejected."""
        with pytest.raises(ConfigurationError):
            asa_sphere_form(disc, 1.0, grid_sphere3(16, 8))


class TestPolytopes:
    """Test the polytope conventions."""

    def test_square_p1_is_zero(self, square, circle_grid):
        """Test as_p of a polytope vanishes for p > 0."""
        assert asa_sphere_form(square, 1.0, circle_grid).value == 0.0

    def test_square_p0_is_perimeter_measure(self, square, circle_grid):
        """Test as_0 of the square is n|K| = 8."""
        assert asa_sphere_form(square, 0.0, circle_grid).value == pytest.approx(8.0)

    def test_square_negative_p_diverges(self, square, circle_grid):
        """Test -n < p < 0 is flagged divergent on polytopes."""
        result = asa_sphere_form(square, -1.0, circle_grid)
        assert result.divergent
        assert math.isinf(result.value)
        assert math.isinf(result.relative_error)

    def test_square_below_pole_has_caveat(self, square, circle_grid):
        """Test p < -n gives 0 with a caveat."""
        result = asa_sphere_form(square, -3.0, circle_grid)
        assert result.value == 0.0
        assert result.caveat is not None

    def test_cross_polytope_infinity(self):
        """Test as_inf of the cross-polytope is n|B_inf^n|."""
        assert asa_closed_form(CrossPolytope(2), math.inf) == pytest.approx(8.0)
        assert asa_closed_form(Cube(2), math.inf) == pytest.approx(4.0)

    def test_square_minus_n_diverges(self, square, circle_grid):
        """Test the sup-form is infinite on polytopes."""
        assert asa_minus_n(square, circle_grid).divergent


class TestBoundaryForm:
    """Test the boundary form against the sphere form."""

    @pytest.mark.parametrize("p", [-4.0, -1.0, 0.5, 1.0, 3.0])
    def test_ellipse_forms_agree(self, ellipse, circle_grid, p):
        """Test the two forms agree on the ellipse."""
        sphere = asa_sphere_form(ellipse, p, circle_grid).value
        boundary = asa_boundary_form(ellipse, p, circle_grid).value
        assert boundary == pytest.approx(sphere, rel=1e-10)

    def test_smooth_body_forms_agree(self, smooth_body, circle_grid):
        """Test the two forms agree on a random smooth body."""
        sphere = asa_sphere_form(smooth_body, 1.0, circle_grid).value
        boundary = asa_boundary_form(smooth_body, 1.0, circle_grid).value
        assert boundary == pytest.approx(sphere, rel=1e-9)

    def test_polytope_rejected(self, square, circle_grid):
        """Test polytopes have no boundary form."""
        with pytest.raises(UnsupportedKindError):
            asa_boundary_form(square, 1.0, circle_grid)


class TestMinusN:
    """Test the sup-form endpoint."""

    def test_ellipse_is_determinant(self, ellipse, circle_grid):
        """Test f^{1/2} h^{3/2} is constant ab = 2 on the ellipse (2, 1)."""
        result = asa_minus_n(ellipse, circle_grid)
        assert result.p == -2.0
        assert result.value == pytest.approx(2.0, rel=1e-12)
        assert result.method == "sup-form"

    def test_refinement_never_lowers_grid_maximum(self, smooth_body, circle_grid):
        """Test the refined sup is at least the grid maximum."""
        coarse = asa_minus_n(smooth_body, circle_grid)
        U = circle_grid.nodes
        grid_max = np.max(smooth_body.curvature_values(U) ** 0.5 * smooth_body.support_values(U) ** 1.5)
        assert coarse.value >= grid_max


class TestAffineBehaviour:
    """Test the affine scaling law."""

    @pytest.mark.parametrize("p", [0.5, 1.0, -1.0])
    def test_linear_image_scaling(self, smooth_body, circle_grid, p):
        """Test as_p(TK) = |det T|^{(n-p)/(n+p)} as_p(K)."""
        T = LinearMap(np.array([[1.4, 0.3], [0.0, 0.8]]))
        image = linear_image(smooth_body, T)
        base = asa_sphere_form(smooth_body, p, circle_grid).value
        scaled = asa_sphere_form(image, p, circle_grid).value
        factor = abs(T.determinant) ** ((2.0 - p) / (2.0 + p))
        assert scaled == pytest.approx(factor * base, rel=1e-6)

    def test_ellipse_closed_form_is_affine_image_of_disc(self):
        """Test the closed form matches the scaling law from the disc."""
        body = Ellipsoid(2, semi_axes=np.array([3.0, 0.5]))
        expected = 1.5 ** (1.0 / 3.0) * 2.0 * math.pi
        assert asa_closed_form(body, 1.0) == pytest.approx(expected)


class TestWeights:
    """Test the f_p surface-body weight."""

    def test_ellipse_p4_on_axis(self, ellipse):
        """Test f_4 at the end of the long axis of the ellipse (2, 1)."""
        value = f_p_weight(ellipse, 4.0, Direction.from_angle(0.0))
        assert value == pytest.approx(2.0 ** (-1.0 / 3.0))

    def test_disc_weight_is_one(self, disc, circle_grid):
        """Test kappa = <y, N> = 1 gives f_p = 1 on the disc."""
        weight = lp_weight(disc, 1.0)
        np.testing.assert_allclose(weight(circle_grid.nodes), 1.0)

    def test_weight_positive(self, smooth_body, circle_grid):
        """Test f_p is strictly positive on a C^2_+ body."""
        assert np.all(lp_weight(smooth_body, -0.5)(circle_grid.nodes) > 0.0)

    def test_polytope_rejected(self, square):
        """Test polytopes have no f_p weight."""
        with pytest.raises(UnsupportedKindError):
            lp_weight(square, 1.0)


class TestCalculator:
    """Test cached evaluation."""

    def test_matches_sphere_form(self, smooth_body, circle_grid):
        """Test cached values equal direct evaluation."""
        calc = AsaCalculator(smooth_body, circle_grid)
        for p in (0.0, 1.0, -0.5, math.inf):
            assert calc.value(p) == pytest.approx(
                asa_sphere_form(smooth_body, p, circle_grid).value, rel=1e-14
            )

    def test_cache_returns_same_object(self, disc, circle_grid):
        """Test repeated exponents hit the cache."""
        calc = AsaCalculator(disc, circle_grid)
        assert calc.get(2.0) is calc.get(2.0)

    def test_pole_uses_sup_form(self, ellipse, circle_grid):
        """Test p = -n is routed to the sup-form."""
        calc = AsaCalculator(ellipse, circle_grid)
        assert calc.get(-2.0).method == "sup-form"
        assert calc.value(-2.0) == pytest.approx(2.0, rel=1e-12)

    def test_polytope_convention(self, square, circle_grid):
        """Test the calculator follows the polytope convention."""
        calc = AsaCalculator(square, circle_grid)
        assert calc.value(1.0) == 0.0
        assert calc.get(-1.0).divergent
        assert calc.value(math.inf) == pytest.approx(4.0)

    def test_coarse_grid_samples_are_reused(self, monkeypatch):
        """Test rebuilt coarse companion grids hit the sample cache."""
        calls = []
        original = Ellipsoid.curvature_values

        def counting(body, U):
            calls.append(len(U))
            return original(body, U)

        monkeypatch.setattr(Ellipsoid, "curvature_values", counting)
        body = Ellipsoid(3, semi_axes=np.array([1.2, 1.0, 0.8]))
        calc = AsaCalculator(body, grid_sphere3(32, 16))
        for p in (1.0, 2.0, 0.5, 4.0, -1.0):
            calc.get(p)
        assert len(calls) == 2
        assert len(calc._samples) == 2


class TestAcrossEnsemble:
    """Test both forms and the scaling law over seeded bodies."""

    @pytest.mark.parametrize("seed", range(20))
    def test_forms_agree_on_seeded_bodies(self, circle_grid, seed):
        """Test sphere and boundary forms agree within 1e-6 for seven exponents."""
        body = random_smooth_body(seed=seed)
        for p in (-6.0, -1.0, -0.5, 0.5, 1.0, 2.0, 5.0):
            sphere = asa_sphere_form(body, p, circle_grid).value
            boundary = asa_boundary_form(body, p, circle_grid).value
            assert boundary == pytest.approx(sphere, rel=1e-6)

    @pytest.mark.parametrize("p", [-6.0, -1.0, 1.0, 2.0])
    def test_ellipse_diagonal_scaling(self, circle_grid, p):
        """Test the scaling law for an ellipse under a diagonal map."""
        body = Ellipsoid(2, semi_axes=np.array([1.5, 1.0]))
        T = LinearMap.diagonal([2.0, 0.5])
        base = asa_sphere_form(body, p, circle_grid).value
        scaled = asa_sphere_form(linear_image(body, T), p, circle_grid).value
        assert scaled == pytest.approx(abs(T.determinant) ** ((2.0 - p) / (2.0 + p)) * base, rel=1e-6)


class TestOriginDependence:
    """Test how as_p reacts to moving the origin inside K."""

    def test_translation_of_disc(self, circle_grid):
        """Test translation keeps as_0, raises as_2 and raises the polar volume."""
        disc = make_disc_support(harmonics=4)
        moved = disc.translated([0.3, 0.0])
        assert asa_sphere_form(moved, 0.0, circle_grid).value == pytest.approx(2.0 * math.pi, rel=1e-12)
        assert asa_sphere_form(moved, 2.0, circle_grid).value > 1.01 * 2.0 * math.pi
        polar_area = math.pi / (1.0 - 0.3 ** 2) ** 1.5
        assert asa_infinity(moved, circle_grid).value == pytest.approx(2.0 * polar_area, rel=1e-10)
