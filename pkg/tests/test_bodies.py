"""
Unit tests for convex body representations, polarity and body spec files.
"""

import json
import math

import numpy as np
import pytest

from lp_affine.bodies import (
    Cube,
    CrossPolytope,
    Direction,
    Ellipsoid,
    HalfspacePolytope,
    LinearMap,
    PiecewiseArc,
    PlanarPolar,
    PlanarSupport,
    body_from_spec,
    boundary_point,
    cauchy_volume,
    centroid,
    curvature_duality_check,
    curvature_function,
    gauss_curvature_at,
    linear_image,
    load_body,
    make_rounded_intersection,
    polar_body,
    polar_polygon,
    polar_support,
    polygon_area,
    polygon_vertices,
    radial,
    support,
    unit_ball,
    volume,
)
from lp_affine.exceptions import (
    ConfigurationError,
    GeometryError,
    PreconditionError,
    UnsupportedKindError,
)
from lp_affine.quadrature import grid_arcs, grid_circle, grid_sphere3


class TestDirection:
    """Test unit direction handling."""

    def test_from_vector_normalises(self):
        """Test from_vector returns a unit vector."""
        u = Direction.from_vector([3.0, 4.0])
        np.testing.assert_allclose(u.coords, [0.6, 0.8])

    def test_rejects_non_unit(self):
        """Test non-unit coordinates are rejected."""
        with pytest.raises(PreconditionError):
            Direction(np.array([1.0, 1.0]))

    def test_rejects_zero(self):
        """Test the zero vector cannot be normalised."""
        with pytest.raises(PreconditionError):
            Direction.from_vector([0.0, 0.0])


class TestSupportAndBoundary:
    """Test support, radial and curvature evaluation."""

    def test_square_support(self, square):
        """Test h of the square along the diagonal."""
        assert support(square, Direction.from_vector([1, 1])) == pytest.approx(math.sqrt(2.0))

    def test_square_radial(self, square):
        """Test rho of the square along the diagonal."""
        assert radial(square, Direction.from_vector([1, 1])) == pytest.approx(math.sqrt(2.0))

    def test_ellipse_support_and_curvature(self, ellipse):
        """Test h and f_K of the ellipse (2, 1) on the axes."""
        u = Direction.from_angle(0.0)
        assert support(ellipse, u) == pytest.approx(2.0)
        # f = a^2 b^2 / h^3 = 4 / 8
        assert curvature_function(ellipse, u) == pytest.approx(0.5)

    def test_boundary_point_of_ellipse(self, ellipse):
        """Test the inverse Gauss map at the top of the ellipse."""
        point = boundary_point(ellipse, Direction.from_angle(0.5 * math.pi))
        np.testing.assert_allclose(point.position, [0.0, 1.0], atol=1e-15)
        assert point.support_value == pytest.approx(1.0)

    def test_boundary_point_rejects_polytopes(self, square):
        """Test the Gauss map is not inverted on polytopes."""
        with pytest.raises(UnsupportedKindError):
            boundary_point(square, Direction.from_angle(0.0))

    def test_ellipsoid_gauss_curvature_matches_curvature_function(self):
        """Test kappa from the quadric formula equals 1 / f_K in 3D."""
        body = Ellipsoid(3, semi_axes=np.array([1.5, 1.0, 0.7]))
        U = grid_sphere3(16, 8).nodes[:20]
        np.testing.assert_allclose(gauss_curvature_at(body, U), 1.0 / body.curvature_values(U),
                                   rtol=1e-10)

    def test_planar_support_gauss_curvature(self, smooth_body):
        """Test the curve-formula curvature equals 1 / (h + h'')."""
        U = grid_circle(64).nodes
        np.testing.assert_allclose(gauss_curvature_at(smooth_body, U),
                                   1.0 / smooth_body.curvature_values(U), rtol=1e-10)

    def test_radial_inverts_boundary(self, smooth_body):
        """Test rho_K(x / |x|) = |x| for boundary points x."""
        theta = np.linspace(0.0, 2.0 * math.pi, 17)[:-1]
        X = smooth_body.position_theta(theta)
        norms = np.linalg.norm(X, axis=1)
        np.testing.assert_allclose(smooth_body.radial_values(X / norms[:, None]), norms, rtol=1e-10)


class TestConstruction:
    """Test body validation on construction."""

    def test_non_convex_support_rejected(self):
        """Test h + h'' <= 0 raises GeometryError."""
        with pytest.raises(GeometryError):
            PlanarSupport(2, cos_coeffs=np.array([1.0, 0.0, 0.5]), sin_coeffs=np.zeros(3))

    def test_origin_outside_rejected(self):
        """Test a translated disc missing the origin is rejected."""
        with pytest.raises(PreconditionError):
            PlanarSupport(2, cos_coeffs=np.array([1.0, 2.0]), sin_coeffs=np.zeros(2))

    def test_halfspace_polytope_vertices(self):
        """Test the square as a halfspace polytope has area 4."""
        normals = np.array([[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]])
        body = HalfspacePolytope(2, normals=normals, offsets=np.ones(4))
        assert volume(body) == pytest.approx(4.0)
        assert len(polygon_vertices(body)) == 4

    def test_unbounded_halfspaces_rejected(self):
        """Test halfspaces that do not bound a polytope."""
        normals = np.array([[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0]])
        with pytest.raises(GeometryError):
            HalfspacePolytope(2, normals=normals, offsets=np.ones(3))

    def test_rounded_intersection_is_continuous(self):
        """Test the rounded body builds with eight tangent arcs."""
        body = make_rounded_intersection(100.0, 0.01)
        assert isinstance(body, PiecewiseArc)
        assert len(body.arcs) == 8
        assert 3.9 < volume(body) < 4.0

    def test_rounded_intersection_bad_parameters(self):
        """Test R <= 1 is rejected."""
        with pytest.raises(ConfigurationError):
            make_rounded_intersection(0.5, 0.01)


class TestVolumeAndPolarity:
    """Test volumes and polar bodies."""

    def test_closed_form_volumes(self, disc, ellipse, square):
        """Test closed-form volumes of the standard bodies."""
        assert volume(disc) == pytest.approx(math.pi)
        assert volume(ellipse) == pytest.approx(2.0 * math.pi)
        assert volume(square) == pytest.approx(4.0)
        assert volume(CrossPolytope(3)) == pytest.approx(8.0 / 6.0)

    def test_cauchy_volume(self, smooth_body, circle_grid):
        """Test (1/n) int h f dsigma equals the closed-form area."""
        assert cauchy_volume(smooth_body, circle_grid) == pytest.approx(volume(smooth_body), rel=1e-10)

    def test_ellipse_polar(self, ellipse):
        """Test the polar of the ellipse (2, 1) is the ellipse (1/2, 1)."""
        polar = polar_body(ellipse)
        assert isinstance(polar, Ellipsoid)
        np.testing.assert_allclose(np.sort(polar.semi_axes), [0.5, 1.0])
        assert volume(polar) == pytest.approx(0.5 * math.pi)

    def test_cube_cross_polytope_duality(self):
        """Test B_inf and B_1 are polar to each other."""
        assert isinstance(polar_body(Cube(3)), CrossPolytope)
        assert isinstance(polar_body(CrossPolytope(2)), Cube)

    def test_polar_support_of_square(self, square, circle_grid):
        """Test h_{K°} of the square is the l_inf norm."""
        u = Direction.from_vector([1.0, 2.0])
        assert polar_support(square, u, circle_grid) == pytest.approx(2.0 / math.sqrt(5.0))

    def test_polar_support_numeric(self, smooth_body, circle_grid):
        """Test numeric h_{K°} agrees with the fitted polar body."""
        polar = polar_body(smooth_body)
        for angle in (0.3, 2.0, 4.4):
            u = Direction.from_angle(angle)
            assert polar_support(smooth_body, u, circle_grid) == pytest.approx(support(polar, u), rel=1e-8)

    def test_polar_fit_of_disc_is_disc(self):
        """Test the fitted polar of the disc has h = 1."""
        disc = PlanarSupport(2, cos_coeffs=np.array([1.0]), sin_coeffs=np.array([0.0]))
        polar = polar_body(disc)
        np.testing.assert_allclose(polar.support_values(grid_circle(64).nodes), 1.0, atol=1e-12)

    def test_polar_support_rejects_wrong_dimension(self, smooth_body):
        """Test grids of another dimension are rejected."""
        with pytest.raises(ConfigurationError):
            polar_support(smooth_body, Direction.from_angle(0.0), grid_sphere3(8, 4))

    def test_santalo_product_of_ball(self, disc):
        """Test |B||B°| = pi^2 for the disc."""
        assert volume(disc) * volume(polar_body(disc)) == pytest.approx(math.pi ** 2)

    def test_rounded_body_polar_volume(self):
        """Test the polar of K(100, 0.01) against the polar of a dense inscribed polygon."""
        body = make_rounded_intersection(100.0, 0.01)
        polar = polar_body(body)
        assert isinstance(polar, PlanarPolar)
        theta = 2.0 * np.pi * np.arange(20000) / 20000
        reference = polygon_area(polar_polygon(body.position_theta(theta)))
        assert volume(polar) == pytest.approx(reference, rel=1e-3)
        grid = grid_arcs(polar.breakpoints, 64)
        assert cauchy_volume(polar, grid) == pytest.approx(volume(polar), rel=1e-8)

    def test_rounded_body_polar_support(self):
        """Test h_{K°} = 1 / rho_K on the axes, where K reaches distance 1."""
        polar = polar_body(make_rounded_intersection(100.0, 0.01))
        for angle in (0.0, 0.5 * math.pi, math.pi):
            assert support(polar, Direction.from_angle(angle)) == pytest.approx(1.0, rel=1e-10)
        assert np.all(polar.curvature_values(grid_circle(256).nodes) > 0.0)


class TestLinearImages:
    """Test affine images."""

    def test_ellipse_image(self, disc):
        """Test diag(2, 1) maps the disc to the ellipse (2, 1)."""
        image = linear_image(disc, LinearMap.diagonal([2.0, 1.0]))
        assert volume(image) == pytest.approx(2.0 * math.pi)

    def test_polytope_image_scales_volume(self, square):
        """Test |T K| = |det T| |K| for polytopes."""
        T = LinearMap(np.array([[2.0, 0.5], [0.0, 1.0]]))
        assert volume(linear_image(square, T)) == pytest.approx(8.0)

    def test_singular_map_rejected(self):
        """Test singular matrices are rejected."""
        with pytest.raises(ConfigurationError):
            LinearMap(np.array([[1.0, 2.0], [2.0, 4.0]]))


class TestCentroidAndCurvatureDuality:
    """Test centroids and the pointwise curvature relation between K and K°."""

    def test_random_body_is_centered(self, smooth_body):
        """Test ensemble bodies are recentred to their centroid."""
        np.testing.assert_allclose(centroid(smooth_body), [0.0, 0.0], atol=1e-10)

    def test_ellipse_curvature_duality(self, ellipse, circle_grid):
        """Test <y,N><x,N°> = (kappa kappa°)^{1/(n+1)} on the ellipse."""
        result = curvature_duality_check(ellipse, Direction.from_angle(0.7), circle_grid)
        assert result.residual < 1e-12
        assert not result.degraded

    def test_smooth_body_curvature_duality(self, smooth_body, circle_grid):
        """Test the relation with a fitted polar."""
        result = curvature_duality_check(smooth_body, Direction.from_angle(1.1), circle_grid)
        assert result.residual < 1e-6

    def test_rounded_body_curvature_duality(self, circle_grid):
        """Test the relation on K(100, 0.01) with its exact polar, on side and corner arcs."""
        body = make_rounded_intersection(100.0, 0.01)
        polar = polar_body(body)
        for angle in (0.0, 0.3, 2.0, 4.0):
            result = curvature_duality_check(body, Direction.from_angle(angle), circle_grid, polar=polar)
            assert result.residual < 1e-9
            assert not result.degraded


class TestBodySpecs:
    """Test JSON body spec files."""

    def test_ellipsoid_spec(self):
        """Test an ellipsoid spec."""
        body = body_from_spec({"kind": "ellipsoid", "semi_axes": [2, 1]})
        assert body.describe() == "ellipsoid(2,1)"

    def test_random_smooth_spec(self):
        """Test random_smooth specs are deterministic in the seed."""
        a = body_from_spec({"kind": "random_smooth", "seed": 5})
        b = body_from_spec({"kind": "random_smooth", "seed": 5})
        np.testing.assert_array_equal(a.cos_coeffs, b.cos_coeffs)

    def test_unknown_kind(self):
        """Test unknown kinds raise ConfigurationError."""
        with pytest.raises(ConfigurationError):
            body_from_spec({"kind": "torus"})

    def test_missing_field(self):
        """Test missing required fields raise ConfigurationError."""
        with pytest.raises(ConfigurationError):
            body_from_spec({"kind": "planar_support"})

    def test_invalid_body_wrapped(self):
        """Test construction failures surface as ConfigurationError."""
        with pytest.raises(ConfigurationError):
            body_from_spec({"kind": "planar_support", "cos": [1.0, 0.0, 0.5]})

    def test_load_body(self, tmp_path):
        """Test loading a spec file."""
        path = tmp_path / "square.json"
        path.write_text(json.dumps({"kind": "cube", "dimension": 2}))
        assert isinstance(load_body(path), Cube)

    def test_load_missing_file(self, tmp_path):
        """Test a missing spec file raises FileNotFoundError."""
        with pytest.raises(FileNotFoundError):
            load_body(tmp_path / "none.json")

    def test_load_invalid_json(self, tmp_path):
        """Test invalid JSON raises ConfigurationError."""
        path = tmp_path / "bad.json"
        path.write_text("{kind: ")
        with pytest.raises(ConfigurationError):
            load_body(path)

    def test_sample_specs_load(self, repo_path):
        """Test the sample body files shipped with the repository."""
        for path in sorted((repo_path / "bodies").glob("*.json")):
            assert load_body(path).dimension == 2

    def test_unit_ball_dimension(self):
        """Test unit_ball in three dimensions."""
        assert unit_ball(3).dimension == 3
