"""Tests for the line elements, embeddings and trajectory integrals."""

import math

import numpy as np
import pytest
from scipy.integrate import simpson

from blochgeo.metrics import (
    MetricKind,
    TangentDisplacement,
    embed_extrinsic,
    embedding_trajectory,
    extrinsic_line_element_fd,
    line_element_cartesian,
    line_element_hyperspherical,
    line_element_spherical,
    planar_embedding_trajectory,
    sjoqvist_weights,
)
from blochgeo.states import BlochVector, SphericalState
from blochgeo import verify


class TestCartesianLineElement:
    def test_bures_radial_substitution(self):
        """p = (0,0,1/2), dp = (0,0,h): ds^2 = h^2/3 by direct substitution."""
        h = 1e-3
        ds2 = line_element_cartesian(MetricKind.BURES, BlochVector(0, 0, 0.5), (0, 0, h))
        assert abs(ds2 - h * h / 3.0) < 1e-18

    def test_null_displacement(self):
        p = BlochVector(0.2, 0.1, 0.4)
        for kind in (MetricKind.BURES, MetricKind.SJOQVIST):
            assert line_element_cartesian(kind, p, (0.0, 0.0, 0.0)) == 0.0

    def test_tangential_ratio_is_inverse_p_squared(self):
        """Purely angular displacement at p = 1/2: Sjoqvist = 4 x Bures."""
        p = BlochVector(0.0, 0.0, 0.5)
        d = (1e-4, 0.0, 0.0)  # orthogonal to p
        b = line_element_cartesian(MetricKind.BURES, p, d)
        s = line_element_cartesian(MetricKind.SJOQVIST, p, d)
        assert abs(s / b - 4.0) < 1e-12

    def test_rejects_boundary(self):
        for kind in (MetricKind.BURES, MetricKind.SJOQVIST):
            with pytest.raises(ValueError, match="singular"):
                line_element_cartesian(kind, BlochVector(0, 0, 1.0), (0, 0, 1e-5))

    def test_sjoqvist_rejects_center(self):
        with pytest.raises(ValueError, match="essential"):
            line_element_cartesian(MetricKind.SJOQVIST, BlochVector(0, 0, 0), (1e-5, 0, 0))

    def test_bures_allows_center(self):
        ds2 = line_element_cartesian(MetricKind.BURES, BlochVector(0, 0, 0), (1e-5, 0, 0))
        assert abs(ds2 - 0.25e-10) < 1e-22


class TestSphericalLineElement:
    def test_constant_radius_sphere_areas(self):
        """Constant-p surfaces: area 4*pi*p0^2 (Bures) vs 4*pi (Sjoqvist).

        Areas are quadrature of the induced area element of 4*ds^2 over
        the (theta, phi) rectangle.
        """
        p0 = 0.6
        thetas = np.linspace(0.0, math.pi, 2001)
        for kind, expected in (
            (MetricKind.BURES, 4.0 * math.pi * p0 * p0),
            (MetricKind.SJOQVIST, 4.0 * math.pi),
        ):
            g_theta = np.array(
                [4.0 * line_element_spherical(kind, SphericalState(p0, t, 0.0), 0, 1, 0) for t in thetas]
            )
            g_phi = np.array(
                [4.0 * line_element_spherical(kind, SphericalState(p0, t, 0.0), 0, 0, 1) for t in thetas]
            )
            area = 2.0 * math.pi * simpson(np.sqrt(g_theta * g_phi), x=thetas)
            assert abs(area - expected) < 1e-6 * expected

    def test_null_displacement(self):
        s = SphericalState(0.5, 1.0, 2.0)
        for kind in (MetricKind.BURES, MetricKind.SJOQVIST):
            assert line_element_spherical(kind, s, 0.0, 0.0, 0.0) == 0.0

    def test_radial_ratio_is_one(self):
        s = SphericalState(0.37, 0.9, 0.0)
        b = line_element_spherical(MetricKind.BURES, s, 1e-5, 0, 0)
        sj = line_element_spherical(MetricKind.SJOQVIST, s, 1e-5, 0, 0)
        assert abs(sj / b - 1.0) < 1e-14


class TestHypersphericalLineElement:
    def test_pure_state_chart_is_regular(self):
        """chi = pi/2: Bures gives dchi^2 + dOmega^2 (sin chi = 1)."""
        value = line_element_hyperspherical(MetricKind.BURES, math.pi / 2, 0.8, 1e-3, 2e-3, 0.0)
        expected = 1e-6 + 4e-6
        assert abs(value - expected) < 1e-18

    def test_sjoqvist_chi_independent(self):
        values = [
            line_element_hyperspherical(MetricKind.SJOQVIST, chi, 0.7, 0.0, 1e-3, 2e-3)
            for chi in (0.2, 0.7, 1.3)
        ]
        assert max(values) - min(values) == 0.0

    def test_bures_angular_coefficient(self):
        """chi = pi/6, dtheta = h: 4*ds^2 = h^2/4 since sin^2(pi/6) = 1/4."""
        h = 1e-3
        value = line_element_hyperspherical(MetricKind.BURES, math.pi / 6, 0.5, 0.0, h, 0.0)
        assert abs(value - h * h / 4.0) < 1e-18

    def test_rejects_out_of_range(self):
        for chi in (0.0, -0.1, math.pi / 2 + 0.01):
            with pytest.raises(ValueError, match="pi/2"):
                line_element_hyperspherical(MetricKind.BURES, chi, 1.0, 1e-3, 0, 0)

    def test_equals_four_times_spherical(self):
        rng = np.random.default_rng(21)
        for _ in range(100):
            p = rng.uniform(0.05, 0.95)
            theta = rng.uniform(0.0, math.pi)
            d = rng.normal(size=3) * 1e-5
            chi = math.asin(p)
            dchi = d[0] / math.sqrt(1.0 - p * p)
            state = SphericalState(p, theta, 0.0)
            for kind in (MetricKind.BURES, MetricKind.SJOQVIST):
                hyp = line_element_hyperspherical(kind, chi, theta, dchi, d[1], d[2])
                sph = line_element_spherical(kind, state, *d)
                assert abs(hyp - 4.0 * sph) < 1e-10 * abs(hyp)


class TestTangentDisplacement:
    def test_chain_rule_against_finite_differences(self):
        """The spherical push-forward matches differencing the chart map."""
        rng = np.random.default_rng(9)
        h = 1e-6
        for _ in range(100):
            s = SphericalState(
                rng.uniform(0.1, 0.9), rng.uniform(0.1, math.pi - 0.1), rng.uniform(0, 2 * math.pi)
            )
            d = rng.normal(size=3)
            disp = TangentDisplacement.from_spherical(s, *d)
            plus = SphericalState(s.p + h * d[0], s.theta + h * d[1], s.phi + h * d[2])
            minus = SphericalState(s.p - h * d[0], s.theta - h * d[1], s.phi - h * d[2])
            fd = (plus.to_bloch().as_array() - minus.to_bloch().as_array()) / (2.0 * h)
            np.testing.assert_allclose(disp.as_array(), fd, atol=1e-10)


class TestCoordinateConsistency:
    def test_intrinsic_forms_agree(self):
        """Cartesian, spherical and hyperspherical values coincide."""
        results = verify.coordinate_consistency_check(seed=101, n=800)
        for result in results:
            assert result.passed, f"{result.name}: {result.observed}"

    def test_positivity_and_ratio_law(self):
        for result in verify.metrics_structure_checks(seed=102, n=500):
            assert result.passed, f"{result.name}: {result.observed}"


class TestExtrinsicEmbedding:
    def test_center_and_pole(self):
        center = embed_extrinsic(MetricKind.BURES, SphericalState(0.0, 0.0, 0.0))
        np.testing.assert_allclose(center.as_array(), [1.0, 0.0, 0.0, 0.0], atol=1e-15)
        pole = embed_extrinsic(MetricKind.BURES, SphericalState(1.0, 0.0, 0.0))
        np.testing.assert_allclose(pole.as_array(), [0.0, 0.0, 0.0, 1.0], atol=1e-15)

    def test_unit_sphere_constraint(self):
        for p in np.linspace(0.0, 1.0, 101):
            x = embed_extrinsic(MetricKind.BURES, SphericalState(p, 0.7, 0.3))
            assert abs(x.x0**2 + x.x @ x.x - 1.0) < 1e-12

    def test_signature_change_point(self):
        """The temporal weight vanishes exactly at p = 1/sqrt(2)."""
        w0, wx = sjoqvist_weights(1.0 / math.sqrt(2.0))
        assert abs(w0) < 1e-15
        assert abs(wx - 2.0) < 1e-14

    def test_finite_difference_recovers_line_element(self):
        s = SphericalState(0.6, 1.2, 0.4)
        for kind in (MetricKind.BURES, MetricKind.SJOQVIST):
            exact = line_element_spherical(kind, s, 0.3, -0.5, 0.8)
            fd = extrinsic_line_element_fd(kind, s, 0.3, -0.5, 0.8)
            assert abs(fd - exact) < 1e-9 * abs(exact)


class TestEmbeddingTrajectory:
    def test_constant_direction_is_stationary_for_bures(self):
        """A purely radial path accumulates no spatial coordinates: the
        Bures integrand is proportional to the direction derivative."""
        s = np.linspace(0.0, 1.0, 500)
        p = 0.3 + 0.4 * s
        p_hat = np.tile([0.0, 0.0, 1.0], (s.size, 1))
        traj = embedding_trajectory(MetricKind.BURES, s, p, p_hat)
        assert np.max(np.abs(traj.x)) < 1e-12

    def test_constant_direction_radial_accumulation_sjoqvist(self):
        """The weighted spatial integrand p d(p p_hat)/ds integrates to
        (p_end^2 - p_start^2)/2 along the direction of a radial path."""
        s = np.linspace(0.0, 1.0, 2000)
        p = 0.3 + 0.4 * s
        p_hat = np.tile([0.0, 0.0, 1.0], (s.size, 1))
        traj = embedding_trajectory(MetricKind.SJOQVIST, s, p, p_hat)
        expected = (0.7**2 - 0.3**2) / 2.0
        assert abs(traj.x[-1, 2] - expected) < 1e-7
        assert np.max(np.abs(traj.x[:, :2])) < 1e-12

    def test_equatorial_circle_unit_speed(self):
        """At p = 1 the spatial integrand has unit norm along the equator."""
        s = np.linspace(0.0, 2.0 * math.pi, 20001)
        p = np.ones_like(s)
        p_hat = np.column_stack((np.cos(s), np.sin(s), np.zeros_like(s)))
        traj = embedding_trajectory(MetricKind.BURES, s, p, p_hat)
        speed = np.linalg.norm(np.gradient(traj.x, s, axis=0), axis=1)
        np.testing.assert_allclose(speed[5:-5], 1.0, atol=1e-6)

    def test_signature_flip_flag(self):
        thetas = np.linspace(0.0, 1.0, 400)
        r_crossing = np.linspace(0.5, 0.9, 400)  # crosses 1/sqrt(2) ~ 0.707
        traj = planar_embedding_trajectory(MetricKind.SJOQVIST, thetas, r_crossing)
        assert traj.crosses_signature_flip
        assert traj.x0 is not None
        r_below = np.linspace(0.2, 0.5, 400)
        assert not planar_embedding_trajectory(
            MetricKind.SJOQVIST, thetas, r_below
        ).crosses_signature_flip

    def test_sjoqvist_rejects_center_crossing(self):
        thetas = np.linspace(0.0, 1.0, 100)
        with pytest.raises(ValueError, match="singular"):
            planar_embedding_trajectory(
                MetricKind.SJOQVIST, thetas, np.linspace(-0.1, 0.5, 100)
            )

    def test_bures_trajectory_length_matches_metric(self):
        """Arc length of the embedded image equals the metric length.

        For a planar constant-r path the 4*ds^2 angular term is r^2
        dtheta^2, so |x(end) - direction-integrated length| = r * dtheta.
        """
        thetas = np.linspace(0.0, 0.5, 4001)
        r = np.full_like(thetas, 0.8)
        traj = planar_embedding_trajectory(MetricKind.BURES, thetas, r)
        speeds = np.linalg.norm(np.gradient(traj.x, thetas, axis=0), axis=1)
        np.testing.assert_allclose(speeds[5:-5], 0.8, atol=1e-6)
