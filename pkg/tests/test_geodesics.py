"""Tests for closed-form geodesics, great circles and the RK4 oracle."""

import math

import numpy as np
import pytest

from blochgeo.geodesics import (
    GreatCircle,
    bures_geodesic_ivp,
    bures_great_circle,
    curve_length,
    geodesic_oracle,
    great_circle_radial_profile,
    lagrangian,
    oracle_window,
    radial_slope,
    sample_geodesic,
    sjoqvist_geodesic_bvp,
    sjoqvist_geodesic_ivp,
)
from blochgeo.metrics import MetricKind
from blochgeo import verify


class TestBuresClosedForm:
    def test_initial_position_exact(self):
        _, r_of = bures_geodesic_ivp(0.5, 0.1, theta_a=0.3)
        assert float(r_of(0.3)) == pytest.approx(0.5, abs=1e-15)

    def test_initial_slope_finite_difference(self):
        rng = np.random.default_rng(17)
        h = 1e-7
        for _ in range(50):
            ra = rng.uniform(0.1, 0.9)
            rap = rng.uniform(-1.0, 1.0)
            _, r_of = bures_geodesic_ivp(ra, rap)
            slope = (float(r_of(h)) - float(r_of(-h))) / (2.0 * h)
            assert slope == pytest.approx(rap, abs=1e-8)

    def test_param_constants(self):
        """a_sq and the phase constant satisfy their defining relations."""
        ra, rap = 0.62, 0.21
        params, _ = bures_geodesic_ivp(ra, rap)
        expected_a_sq = 1.0 / ra**2 + (rap / ra) ** 2 / (ra**2 * (1.0 - ra**2))
        assert params.a_sq == pytest.approx(expected_a_sq, rel=1e-14)
        expected_phase = math.atan(math.sqrt((1.0 - ra**2) ** 2 * (ra / rap) ** 2))
        assert params.phase == pytest.approx(expected_phase, rel=1e-14)
        assert 0.0 < params.c_beltrami <= 1.0
        assert params.a_sq >= 1.0

    def test_zero_slope_is_not_a_circle(self):
        """Constant radius is not a Bures geodesic: the zero-slope limit
        curve still moves, and the RK4 oracle confirms it."""
        params, r_of = bures_geodesic_ivp(0.5, 0.0)
        assert params.phase == pytest.approx(math.pi / 2.0)
        r_half = float(r_of(0.5))
        assert abs(r_half - 0.5) > 1e-3
        result = geodesic_oracle(MetricKind.BURES, 0.5, 0.0, 0.0, 0.5)
        assert result.max_deviation < 1e-10
        assert abs(result.r[-1] - r_half) < 1e-10

    def test_rejects_degenerate_radius(self):
        for ra in (0.0, 1.0):
            with pytest.raises(ValueError):
                bures_geodesic_ivp(ra, 0.1)

    def test_figure_reference_curve_samples(self):
        """The (ra, ra') = (1/2, 0.1) curve over a full turn stays in [cB, 1]
        and passes radial turning points."""
        curve = sample_geodesic(MetricKind.BURES, 0.5, 0.1, 0.0, 2.0 * math.pi, 2000)
        assert curve.reaches_turning_point
        assert np.all(curve.r <= 1.0 + 1e-12)
        assert np.all(curve.r >= curve.params.c_beltrami - 1e-12)
        # touches both extremes over a full turn
        assert np.max(curve.r) > 1.0 - 1e-4
        assert np.min(curve.r) < curve.params.c_beltrami + 1e-4

    def test_beltrami_constant_along_curve(self):
        params, r_of = bures_geodesic_ivp(0.45, -0.3)
        thetas = np.linspace(0.0, 0.8, 100)
        r = np.atleast_1d(r_of(thetas))
        rp = radial_slope(MetricKind.BURES, params, thetas)
        conserved = r**2 / lagrangian(MetricKind.BURES, r, rp)
        np.testing.assert_allclose(conserved, params.c_beltrami, rtol=1e-10)


class TestSjoqvistClosedForm:
    def test_equal_radii_gives_constant(self):
        _, r_of = sjoqvist_geodesic_bvp(0.4, 0.0, 0.4, 1.5)
        thetas = np.linspace(0.0, 1.5, 50)
        np.testing.assert_allclose(np.atleast_1d(r_of(thetas)), 0.4, atol=1e-15)

    def test_bvp_endpoints(self):
        _, r_of = sjoqvist_geodesic_bvp(0.3, 0.2, 0.8, 1.5)
        assert float(r_of(0.2)) == pytest.approx(0.3, abs=1e-12)
        assert float(r_of(1.5)) == pytest.approx(0.8, abs=1e-12)

    def test_bvp_beltrami_constant(self):
        """r'^2/(1 - r^2) is conserved along the sampled curve."""
        params, r_of = sjoqvist_geodesic_bvp(0.3, 0.2, 0.8, 1.5)
        thetas = np.linspace(0.2, 1.5, 100)
        r = np.atleast_1d(r_of(thetas))
        rp = radial_slope(MetricKind.SJOQVIST, params, thetas)
        np.testing.assert_allclose(rp**2 / (1.0 - r * r), params.k, rtol=1e-10)

    def test_zero_start_angle_form(self):
        """With theta_a = 0 the curve is sin(m theta + arcsin ra)."""
        ra, rb, theta_b = 0.35, 0.7, 1.2
        _, r_of = sjoqvist_geodesic_bvp(ra, 0.0, rb, theta_b)
        m = (math.asin(rb) - math.asin(ra)) / theta_b
        thetas = np.linspace(0.0, theta_b, 40)
        expected = np.sin(m * thetas + math.asin(ra))
        np.testing.assert_allclose(np.atleast_1d(r_of(thetas)), expected, atol=1e-14)

    def test_ivp_zero_slope_is_circle(self):
        _, r_of = sjoqvist_geodesic_ivp(0.5, 0.0)
        thetas = np.linspace(0.0, 6.0, 100)
        np.testing.assert_allclose(np.atleast_1d(r_of(thetas)), 0.5, atol=1e-15)

    def test_ivp_bvp_consistency(self):
        """Endpoints sampled from the IVP curve reproduce it through the BVP."""
        rng = np.random.default_rng(29)
        for _ in range(30):
            ra = rng.uniform(0.2, 0.8)
            rap = rng.uniform(-0.5, 0.5)
            theta_a = rng.uniform(0.0, 1.0)
            _, ivp = sjoqvist_geodesic_ivp(ra, rap, theta_a)
            theta_b = theta_a + rng.uniform(0.3, 0.8)
            rb = float(ivp(theta_b))
            if not 0.0 < rb <= 1.0:
                continue
            _, bvp = sjoqvist_geodesic_bvp(ra, theta_a, rb, theta_b)
            grid = np.linspace(theta_a, theta_b, 50)
            np.testing.assert_allclose(
                np.atleast_1d(bvp(grid)), np.atleast_1d(ivp(grid)), atol=1e-10
            )

    def test_radial_limit_flagged(self):
        params, r_of = sjoqvist_geodesic_bvp(0.3, 1.0, 0.8, 1.0)
        assert params.is_radial
        assert math.isinf(params.k)
        with pytest.raises(ValueError, match="radial"):
            r_of(1.0)

    def test_rejects_domain_violations(self):
        with pytest.raises(ValueError):
            sjoqvist_geodesic_bvp(0.0, 0.0, 0.5, 1.0)
        with pytest.raises(ValueError):
            sjoqvist_geodesic_ivp(1.0, 0.1)


class TestGreatCircles:
    def test_endpoints(self):
        circle = GreatCircle.from_axes(0.4, np.array([0.0, 0.0, 1.0]), np.array([1.0, 0.0, 0.0]))
        np.testing.assert_allclose(bures_great_circle(circle, 0.0).as_array(), circle.u, atol=1e-15)
        np.testing.assert_allclose(
            bures_great_circle(circle, math.pi / 2.0).as_array(), circle.v, atol=1e-15
        )

    def test_unit_norm_along_circle(self):
        circle = GreatCircle.from_axes(0.4, np.array([0.0, 0.0, 1.0]), np.array([1.0, 0.0, 0.0]))
        for s in np.linspace(0.0, 2.0 * math.pi, 100):
            x = bures_great_circle(circle, s).as_array()
            assert abs(x @ x - 1.0) < 1e-12

    def test_radial_profile_formula_and_bounds(self):
        rng = np.random.default_rng(31)
        for _ in range(50):
            n_hat = rng.normal(size=3)
            n_hat /= np.linalg.norm(n_hat)
            m_hat = rng.normal(size=3)
            m_hat /= np.linalg.norm(m_hat)
            circle = GreatCircle.from_axes(rng.uniform(0.1, math.pi / 2), n_hat, m_hat)
            s = rng.uniform(0.0, 2.0 * math.pi, 20)
            p = great_circle_radial_profile(circle, s)
            assert np.all((0.0 <= p) & (p <= 1.0))
            x0 = np.array([bures_great_circle(circle, si).x0 for si in s])
            np.testing.assert_allclose(p, np.sqrt(np.maximum(0.0, 1.0 - x0 * x0)), atol=1e-12)

    def test_rejects_inconsistent_xi(self):
        with pytest.raises(ValueError, match="tan"):
            GreatCircle(
                chi=0.4,
                xi=0.9,
                n_hat=np.array([0.0, 0.0, 1.0]),
                m_hat=np.array([1.0, 0.0, 0.0]),
            )

    def test_requires_unit_axes(self):
        with pytest.raises(ValueError, match="unit"):
            GreatCircle.from_axes(0.4, np.array([0.0, 0.0, 2.0]), np.array([1.0, 0.0, 0.0]))


class TestOracle:
    def test_closed_forms_match_rk4(self):
        """The reference pair and a few random launches, both metrics."""
        for kind in (MetricKind.BURES, MetricKind.SJOQVIST):
            window = oracle_window(kind, 0.5, 0.1, 0.0)
            result = geodesic_oracle(kind, 0.5, 0.1, 0.0, window)
            assert result.max_deviation < 1e-8

    def test_sjoqvist_equilibrium_is_uncoupled(self):
        """Zero launch slope keeps r constant: radial and angular motion
        do not mix for the interferometric metric."""
        result = geodesic_oracle(MetricKind.SJOQVIST, 0.5, 0.0, 0.0, 2.0)
        np.testing.assert_allclose(result.r, 0.5, atol=1e-12)

    def test_bures_motion_is_coupled(self):
        result = geodesic_oracle(MetricKind.BURES, 0.5, 0.0, 0.0, 0.5)
        assert abs(result.r[-1] - 0.5) > 1e-3

    def test_band_rejection(self):
        """Curves that run into the boundary abort with a clear signal."""
        with pytest.raises(ValueError, match="band"):
            geodesic_oracle(MetricKind.BURES, 0.5, 0.1, 0.0, 3.0)

    def test_oracle_agreement_suite(self):
        result = verify.oracle_agreement_check(seed=4, n_ic=10)
        assert result.passed, result.observed


class TestArcLength:
    def test_sjoqvist_length_matches_strip_formula(self):
        """Simpson quadrature of the Lagrangian reproduces the closed length."""
        ra, theta_a, rb, theta_b = 0.3, 0.2, 0.8, 1.5
        params, r_of = sjoqvist_geodesic_bvp(ra, theta_a, rb, theta_b)
        thetas = np.linspace(theta_a, theta_b, 201)
        r = np.atleast_1d(r_of(thetas))
        rp = radial_slope(MetricKind.SJOQVIST, params, thetas)
        length = curve_length(MetricKind.SJOQVIST, thetas, r, rp)
        expected = 0.5 * math.hypot(theta_b - theta_a, math.asin(rb) - math.asin(ra))
        assert length == pytest.approx(expected, abs=1e-12)

    def test_sampled_curve_cumulative_length(self):
        curve = sample_geodesic(MetricKind.SJOQVIST, 0.5, 0.0, 0.0, 1.0, 501)
        # constant-radius circle: length is (1/2) * dtheta
        np.testing.assert_allclose(curve.arc_length[-1], 0.5, atol=1e-10)
        assert np.all(np.diff(curve.arc_length) >= 0.0)
