"""Tests for fidelities and the four finite distances."""

import math

import numpy as np
import pytest

from blochgeo.distances import (
    BURES_MAX,
    bures_distance,
    bures_distance_general,
    compute_distance,
    euclid_distance,
    fidelity,
    fidelity_general,
    sjoqvist_distance,
    taxicab_distance,
)
from blochgeo.metrics import MetricKind
from blochgeo.rotations import reduce_to_xz_plane
from blochgeo.states import BlochVector, PlanarState, bloch_to_density
from blochgeo import verify

PI = math.pi


def _rho(px, py, pz):
    return bloch_to_density(BlochVector(px, py, pz))


class TestFidelity:
    def test_self_fidelity_of_center(self):
        rho = _rho(0.0, 0.0, 0.0)
        assert fidelity(rho, rho) == pytest.approx(1.0, abs=1e-15)

    def test_orthogonal_pure_states(self):
        assert fidelity(_rho(0, 0, 1.0), _rho(0, 0, -1.0)) == pytest.approx(0.0, abs=1e-15)

    def test_bloch_vector_formula(self):
        """F = (1 + a.b)/2 + sqrt((1-a^2)(1-b^2))/2, checked against the
        matrix-square-root route."""
        rng = np.random.default_rng(41)
        for _ in range(100):
            a = rng.normal(size=3)
            a *= rng.uniform(0.0, 0.95) / np.linalg.norm(a)
            b = rng.normal(size=3)
            b *= rng.uniform(0.0, 0.95) / np.linalg.norm(b)
            rho1, rho2 = _rho(*a), _rho(*b)
            closed = fidelity(rho1, rho2)
            vector_form = (1.0 + a @ b) / 2.0 + math.sqrt((1.0 - a @ a) * (1.0 - b @ b)) / 2.0
            assert closed == pytest.approx(vector_form, abs=1e-13)
            assert closed == pytest.approx(fidelity_general(rho1, rho2), abs=1e-12)

    def test_bounds(self):
        rng = np.random.default_rng(43)
        for _ in range(200):
            a = rng.normal(size=3)
            a *= rng.uniform(0.0, 1.0) / np.linalg.norm(a)
            b = rng.normal(size=3)
            b *= rng.uniform(0.0, 1.0) / np.linalg.norm(b)
            assert 0.0 <= fidelity(_rho(*a), _rho(*b)) <= 1.0


class TestBuresDistance:
    def test_reference_half_radius_pair(self):
        d = bures_distance(PlanarState(0.5, 0.0), PlanarState(0.5, PI))
        assert d == pytest.approx(0.52, abs=0.005)

    def test_reference_mixed_pair(self):
        d = bures_distance(PlanarState(0.125, 0.0), PlanarState(0.25, PI))
        assert d == pytest.approx(0.19, abs=0.005)

    def test_reference_quarter_radius_pair(self):
        d = bures_distance(PlanarState(0.25, 0.0), PlanarState(0.25, PI))
        assert d == pytest.approx(0.25, abs=0.005)

    def test_identity(self):
        s = PlanarState(0.7, 1.3)
        assert bures_distance(s, s) == 0.0

    def test_symmetry(self):
        rng = np.random.default_rng(47)
        for _ in range(100):
            a = PlanarState(rng.uniform(0, 1), rng.uniform(0, PI))
            b = PlanarState(rng.uniform(0, 1), rng.uniform(0, PI))
            assert bures_distance(a, b) == pytest.approx(bures_distance(b, a), abs=1e-15)

    def test_fidelity_link(self):
        """sqrt(2) [1 - sqrt(F)]^(1/2) equals the planar closed form."""
        a, b = PlanarState(0.6, 0.4), PlanarState(0.3, 2.0)
        f = fidelity(bloch_to_density(a.to_bloch()), bloch_to_density(b.to_bloch()))
        assert bures_distance(a, b) == pytest.approx(
            math.sqrt(2.0 * (1.0 - math.sqrt(f))), abs=1e-12
        )


class TestSjoqvistDistance:
    def test_reference_half_radius_pair_is_quarter_turn(self):
        d = sjoqvist_distance(PlanarState(0.5, 0.0), PlanarState(0.5, PI))
        assert d == pytest.approx(PI / 2.0, abs=1e-12)

    def test_reference_mixed_pair(self):
        d = sjoqvist_distance(PlanarState(0.125, 0.0), PlanarState(0.25, PI))
        assert d == pytest.approx(1.5721, abs=0.0005)

    def test_equal_radius_pairs_tie(self):
        d1 = sjoqvist_distance(PlanarState(0.25, 0.0), PlanarState(0.25, PI))
        d2 = sjoqvist_distance(PlanarState(0.5, 0.0), PlanarState(0.5, PI))
        assert d1 == pytest.approx(PI / 2.0, abs=1e-12)
        assert d2 == pytest.approx(PI / 2.0, abs=1e-12)
        assert abs(d1 - d2) < 1e-12

    def test_rejects_center(self):
        with pytest.raises(ValueError, match="singular"):
            sjoqvist_distance(PlanarState(0.0, 0.0), PlanarState(0.5, 1.0))

    def test_angle_wrapping_option(self):
        a = PlanarState(0.5, 0.0)
        b = PlanarState(0.5, 1.5 * PI)
        raw = sjoqvist_distance(a, b)
        wrapped = sjoqvist_distance(a, b, wrap_angle=True)
        assert raw == pytest.approx(0.75 * PI, abs=1e-12)
        assert wrapped == pytest.approx(0.25 * PI, abs=1e-12)

    def test_radius_independence(self):
        """Equal-radius distances depend only on the angular separation."""
        for r in (0.1, 0.35, 0.8, 1.0):
            d = sjoqvist_distance(PlanarState(r, 0.2), PlanarState(r, 1.7))
            assert d == pytest.approx(0.75, abs=1e-12)


class TestClassicalDistances:
    def test_reference_triple(self):
        """The unit segment against the diagonal point (1+sqrt2)/4 (1,1)."""
        p1, p2 = (0.0, 0.0), (0.0, 1.0)
        p3 = ((1.0 + math.sqrt(2.0)) / 4.0, (1.0 + math.sqrt(2.0)) / 4.0)
        assert euclid_distance(p1, p2) == pytest.approx(1.0, abs=1e-15)
        assert euclid_distance(p1, p3) == pytest.approx(0.8536, abs=0.005)
        assert taxicab_distance(p1, p2) == pytest.approx(1.0, abs=1e-15)
        assert taxicab_distance(p1, p3) == pytest.approx(1.2071, abs=0.005)

    def test_identity(self):
        assert euclid_distance((0.3, -0.2), (0.3, -0.2)) == 0.0
        assert taxicab_distance((0.3, -0.2), (0.3, -0.2)) == 0.0

    def test_euclid_never_exceeds_taxicab(self):
        rng = np.random.default_rng(53)
        for _ in range(500):
            a, b = rng.uniform(-1, 1, 2), rng.uniform(-1, 1, 2)
            assert euclid_distance(a, b) <= taxicab_distance(a, b) + 1e-15

    def test_planar_state_inputs(self):
        a = PlanarState(0.5, PI / 2.0)
        b = PlanarState(0.5, 0.0)
        # (0.5, 0) and (0, 0.5) in (x, z) coordinates
        assert euclid_distance(a, b) == pytest.approx(0.5 * math.sqrt(2.0), abs=1e-12)
        assert taxicab_distance(a, b) == pytest.approx(1.0, abs=1e-12)

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError, match="finite"):
            euclid_distance((math.inf, 0.0), (0.0, 0.0))


class TestBuresDistanceGeneral:
    def test_identity(self):
        rho = _rho(0.2, 0.3, 0.1)
        assert bures_distance_general(rho, rho) == pytest.approx(0.0, abs=1e-8)

    def test_antipodal_pure_states_reach_max(self):
        d = bures_distance_general(_rho(0, 0, 1.0), _rho(0, 0, -1.0))
        assert d == pytest.approx(BURES_MAX, abs=1e-12)

    def test_random_pairs_match_planar_form_after_reduction(self):
        rng = np.random.default_rng(59)
        for _ in range(200):
            v = rng.normal(size=(2, 3))
            v *= (rng.uniform(0.0, 0.999, 2) / np.linalg.norm(v, axis=1))[:, None]
            b1, b2 = BlochVector.from_array(v[0]), BlochVector.from_array(v[1])
            general = bures_distance_general(_rho(*v[0]), _rho(*v[1]))
            planar = bures_distance(*reduce_to_xz_plane(b1, b2).planar_states())
            assert general == pytest.approx(planar, abs=1e-10)


class TestOrderingLaws:
    def test_equal_radius_ordering_chain(self):
        result = verify.ordering_law_check(seed=61, n_pairs=20_000)
        assert result.passed, result.observed

    def test_bures_below_sjoqvist_generally(self):
        result = verify.bures_below_sjoqvist_check(seed=67, n_pairs=20_000)
        assert result.passed, result.observed

    def test_pure_state_limits(self):
        for result in verify.pure_state_limit_check():
            assert result.passed, f"{result.name}: {result.observed}"

    def test_fig2_style_bound_for_reference_radii(self):
        """For the radii 1, 0.95, 0.75, 0.5: 0 <= L_B <= L_S <= pi/2."""
        for r in (1.0, 0.95, 0.75, 0.5):
            for dtheta in np.linspace(0.0, PI, 60):
                lb = bures_distance(PlanarState(r, 0.0), PlanarState(r, dtheta))
                ls = sjoqvist_distance(PlanarState(r, 0.0), PlanarState(r, dtheta))
                assert -1e-15 <= lb <= ls + 1e-12
                assert ls <= PI / 2.0 + 1e-12


class TestComputeDistance:
    def test_dispatch_and_formula_ids(self):
        a, b = PlanarState(0.5, 0.0), PlanarState(0.5, 1.0)
        for kind, formula in (
            (MetricKind.BURES, "bures-planar-fidelity"),
            (MetricKind.SJOQVIST, "sjoqvist-strip-arc-length"),
            (MetricKind.EUCLID, "euclid-l2"),
            (MetricKind.TAXICAB, "taxicab-l1"),
        ):
            report = compute_distance(kind, a, b)
            assert report.formula_id == formula
            assert report.value >= 0.0
