"""Seeded invariant suites behind the `verify` CLI subcommand.

Each suite evaluates a set of cross-checks (closed form against
independent numerical route, conservation laws, ordering laws,
fixed reference cases) and reports one verdict per check. All sampling is
driven by an explicit seed, so a verdict is reproducible bit for bit.

Sampling bands: states are kept away from the ball boundary and, for the
Sjoqvist extrinsic check, away from the center. The three intrinsic
coordinate forms agree to round-off anywhere, but the finite-difference
extrinsic route is ill-conditioned where the embedding weights blow up:
its truncation and round-off errors are amplified by ~(1 - p^2)/p^2 near
p = 0 (Sjoqvist) and by 1/(1 - p^2)^2 near p = 1 (both metrics), so the
1e-9 verification tolerance is only meaningful on the bands used here.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from . import analysis, distances, geodesics, metrics, rotations, states
from .metrics import MetricKind

CONSISTENCY_TOL = 1e-9
ORACLE_TOL = 1e-8
ISOMETRY_TOL = 1e-10
RW_TOL = 1e-10
DUALITY_TOL = 1e-12

SUITE_NAMES = ("metrics", "geodesics", "distances", "rotations", "ranking", "rw")


@dataclass(frozen=True)
class CheckResult:
    """Verdict of one invariant check."""

    name: str
    passed: bool
    observed: float
    tolerance: float
    detail: str = ""

    def as_dict(self) -> dict:
        return asdict(self)


def _result(name: str, observed: float, tolerance: float, detail: str = "") -> CheckResult:
    return CheckResult(
        name=name,
        passed=bool(observed <= tolerance),
        observed=float(observed),
        tolerance=float(tolerance),
        detail=detail,
    )


def _random_directions(rng: np.random.Generator, n: int) -> np.ndarray:
    d = rng.normal(size=(n, 3))
    return d / np.linalg.norm(d, axis=1, keepdims=True)


# ---------------------------------------------------------------------------
# metrics suite
# ---------------------------------------------------------------------------

def coordinate_consistency_check(seed: int, n: int) -> list[CheckResult]:
    """The four faces of each line element against each other.

    Intrinsic faces (Cartesian, spherical, hyperspherical) are compared on
    p in [0.05, 0.95]; the extrinsic finite-difference face on
    p in [0.05, 0.80] (Bures) and [0.45, 0.80] (Sjoqvist), see the module
    docstring for the conditioning argument.
    """
    rng = np.random.default_rng(seed)
    worst_intrinsic = {MetricKind.BURES: 0.0, MetricKind.SJOQVIST: 0.0}
    dirs = _random_directions(rng, n)
    ps = rng.uniform(0.05, 0.95, n)
    thetas = rng.uniform(0.0, math.pi, n)
    phis = rng.uniform(0.0, 2.0 * math.pi, n)
    scale = 1e-5
    for p, theta, phi, d in zip(ps, thetas, phis, dirs):
        state = states.SphericalState(p, theta, phi)
        dp, dth, dph = scale * d
        disp = metrics.TangentDisplacement.from_spherical(state, dp, dth, dph)
        chi = math.asin(p)
        dchi = dp / math.sqrt(1.0 - p * p)
        for kind in worst_intrinsic:
            cart = metrics.line_element_cartesian(kind, state.to_bloch(), disp)
            sph = metrics.line_element_spherical(kind, state, dp, dth, dph)
            hyp = metrics.line_element_hyperspherical(kind, chi, theta, dchi, dth, dph)
            ref = abs(sph)
            gap = max(abs(cart - sph), abs(hyp / 4.0 - sph), abs(cart - hyp / 4.0))
            worst_intrinsic[kind] = max(worst_intrinsic[kind], gap / ref)

    results = [
        _result(
            f"metrics/intrinsic-consistency-{kind.value}",
            worst_intrinsic[kind],
            CONSISTENCY_TOL,
            f"{n} samples, p in [0.05, 0.95]",
        )
        for kind in worst_intrinsic
    ]

    for kind, lo, hi in (
        (MetricKind.BURES, 0.05, 0.80),
        (MetricKind.SJOQVIST, 0.45, 0.80),
    ):
        worst = 0.0
        ps = rng.uniform(lo, hi, n)
        thetas = rng.uniform(0.0, math.pi, n)
        phis = rng.uniform(0.0, 2.0 * math.pi, n)
        dirs = _random_directions(rng, n)
        for p, theta, phi, d in zip(ps, thetas, phis, dirs):
            state = states.SphericalState(p, theta, phi)
            exact = metrics.line_element_spherical(kind, state, *d)
            fd = metrics.extrinsic_line_element_fd(kind, state, *d)
            worst = max(worst, abs(exact - fd) / abs(exact))
        results.append(
            _result(
                f"metrics/extrinsic-fd-{kind.value}",
                worst,
                CONSISTENCY_TOL,
                f"{n} samples, p in [{lo}, {hi}], h = {metrics.FD_STEP}",
            )
        )
    return results


def metrics_structure_checks(seed: int, n: int) -> list[CheckResult]:
    """Positivity, embedding constraint and the tangential/radial ratio law."""
    rng = np.random.default_rng(seed)
    min_ds2 = math.inf
    for _ in range(n):
        p = rng.uniform(0.05, 0.95)
        state = states.SphericalState(p, rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi))
        d = rng.normal(size=3) * 1e-5
        for kind in (MetricKind.BURES, MetricKind.SJOQVIST):
            min_ds2 = min(min_ds2, metrics.line_element_spherical(kind, state, *d))
    positivity = _result("metrics/positivity", max(0.0, -min_ds2), 0.0, f"min ds^2 = {min_ds2!r}")

    worst_embed = 0.0
    for p in np.linspace(0.0, 1.0, 101):
        point = metrics.embed_extrinsic(
            MetricKind.BURES, states.SphericalState(p, 1.0, 2.0)
        )
        worst_embed = max(worst_embed, abs(point.x0**2 + float(point.x @ point.x) - 1.0))
    embed = _result("metrics/bures-embedding-on-unit-3-sphere", worst_embed, 1e-12)

    worst_ratio = 0.0
    for _ in range(n):
        p = rng.uniform(0.05, 0.95)
        state = states.SphericalState(p, rng.uniform(0.3, math.pi - 0.3), rng.uniform(0, 2 * math.pi))
        tangential = (0.0, 1e-5, 1e-5)
        radial = (1e-5, 0.0, 0.0)
        b_t = metrics.line_element_spherical(MetricKind.BURES, state, *tangential)
        s_t = metrics.line_element_spherical(MetricKind.SJOQVIST, state, *tangential)
        worst_ratio = max(worst_ratio, abs(s_t / b_t - 1.0 / (p * p)) * p * p)
        b_r = metrics.line_element_spherical(MetricKind.BURES, state, *radial)
        s_r = metrics.line_element_spherical(MetricKind.SJOQVIST, state, *radial)
        worst_ratio = max(worst_ratio, abs(s_r / b_r - 1.0))
    ratio = _result("metrics/tangential-radial-ratio-law", worst_ratio, 1e-12)
    return [positivity, embed, ratio]


def suite_metrics(seed: int, n: int = 10_000) -> list[CheckResult]:
    return coordinate_consistency_check(seed, n) + metrics_structure_checks(seed + 1, min(n, 2000))


# ---------------------------------------------------------------------------
# geodesics suite
# ---------------------------------------------------------------------------

def oracle_agreement_check(seed: int, n_ic: int = 50) -> CheckResult:
    """Closed forms against RK4 integration for seeded initial conditions.

    Always includes the (ra, ra') = (1/2, 0.1) reference pair. Each
    comparison runs over the largest theta window (capped at 1 radian) on
    which the curve keeps r in [0.01, 0.99]; outside that band the
    variational equation is singular and no comparison is meaningful.
    """
    rng = np.random.default_rng(seed)
    cases = [(0.5, 0.1)]
    while len(cases) < n_ic:
        cases.append((rng.uniform(0.1, 0.9), rng.uniform(-1.0, 1.0)))
    worst = 0.0
    for ra, rap in cases:
        for kind in (MetricKind.BURES, MetricKind.SJOQVIST):
            theta_end = geodesics.oracle_window(kind, ra, rap, 0.0)
            if theta_end <= 1e-3:
                continue
            res = geodesics.geodesic_oracle(kind, ra, rap, 0.0, theta_end)
            worst = max(worst, res.max_deviation)
    return _result(
        "geodesics/closed-form-vs-rk4",
        worst,
        ORACLE_TOL,
        f"{n_ic} initial conditions, both metrics",
    )


def beltrami_conservation_check(seed: int, n_curves: int = 50) -> CheckResult:
    """The first integral of each Lagrangian is constant along the curve."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_curves):
        ra = rng.uniform(0.15, 0.85)
        rap = rng.uniform(-0.8, 0.8)
        for kind in (MetricKind.BURES, MetricKind.SJOQVIST):
            theta_end = geodesics.oracle_window(kind, ra, rap, 0.0, band=5e-3)
            curve = geodesics.sample_geodesic(kind, ra, rap, 0.0, theta_end, 101)
            rp = geodesics.radial_slope(kind, curve.params, curve.thetas)
            lagr = geodesics.lagrangian(kind, curve.r, rp)
            if kind is MetricKind.BURES:
                values = curve.r**2 / lagr
                expected = curve.params.c_beltrami
            else:
                values = rp**2 / (1.0 - curve.r**2)
                expected = curve.params.k
            scale = max(abs(expected), 1.0)
            worst = max(worst, float(np.max(np.abs(values - expected))) / scale)
    return _result("geodesics/beltrami-first-integral", worst, 1e-10, f"{n_curves} curves")


def great_circle_checks(seed: int, n: int = 100) -> list[CheckResult]:
    """Unit norm, unit speed and the radial profile of embedded great circles."""
    rng = np.random.default_rng(seed)
    worst_norm = 0.0
    worst_speed = 0.0
    worst_profile = 0.0
    for _ in range(n):
        chi = rng.uniform(0.05, math.pi / 2.0)
        n_hat = rng.normal(size=3)
        n_hat /= np.linalg.norm(n_hat)
        m_hat = rng.normal(size=3)
        m_hat /= np.linalg.norm(m_hat)
        circle = geodesics.GreatCircle.from_axes(chi, n_hat, m_hat)
        s_values = rng.uniform(0.0, 2.0 * math.pi, 16)
        for s in s_values:
            x = circle.u * math.cos(s) + circle.v * math.sin(s)
            worst_norm = max(worst_norm, abs(float(x @ x) - 1.0))
            dx = -circle.u * math.sin(s) + circle.v * math.cos(s)
            worst_speed = max(worst_speed, abs(float(dx @ dx) - 1.0))
            p = geodesics.great_circle_radial_profile(circle, s)
            x0 = math.cos(chi) * math.cos(s) + math.sin(circle.xi) * math.sin(s)
            worst_profile = max(
                worst_profile, abs(float(p) - math.sqrt(max(0.0, 1.0 - x0 * x0)))
            )
            if not 0.0 <= float(p) <= 1.0:
                worst_profile = math.inf
    return [
        _result("geodesics/great-circle-unit-norm", worst_norm, 1e-12),
        _result("geodesics/great-circle-unit-speed", worst_speed, 1e-12),
        _result("geodesics/great-circle-radial-profile", worst_profile, 1e-12),
    ]


def suite_geodesics(seed: int, n_ic: int = 50) -> list[CheckResult]:
    results = [
        oracle_agreement_check(seed, n_ic),
        beltrami_conservation_check(seed + 1),
    ]
    results.extend(great_circle_checks(seed + 2))
    return results


# ---------------------------------------------------------------------------
# distances suite
# ---------------------------------------------------------------------------

def ordering_law_check(seed: int, n_pairs: int = 100_000) -> CheckResult:
    """0 <= L_Bures <= L_Sjoqvist <= pi/2 on equal-radius pairs.

    Pairs share one radius r in (0, 1] with independent angles in [0, pi]
    (the configuration of the constant-radius distance comparison; with
    independent radii the pi/2 cap does not apply, see
    bures_below_sjoqvist_check).
    """
    rng = np.random.default_rng(seed)
    r = 1.0 - rng.random(n_pairs)
    th_a = rng.uniform(0.0, math.pi, n_pairs)
    th_b = rng.uniform(0.0, math.pi, n_pairs)
    lb = distances._bures_length(r, th_a, r, th_b)
    ls = distances._sjoqvist_length(r, th_a, r, th_b)
    worst = max(
        float(np.max(-lb, initial=0.0)),
        float(np.max(lb - ls)),
        float(np.max(ls - math.pi / 2.0)),
    )
    return _result(
        "distances/ordering-law-equal-radii", max(worst, 0.0), 1e-12, f"{n_pairs} pairs"
    )


def bures_below_sjoqvist_check(seed: int, n_pairs: int = 100_000) -> CheckResult:
    """L_Bures <= L_Sjoqvist for fully independent planar pairs."""
    rng = np.random.default_rng(seed)
    ra = 1.0 - rng.random(n_pairs)
    rb = 1.0 - rng.random(n_pairs)
    th_a = rng.uniform(0.0, math.pi, n_pairs)
    th_b = rng.uniform(0.0, math.pi, n_pairs)
    lb = distances._bures_length(ra, th_a, rb, th_b)
    ls = distances._sjoqvist_length(ra, th_a, rb, th_b)
    return _result(
        "distances/bures-below-sjoqvist",
        max(float(np.max(lb - ls)), 0.0),
        1e-12,
        f"{n_pairs} pairs, independent radii",
    )


def pure_state_limit_check() -> list[CheckResult]:
    """Boundary behavior at r = 1.

    The Sjoqvist distance equals dtheta/2 exactly; the Bures distance is
    2 sin(dtheta/4) = dtheta/2 - dtheta^3/192 + O(dtheta^5), so its gap to
    dtheta/2 is cubic with a stable coefficient.
    """
    worst_exact = 0.0
    for dtheta in np.linspace(0.01, math.pi, 50):
        ls = distances.sjoqvist_distance(
            states.PlanarState(1.0, 0.0), states.PlanarState(1.0, dtheta)
        )
        worst_exact = max(worst_exact, abs(ls - dtheta / 2.0))
    exact = _result("distances/sjoqvist-pure-state-exact", worst_exact, 1e-12)

    worst_bound = 0.0
    ratios = []
    for dtheta in (0.1, 0.05, 0.025):
        lb = distances.bures_distance(
            states.PlanarState(1.0, 0.0), states.PlanarState(1.0, dtheta)
        )
        gap = abs(lb - dtheta / 2.0)
        worst_bound = max(worst_bound, gap - dtheta**3 / 96.0 * (1.0 + 1e-12))
        ratios.append(gap / dtheta**3)
    spread = (max(ratios) - min(ratios)) / max(ratios)
    cubic = _result(
        "distances/bures-pure-state-cubic-gap",
        max(worst_bound, spread - 1e-3),
        0.0,
        f"gap/dtheta^3 ratios {ratios}",
    )
    return [exact, cubic]


def sjoqvist_r_independence_check() -> CheckResult:
    """Equal-radius Sjoqvist distances do not depend on the radius."""
    worst = 0.0
    dtheta = 1.1
    reference = None
    for r in np.linspace(0.01, 1.0, 100):
        value = distances.sjoqvist_distance(
            states.PlanarState(r, 0.0), states.PlanarState(r, dtheta)
        )
        if reference is None:
            reference = value
        worst = max(worst, abs(value - reference))
    return _result("distances/sjoqvist-radius-independence", worst, 1e-15)


def fidelity_consistency_check(seed: int, n: int = 500) -> list[CheckResult]:
    """Closed qubit fidelity vs matrix square roots, and the distance link
    sqrt(2) [1 - sqrt(F)]^(1/2) = general Bures distance."""
    rng = np.random.default_rng(seed)
    worst_f = 0.0
    worst_d = 0.0
    for _ in range(n):
        v = rng.normal(size=(2, 3))
        v *= (rng.uniform(0.0, 0.98, 2) / np.linalg.norm(v, axis=1))[:, None]
        rho1 = states.bloch_to_density(states.BlochVector.from_array(v[0]))
        rho2 = states.bloch_to_density(states.BlochVector.from_array(v[1]))
        f_closed = distances.fidelity(rho1, rho2)
        f_general = distances.fidelity_general(rho1, rho2)
        worst_f = max(worst_f, abs(f_closed - f_general))
        d = distances.bures_distance_general(rho1, rho2)
        worst_d = max(worst_d, abs(math.sqrt(2.0 * (1.0 - math.sqrt(f_closed))) - d))
    return [
        _result("distances/fidelity-closed-vs-square-root", worst_f, 1e-12, f"{n} pairs"),
        _result("distances/bures-distance-fidelity-link", worst_d, 1e-12, f"{n} pairs"),
    ]


def classical_ordering_check(seed: int, n: int = 10_000) -> CheckResult:
    """Euclidean never exceeds taxicab."""
    rng = np.random.default_rng(seed)
    pts = rng.uniform(-1.0, 1.0, size=(n, 4))
    worst = 0.0
    for ax, az, bx, bz in pts:
        worst = max(
            worst,
            distances.euclid_distance((ax, az), (bx, bz))
            - distances.taxicab_distance((ax, az), (bx, bz)),
        )
    return _result("distances/euclid-below-taxicab", max(worst, 0.0), 0.0, f"{n} pairs")


def suite_distances(seed: int, n_pairs: int = 100_000) -> list[CheckResult]:
    results = [
        ordering_law_check(seed, n_pairs),
        bures_below_sjoqvist_check(seed + 1, n_pairs),
        classical_ordering_check(seed + 2),
        sjoqvist_r_independence_check(),
    ]
    results.extend(pure_state_limit_check())
    results.extend(fidelity_consistency_check(seed + 3))
    return results


# ---------------------------------------------------------------------------
# rotations suite
# ---------------------------------------------------------------------------

def su2_so3_duality_check(seed: int, n: int = 1000) -> CheckResult:
    """Trace construction equals the explicit axis-angle matrix entrywise."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n):
        alpha = rng.uniform(-2.0 * math.pi, 2.0 * math.pi)
        axis = rng.normal(size=3)
        axis /= np.linalg.norm(axis)
        via_su2 = rotations.so3_from_su2(rotations.su2_from_axis_angle(alpha, axis))
        direct = rotations.so3_from_axis_angle(alpha, axis)
        worst = max(worst, float(np.max(np.abs(via_su2.matrix - direct.matrix))))
    return _result("rotations/su2-so3-duality", worst, DUALITY_TOL, f"{n} samples")


def double_cover_check(seed: int, n: int = 200) -> CheckResult:
    """so3_from_su2(U) and so3_from_su2(-U) agree exactly."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n):
        alpha = rng.uniform(0.0, 2.0 * math.pi)
        axis = rng.normal(size=3)
        axis /= np.linalg.norm(axis)
        u = rotations.su2_from_axis_angle(alpha, axis)
        minus_u = rotations.SU2Matrix(-u.matrix)
        worst = max(
            worst,
            float(
                np.max(
                    np.abs(
                        rotations.so3_from_su2(u).matrix
                        - rotations.so3_from_su2(minus_u).matrix
                    )
                )
            ),
        )
    return _result("rotations/double-cover", worst, 0.0, f"{n} samples")


def _random_bloch_pairs(rng: np.random.Generator, n: int, r_max: float = 0.999):
    v = rng.normal(size=(n, 2, 3))
    radii = rng.uniform(1e-3, r_max, size=(n, 2))
    v *= (radii / np.linalg.norm(v, axis=2))[:, :, None]
    return v


def isometry_check(seed: int, n: int = 10_000) -> list[CheckResult]:
    """Distances survive the reduction to the xz-plane.

    Bures: the general matrix formula against the planar closed form on
    the reduced pair. Sjoqvist: Simpson arc length of the reduced
    boundary-value geodesic against the strip closed form (evaluated on a
    subsample; the quadrature is the expensive side).
    """
    rng = np.random.default_rng(seed)
    pairs = _random_bloch_pairs(rng, n)
    worst_b = 0.0
    for v1, v2 in pairs:
        b1, b2 = states.BlochVector.from_array(v1), states.BlochVector.from_array(v2)
        general = distances.bures_distance_general(
            states.bloch_to_density(b1), states.bloch_to_density(b2)
        )
        planar = distances.bures_distance(*reduce_pair(b1, b2))
        worst_b = max(worst_b, abs(general - planar))
    results = [
        _result(
            "rotations/bures-isometry-general-vs-planar", worst_b, ISOMETRY_TOL, f"{n} pairs"
        )
    ]

    worst_s = 0.0
    for v1, v2 in pairs[: min(n, 300)]:
        b1, b2 = states.BlochVector.from_array(v1), states.BlochVector.from_array(v2)
        a, b = reduce_pair(b1, b2)
        formula = distances.sjoqvist_distance(a, b)
        if abs(b.theta - a.theta) < 1e-9:
            quadrature = 0.5 * abs(math.asin(b.r) - math.asin(a.r))
        else:
            params, r_of = geodesics.sjoqvist_geodesic_bvp(a.r, a.theta, b.r, b.theta)
            thetas = np.linspace(a.theta, b.theta, 201)
            rp = geodesics.radial_slope(MetricKind.SJOQVIST, params, thetas)
            quadrature = geodesics.curve_length(
                MetricKind.SJOQVIST, thetas, np.atleast_1d(r_of(thetas)), rp
            )
        worst_s = max(worst_s, abs(formula - quadrature))
    results.append(
        _result(
            "rotations/sjoqvist-arc-length-after-reduction",
            worst_s,
            1e-8,
            "quadrature vs closed form on reduced pairs",
        )
    )
    return results


def reduce_pair(b1: states.BlochVector, b2: states.BlochVector):
    """Reduced planar states of a Bloch-vector pair."""
    return rotations.reduce_to_xz_plane(b1, b2).planar_states()


def reduction_structure_check(seed: int, n: int = 2000) -> list[CheckResult]:
    """Step 1 lands the first vector on the z-axis; norms survive; the
    density-matrix path matches the Bloch path."""
    rng = np.random.default_rng(seed)
    pairs = _random_bloch_pairs(rng, n)
    worst_axis = 0.0
    worst_norm = 0.0
    for v1, v2 in pairs:
        b1, b2 = states.BlochVector.from_array(v1), states.BlochVector.from_array(v2)
        red = rotations.reduce_to_xz_plane(b1, b2)
        worst_axis = max(worst_axis, abs(red.p1_new.px), abs(red.p1_new.py))
        worst_norm = max(
            worst_norm,
            abs(red.p1_new.norm - b1.norm),
            abs(red.p2_new.norm - b2.norm),
        )
    results = [
        _result("rotations/step1-sends-p1-to-z-axis", worst_axis, 1e-10, f"{n} pairs"),
        _result("rotations/reduction-preserves-norms", worst_norm, 1e-12, f"{n} pairs"),
    ]

    worst_dual = 0.0
    for _ in range(200):
        alpha = rng.uniform(0.0, 2.0 * math.pi)
        axis = rng.normal(size=3)
        axis /= np.linalg.norm(axis)
        v = rng.normal(size=3)
        v *= rng.uniform(0.0, 0.99) / np.linalg.norm(v)
        b = states.BlochVector.from_array(v)
        u = rotations.su2_from_axis_angle(alpha, axis)
        r = rotations.so3_from_su2(u)
        via_bloch = rotations.rotate_state(r, b)
        via_density = states.density_to_bloch(
            rotations.rotate_state(u, states.bloch_to_density(b))
        )
        worst_dual = max(
            worst_dual,
            float(np.max(np.abs(via_bloch.as_array() - via_density.as_array()))),
        )
    results.append(
        _result("rotations/density-conjugation-matches-bloch-action", worst_dual, 1e-12)
    )
    return results


def suite_rotations(seed: int, n: int = 10_000) -> list[CheckResult]:
    results = [su2_so3_duality_check(seed, 1000), double_cover_check(seed + 1)]
    results.extend(isometry_check(seed + 2, n))
    results.extend(reduction_structure_check(seed + 3))
    return results


# ---------------------------------------------------------------------------
# ranking and Robertson-Walker suites
# ---------------------------------------------------------------------------

def reference_point_sets() -> dict:
    """The three reference point sets of the ranking discussion."""
    quarter = (1.0 + math.sqrt(2.0)) / 4.0
    s1 = [
        states.PlanarState.from_xz(0.0, 0.0),
        states.PlanarState.from_xz(0.0, 1.0),
        states.PlanarState.from_xz(quarter, quarter),
    ]
    s2 = [
        states.PlanarState(0.5, 0.0),
        states.PlanarState(0.5, math.pi),
        states.PlanarState(0.125, 0.0),
        states.PlanarState(0.25, math.pi),
    ]
    s3 = [
        states.PlanarState(0.25, 0.0),
        states.PlanarState(0.25, math.pi),
        states.PlanarState(0.5, 0.0),
        states.PlanarState(0.5, math.pi),
    ]
    return {"S1": s1, "S2": s2, "S3": s3}


def suite_ranking(seed: int = 0, n: int = 0) -> list[CheckResult]:
    """Reference ranking verdicts; seed and n are accepted for uniformity."""
    sets = reference_point_sets()
    results = []

    s1 = sets["S1"]
    case1 = analysis.check_ranking(
        (s1[0], s1[1]), (s1[0], s1[2]), MetricKind.EUCLID, MetricKind.TAXICAB
    )
    expected1 = (1.0, 0.8535533905932737, 1.0, 1.2071067811865475)
    observed1 = case1.d_first_metric + case1.d_second_metric
    gap1 = max(abs(a - b) for a, b in zip(observed1, expected1))
    results.append(
        _result(
            "ranking/classical-reference-set",
            gap1 if case1.violated else math.inf,
            0.005,
            f"euclid {case1.d_first_metric}, taxicab {case1.d_second_metric}",
        )
    )

    s2 = sets["S2"]
    case2 = analysis.check_ranking(
        (s2[0], s2[1]), (s2[2], s2[3]), MetricKind.BURES, MetricKind.SJOQVIST
    )
    expected2 = (0.52, 0.19, math.pi / 2.0, 1.5721)
    observed2 = case2.d_first_metric + case2.d_second_metric
    gap2 = max(abs(a - b) for a, b in zip(observed2, expected2))
    results.append(
        _result(
            "ranking/quantum-reference-set",
            gap2 if case2.violated else math.inf,
            0.005,
            f"bures {case2.d_first_metric}, sjoqvist {case2.d_second_metric}",
        )
    )

    s3 = sets["S3"]
    pairs = [(s3[0], s3[1]), (s3[2], s3[3])]
    tie = analysis.equidistance_check(pairs, MetricKind.SJOQVIST)
    tie_gap = abs(tie.distances[0] - tie.distances[1])
    tied = len(tie.groups) == 1
    no_tie = analysis.equidistance_check(pairs, MetricKind.BURES)
    bures_ok = (
        len(no_tie.groups) == 2
        and abs(no_tie.distances[0] - 0.252) < 0.005
        and abs(no_tie.distances[1] - 0.5176) < 0.005
    )
    results.append(
        _result(
            "ranking/sjoqvist-equidistant-pairs",
            tie_gap if (tied and bures_ok) else math.inf,
            1e-12,
            f"sjoqvist {tie.distances}, bures {no_tie.distances}",
        )
    )
    return results


def suite_rw(seed: int, n: int = 1000) -> list[CheckResult]:
    worst = analysis.rw_spatial_equivalence(analysis.rw_sample_displacements(seed, n))
    return [
        _result(
            "rw/closed-robertson-walker-equals-rescaled-bures",
            worst,
            RW_TOL,
            f"{n} samples",
        )
    ]


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def run_suite(name: str, seed: int, trials: int | None = None) -> list[CheckResult]:
    """Run one named suite (or 'all'); `trials` rescales the sample counts."""
    dispatch = {
        "metrics": lambda: suite_metrics(seed, trials or 10_000),
        "geodesics": lambda: suite_geodesics(seed, trials or 50),
        "distances": lambda: suite_distances(seed, trials or 100_000),
        "rotations": lambda: suite_rotations(seed, trials or 10_000),
        "ranking": lambda: suite_ranking(seed),
        "rw": lambda: suite_rw(seed, trials or 1000),
    }
    if name == "all":
        results: list[CheckResult] = []
        for suite in SUITE_NAMES:
            results.extend(dispatch[suite]())
        return results
    if name not in dispatch:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITE_NAMES + ('all',)}")
    return dispatch[name]()
