"""Closed-form geodesics of both metrics in the xz-plane, great circles of
the 4-D Bures embedding, and a Runge-Kutta integrator of the variational
equations used as an independent cross-check.

In polar coordinates (r, theta) with phi held constant, the length
functional of either metric has a theta-independent integrand, so its
Euler-Lagrange equation collapses to a first integral (the Beltrami
identity). For the Bures Lagrangian sqrt(r^2 + r'^2/(1 - r^2)) the
conserved quantity is r^2 / sqrt(r^2 + r'^2/(1 - r^2)); for the Sjoqvist
Lagrangian sqrt(1 + r'^2/(1 - r^2)) it is the reciprocal of the
Lagrangian itself, equivalently r'^2/(1 - r^2) = const. Integrating the
first integral gives the closed forms below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np
from scipy.integrate import cumulative_simpson, simpson

from .metrics import MetricKind, EmbeddedPoint4

#: integration band: the variational ODE is singular at r = 0 and r = 1
ORACLE_BAND = 1e-6
#: residual tolerance for great-circle orthogonality
GREAT_CIRCLE_TOL = 1e-9


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BuresGeodesicParams:
    """Constants of a Bures radial geodesic launched from (ra, theta_a).

    c_beltrami is the conserved first integral, a_sq = 1/c_beltrami^2 and
    phase is the angular offset at which the curve would touch r = 1. The
    printed phase constant loses the sign of the initial slope (it enters
    under a square root), so the sign is carried separately and applied to
    theta - theta_a; phase = pi/2 is the continuous limit for zero slope.
    """

    c_beltrami: float
    a_sq: float
    phase: float
    slope_sign: float
    ra: float
    ra_prime: float
    theta_a: float


@dataclass(frozen=True)
class SjoqvistGeodesicParams:
    """Constants of a Sjoqvist geodesic.

    In the strip coordinates (theta, arcsin r) the metric is flat and
    geodesics are straight lines of slope `slope`; k = slope^2 is the
    conserved r'^2/(1 - r^2) and c_beltrami = 1/sqrt(1 + k). A boundary
    value problem with theta_a = theta_b degenerates to a purely radial
    segment, flagged by `is_radial` (slope and k are infinite there).
    """

    c_beltrami: float
    k: float
    slope: float
    ra: float
    theta_a: float
    rb: float | None = None
    theta_b: float | None = None
    is_radial: bool = False


GeodesicParams = Union[BuresGeodesicParams, SjoqvistGeodesicParams]


def bures_geodesic_ivp(
    ra: float, ra_prime: float, theta_a: float = 0.0
) -> tuple[BuresGeodesicParams, Callable]:
    """Bures geodesic through r(theta_a) = ra with slope ra_prime.

    Returns the parameter record and the closed-form map theta -> r. With
    u = phase - sign(ra') (theta - theta_a) the curve is

        r(theta) = 1 / sqrt(cos^2 u + a_sq sin^2 u),

    the principal-branch closed form extended by continuity across the
    points where its tangent-based expression changes branch. The radius
    oscillates between c_beltrami (at u = pi/2 mod pi) and 1 (at u = 0
    mod pi), touching the pure-state boundary.
    """
    if not 0.0 < ra < 1.0:
        raise ValueError(f"ra = {ra!r}: the first-integral form degenerates at r in {{0, 1}}")
    if not math.isfinite(ra_prime):
        raise ValueError("initial slope must be finite")
    a_sq = 1.0 / ra**2 + ra_prime**2 / (ra**4 * (1.0 - ra**2))
    if ra_prime == 0.0:
        phase = math.pi / 2.0
    else:
        phase = math.atan(abs((1.0 - ra**2) * ra / ra_prime))
    sign = 1.0 if ra_prime >= 0.0 else -1.0
    params = BuresGeodesicParams(
        c_beltrami=1.0 / math.sqrt(a_sq),
        a_sq=a_sq,
        phase=phase,
        slope_sign=sign,
        ra=ra,
        ra_prime=ra_prime,
        theta_a=theta_a,
    )

    def r_of(theta):
        u = phase - sign * (np.asarray(theta, dtype=float) - theta_a)
        return 1.0 / np.sqrt(np.cos(u) ** 2 + a_sq * np.sin(u) ** 2)

    return params, r_of


def sjoqvist_geodesic_ivp(
    ra: float, ra_prime: float, theta_a: float = 0.0
) -> tuple[SjoqvistGeodesicParams, Callable]:
    """Sjoqvist geodesic through r(theta_a) = ra with slope ra_prime.

    r(theta) = sin( ra'/sqrt(1 - ra^2) (theta - theta_a) + arcsin(ra) ).
    Zero initial slope gives a constant-r circle: unlike the Bures case
    the radial and angular motions are uncoupled.
    """
    if not 0.0 < ra < 1.0:
        raise ValueError(f"ra = {ra!r}: initial radius must lie strictly inside (0, 1)")
    slope = ra_prime / math.sqrt(1.0 - ra * ra)
    k = slope * slope
    params = SjoqvistGeodesicParams(
        c_beltrami=1.0 / math.sqrt(1.0 + k), k=k, slope=slope, ra=ra, theta_a=theta_a
    )
    offset = math.asin(ra)

    def r_of(theta):
        return np.sin(slope * (np.asarray(theta, dtype=float) - theta_a) + offset)

    return params, r_of


def sjoqvist_geodesic_bvp(
    ra: float, theta_a: float, rb: float, theta_b: float
) -> tuple[SjoqvistGeodesicParams, Callable]:
    """Sjoqvist geodesic connecting (ra, theta_a) to (rb, theta_b).

    The curve is the straight line between the endpoints in the flat
    (theta, arcsin r) strip, r(theta) = sin(m (theta - theta_a) +
    arcsin ra) with m = (arcsin rb - arcsin ra)/(theta_b - theta_a).
    Coincident angles with distinct radii are the purely radial limit:
    the returned params carry is_radial = True and the theta -> r map is
    undefined (r is no longer a function of theta).
    """
    for name, r in (("ra", ra), ("rb", rb)):
        if not 0.0 < r <= 1.0:
            raise ValueError(f"{name} = {r!r} outside the metric domain (0, 1]")
    sa, sb = math.asin(ra), math.asin(rb)
    if theta_a == theta_b:
        if ra == rb:
            raise ValueError("endpoints coincide: no unique geodesic")
        params = SjoqvistGeodesicParams(
            c_beltrami=0.0,
            k=math.inf,
            slope=math.copysign(math.inf, sb - sa),
            ra=ra,
            theta_a=theta_a,
            rb=rb,
            theta_b=theta_b,
            is_radial=True,
        )

        def r_of(theta):
            raise ValueError(
                "purely radial geodesic (theta_a = theta_b): r is not a function of theta"
            )

        return params, r_of

    slope = (sb - sa) / (theta_b - theta_a)
    k = slope * slope
    params = SjoqvistGeodesicParams(
        c_beltrami=1.0 / math.sqrt(1.0 + k),
        k=k,
        slope=slope,
        ra=ra,
        theta_a=theta_a,
        rb=rb,
        theta_b=theta_b,
    )

    def r_of(theta):
        return np.sin(slope * (np.asarray(theta, dtype=float) - theta_a) + sa)

    return params, r_of


def radial_slope(kind: MetricKind, params: GeodesicParams, theta) -> np.ndarray:
    """Analytic dr/dtheta of a closed-form geodesic."""
    theta = np.asarray(theta, dtype=float)
    if kind is MetricKind.BURES:
        u = params.phase - params.slope_sign * (theta - params.theta_a)
        d = np.cos(u) ** 2 + params.a_sq * np.sin(u) ** 2
        return params.slope_sign * (params.a_sq - 1.0) * np.sin(2.0 * u) / (2.0 * d**1.5)
    if kind is MetricKind.SJOQVIST:
        if params.is_radial:
            raise ValueError("purely radial geodesic has no dr/dtheta")
        arg = params.slope * (theta - params.theta_a) + math.asin(params.ra)
        return params.slope * np.cos(arg)
    raise ValueError(f"no geodesics for metric kind {kind}")


# ---------------------------------------------------------------------------
# sampled curves and arc length
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GeodesicCurve:
    """A closed-form geodesic sampled on a theta grid.

    arc_length[i] is the metric length accumulated from thetas[0] to
    thetas[i]. reaches_turning_point marks Bures curves whose range
    includes an extremum of r (where r touches c_beltrami or 1 and the
    curve continues on the next branch by continuity).
    """

    kind: MetricKind
    params: GeodesicParams
    thetas: np.ndarray
    r: np.ndarray
    arc_length: np.ndarray
    reaches_turning_point: bool = False


def lagrangian(kind: MetricKind, r, r_prime) -> np.ndarray:
    """Integrand L of the length functional; the length is (1/2) int L dtheta."""
    r = np.asarray(r, dtype=float)
    rp = np.asarray(r_prime, dtype=float)
    if kind is MetricKind.BURES:
        return np.sqrt(r * r + rp * rp / (1.0 - r * r))
    if kind is MetricKind.SJOQVIST:
        return np.sqrt(1.0 + rp * rp / (1.0 - r * r))
    raise ValueError(f"no length functional for metric kind {kind}")


def curve_length(kind: MetricKind, thetas, r, r_prime) -> float:
    """Metric length of a sampled curve by Simpson quadrature of L/2."""
    value = simpson(lagrangian(kind, r, r_prime), x=np.asarray(thetas, dtype=float))
    return 0.5 * abs(float(value))


def sample_geodesic(
    kind: MetricKind,
    ra: float,
    ra_prime: float,
    theta_a: float,
    theta_end: float,
    n_samples: int = 1000,
) -> GeodesicCurve:
    """Sample the initial-value geodesic on a uniform theta grid.

    Cumulative arc length is accumulated with the trapezoidal rule on the
    same grid (the integrand is smooth; refine n_samples as needed).
    """
    if kind is MetricKind.BURES:
        params, r_of = bures_geodesic_ivp(ra, ra_prime, theta_a)
    elif kind is MetricKind.SJOQVIST:
        params, r_of = sjoqvist_geodesic_ivp(ra, ra_prime, theta_a)
    else:
        raise ValueError(f"no geodesics for metric kind {kind}")
    thetas = np.linspace(theta_a, theta_end, n_samples)
    r = np.atleast_1d(r_of(thetas))
    rp = np.atleast_1d(radial_slope(kind, params, thetas))
    arc = cumulative_trapezoid(0.5 * lagrangian(kind, r, rp), thetas, initial=0.0)
    turning = False
    if kind is MetricKind.BURES:
        # r is extremal where u = phase - sign (theta - theta_a) hits a
        # multiple of pi/2 inside the range
        u_a = params.phase - params.slope_sign * (thetas[0] - theta_a)
        u_b = params.phase - params.slope_sign * (thetas[-1] - theta_a)
        lo, hi = min(u_a, u_b), max(u_a, u_b)
        first = math.ceil(lo / (math.pi / 2.0))
        turning = first * (math.pi / 2.0) < hi
    return GeodesicCurve(
        kind=kind,
        params=params,
        thetas=thetas,
        r=r,
        arc_length=np.abs(arc),
        reaches_turning_point=turning,
    )


# ---------------------------------------------------------------------------
# great circles of the Bures embedding
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GreatCircle:
    """Great circle x(s) = u cos(s) + v sin(s) on the embedded unit 3-sphere.

    u = (cos chi, n_hat sin chi) and v = (sin xi, m_hat cos xi) are unit
    4-vectors; the angle xi is tied to chi by -(n_hat . m_hat) tan(chi) =
    tan(xi), which is exactly the orthogonality u . v = 0.
    """

    chi: float
    xi: float
    n_hat: np.ndarray
    m_hat: np.ndarray

    def __post_init__(self) -> None:
        n = np.asarray(self.n_hat, dtype=float)
        m = np.asarray(self.m_hat, dtype=float)
        for name, vec in (("n_hat", n), ("m_hat", m)):
            if abs(np.linalg.norm(vec) - 1.0) > 1e-10:
                raise ValueError(f"{name} is not a unit vector")
        # cos(chi) cos(xi) (tan(xi) + (n.m) tan(chi)): bounded form of the
        # orthogonality constraint, usable at chi = pi/2
        residual = math.cos(self.chi) * math.sin(self.xi) + float(n @ m) * math.sin(
            self.chi
        ) * math.cos(self.xi)
        if abs(residual) > GREAT_CIRCLE_TOL:
            raise ValueError(
                f"axes violate -(n.m) tan(chi) = tan(xi): residual {residual!r}"
            )
        object.__setattr__(self, "n_hat", n)
        object.__setattr__(self, "m_hat", m)

    @classmethod
    def from_axes(cls, chi: float, n_hat, m_hat) -> "GreatCircle":
        """Build the circle with xi solved from the orthogonality constraint."""
        n = np.asarray(n_hat, dtype=float)
        m = np.asarray(m_hat, dtype=float)
        xi = math.atan2(-float(n @ m) * math.sin(chi), math.cos(chi))
        return cls(chi=chi, xi=xi, n_hat=n, m_hat=m)

    @property
    def u(self) -> np.ndarray:
        return np.concatenate(([math.cos(self.chi)], math.sin(self.chi) * self.n_hat))

    @property
    def v(self) -> np.ndarray:
        return np.concatenate(([math.sin(self.xi)], math.cos(self.xi) * self.m_hat))


def bures_great_circle(circle: GreatCircle, s: float) -> EmbeddedPoint4:
    """Point of the great circle at arc length s (unit speed)."""
    x = circle.u * math.cos(s) + circle.v * math.sin(s)
    return EmbeddedPoint4(float(x[0]), x[1:])


def great_circle_radial_profile(circle: GreatCircle, s) -> np.ndarray:
    """Radial length p(s) = sqrt(1 - x0(s)^2) along the great circle."""
    s = np.asarray(s, dtype=float)
    x0 = math.cos(circle.chi) * np.cos(s) + math.sin(circle.xi) * np.sin(s)
    return np.sqrt(np.maximum(0.0, 1.0 - x0 * x0))


# ---------------------------------------------------------------------------
# Runge-Kutta oracle
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OracleResult:
    """Fixed-step RK4 solution of the Euler-Lagrange equation.

    max_deviation is the sup-norm gap between the integrated radii and the
    closed form launched from the same initial data; it is the quantity
    the closed forms are validated against.
    """

    kind: MetricKind
    thetas: np.ndarray
    r: np.ndarray
    r_prime: np.ndarray
    max_deviation: float


def _bures_accel(r: float, v: float) -> float:
    one_m = 1.0 - r * r
    return r * one_m + v * v * (2.0 - 3.0 * r * r) / (r * one_m)


def _sjoqvist_accel(r: float, v: float) -> float:
    return -r * v * v / (1.0 - r * r)


def geodesic_oracle(
    kind: MetricKind,
    ra: float,
    ra_prime: float,
    theta_a: float,
    theta_end: float,
    n_steps: int = 10_000,
) -> OracleResult:
    """Integrate the second-order Euler-Lagrange equation with fixed-step RK4.

    The Bures equation couples r'' to both r and r'; the Sjoqvist one,
    r'' = -r r'^2/(1 - r^2), has every constant-r circle as an
    equilibrium. Steps that would leave the band (1e-6, 1 - 1e-6), where
    the equations are singular, abort the integration: the closed-form
    comparison is not applicable there.
    """
    if kind is MetricKind.BURES:
        accel = _bures_accel
        _, r_of = bures_geodesic_ivp(ra, ra_prime, theta_a)
    elif kind is MetricKind.SJOQVIST:
        accel = _sjoqvist_accel
        _, r_of = sjoqvist_geodesic_ivp(ra, ra_prime, theta_a)
    else:
        raise ValueError(f"no geodesics for metric kind {kind}")
    if not ORACLE_BAND < ra < 1.0 - ORACLE_BAND:
        raise ValueError(f"ra = {ra!r} outside the integrable band")
    if n_steps < 1:
        raise ValueError("n_steps must be positive")

    h = (theta_end - theta_a) / n_steps
    r, v = ra, ra_prime
    rs = [r]
    vs = [v]
    for _ in range(n_steps):
        k1r, k1v = v, accel(r, v)
        r2, v2 = r + 0.5 * h * k1r, v + 0.5 * h * k1v
        k2r, k2v = v2, accel(r2, v2)
        r3, v3 = r + 0.5 * h * k2r, v + 0.5 * h * k2v
        k3r, k3v = v3, accel(r3, v3)
        r4, v4 = r + h * k3r, v + h * k3v
        k4r, k4v = v4, accel(r4, v4)
        r = r + h / 6.0 * (k1r + 2.0 * k2r + 2.0 * k3r + k4r)
        v = v + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
        if not ORACLE_BAND < r < 1.0 - ORACLE_BAND:
            raise ValueError(
                f"trajectory left the integrable band at r = {r!r}; "
                "closed-form comparison not applicable on this range"
            )
        rs.append(r)
        vs.append(v)

    thetas = theta_a + h * np.arange(n_steps + 1)
    r_arr = np.array(rs)
    deviation = float(np.max(np.abs(r_arr - np.atleast_1d(r_of(thetas)))))
    return OracleResult(
        kind=kind, thetas=thetas, r=r_arr, r_prime=np.array(vs), max_deviation=deviation
    )


def oracle_window(
    kind: MetricKind,
    ra: float,
    ra_prime: float,
    theta_a: float,
    max_span: float = 1.0,
    band: float = 1e-2,
    n_scan: int = 2001,
) -> float:
    """Largest theta_end <= theta_a + max_span keeping the closed form in
    [band, 1 - band], found by scanning the closed form on a dense grid.

    Bures geodesics touch r = 1 a finite angle after launch, where the
    variational equation is singular, so oracle comparisons must stop
    short of the boundary.
    """
    if kind is MetricKind.BURES:
        params, r_of = bures_geodesic_ivp(ra, ra_prime, theta_a)
    else:
        params, r_of = sjoqvist_geodesic_ivp(ra, ra_prime, theta_a)
    grid = np.linspace(theta_a, theta_a + max_span, n_scan)
    r = np.atleast_1d(r_of(grid))
    bad = np.nonzero((r < band) | (r > 1.0 - band))[0]
    if bad.size == 0:
        return float(grid[-1])
    if bad[0] <= 1:
        raise ValueError("initial data already at the edge of the comparison band")
    return float(grid[bad[0] - 1])
