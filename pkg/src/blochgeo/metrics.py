"""Infinitesimal line elements of the two quantum metrics in the Bloch ball.

Each metric is evaluated in three equivalent coordinate systems:

* Cartesian Bloch components p and dp,
* spherical coordinates (p, theta, phi),
* hyperspherical coordinates with p = sin(chi), chi in (0, pi/2].

A fourth, extrinsic view embeds the ball in R^4 via x = (sqrt(1 - p^2), p).
For the Bures metric the embedded surface is the round unit 3-sphere; for
the Sjoqvist metric the embedding carries p-dependent weights whose
temporal component changes sign at p = 1/sqrt(2) and diverges at the
maximally mixed center, so that metric lives on the punctured open ball.

The primitive returned everywhere is ds^2 (not ds), which avoids square
root precision loss for near-null displacements. The hyperspherical form
returns 4*ds^2, the natural normalization in that chart.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.integrate import cumulative_trapezoid

from .states import BlochVector, SphericalState

#: radial threshold below which the Sjoqvist metric is treated as singular
SJOQVIST_MIN_P = 1e-12
#: central-difference step for extrinsic verification, truncation ~O(h^2)
FD_STEP = 1e-5


class MetricKind(Enum):
    """Distance notions handled by this package.

    BURES and SJOQVIST are the Riemannian metrics on mixed states; EUCLID
    and TAXICAB are the classical plane metrics used only by the finite
    distance and ranking operations.
    """

    BURES = "bures"
    SJOQVIST = "sjoqvist"
    EUCLID = "euclid"
    TAXICAB = "taxicab"


QUANTUM_KINDS = (MetricKind.BURES, MetricKind.SJOQVIST)
CLASSICAL_KINDS = (MetricKind.EUCLID, MetricKind.TAXICAB)


@dataclass(frozen=True)
class TangentDisplacement:
    """Infinitesimal Bloch-vector increment dp in Cartesian components."""

    dx: float
    dy: float
    dz: float

    def as_array(self) -> np.ndarray:
        return np.array([self.dx, self.dy, self.dz])

    @classmethod
    def from_spherical(
        cls, state: SphericalState, dp: float, dtheta: float, dphi: float
    ) -> "TangentDisplacement":
        """Push (dp, dtheta, dphi) forward through the spherical chart."""
        st, ct = math.sin(state.theta), math.cos(state.theta)
        sp, cp = math.sin(state.phi), math.cos(state.phi)
        p = state.p
        dx = dp * st * cp + p * dtheta * ct * cp - p * dphi * st * sp
        dy = dp * st * sp + p * dtheta * ct * sp + p * dphi * st * cp
        dz = dp * ct - p * dtheta * st
        return cls(dx, dy, dz)


@dataclass(frozen=True)
class EmbeddedPoint4:
    """Point x = (x0, x_vec) of the R^4 embedding, x0 = sqrt(1 - p^2)."""

    x0: float
    x: np.ndarray

    def as_array(self) -> np.ndarray:
        return np.concatenate(([self.x0], self.x))


def _check_quantum_domain(kind: MetricKind, p: float) -> None:
    if kind not in QUANTUM_KINDS:
        raise ValueError(f"line elements are defined only for quantum metrics, got {kind}")
    if p >= 1.0:
        raise ValueError(f"p = {p!r}: the radial factor 1/(1 - p^2) is singular at p = 1")
    if kind is MetricKind.SJOQVIST and p < SJOQVIST_MIN_P:
        raise ValueError(
            f"p = {p!r}: the interferometric metric has an essential "
            "singularity at the maximally mixed state"
        )


def line_element_cartesian(kind: MetricKind, p: BlochVector, d) -> float:
    """ds^2 for a Cartesian displacement d of the Bloch vector p.

    Bures:    (1/4) [ (p . dp)^2 / (1 - p^2) + dp . dp ]
    Sjoqvist: (1/4) [ (2p^2 - 1)(p . dp)^2 / (p^4 (1 - p^2)) + dp . dp / p^2 ]

    Args:
        kind: BURES or SJOQVIST.
        p: base point inside the ball (strictly inside for both metrics,
            and away from the center for SJOQVIST).
        d: TangentDisplacement or any length-3 array-like.
    """
    dp = d.as_array() if isinstance(d, TangentDisplacement) else np.asarray(d, dtype=float)
    pv = p.as_array()
    p2 = float(pv @ pv)
    _check_quantum_domain(kind, math.sqrt(p2))
    radial2 = float(pv @ dp) ** 2
    if kind is MetricKind.BURES:
        return 0.25 * (radial2 / (1.0 - p2) + float(dp @ dp))
    return 0.25 * (
        (2.0 * p2 - 1.0) * radial2 / (p2 * p2 * (1.0 - p2)) + float(dp @ dp) / p2
    )


def line_element_spherical(
    kind: MetricKind, state: SphericalState, dp: float, dtheta: float, dphi: float
) -> float:
    """ds^2 in spherical coordinates.

    Bures:    (1/4) [ dp^2/(1 - p^2) + p^2 (dtheta^2 + sin^2(theta) dphi^2) ]
    Sjoqvist: (1/4) [ dp^2/(1 - p^2) +      dtheta^2 + sin^2(theta) dphi^2  ]

    The constant-p surfaces are 2-spheres: of area 4*pi*p^2 under Bures,
    of p-independent area 4*pi under Sjoqvist.
    """
    p = state.p
    _check_quantum_domain(kind, p)
    angular = dtheta * dtheta + math.sin(state.theta) ** 2 * dphi * dphi
    radial = dp * dp / (1.0 - p * p)
    if kind is MetricKind.BURES:
        return 0.25 * (radial + p * p * angular)
    return 0.25 * (radial + angular)


def line_element_hyperspherical(
    kind: MetricKind, chi: float, theta: float, dchi: float, dtheta: float, dphi: float
) -> float:
    """4*ds^2 in the chart p = sin(chi), chi in (0, pi/2].

    Bures:    dchi^2 + sin^2(chi) (dtheta^2 + sin^2(theta) dphi^2)
              -- the round metric of the unit 3-sphere.
    Sjoqvist: dchi^2 + dtheta^2 + sin^2(theta) dphi^2
              -- the chi-independent product metric of S^1 x S^2.

    This chart is regular at chi = pi/2 (pure states), unlike the
    spherical form whose 1/(1 - p^2) factor blows up there.
    """
    if kind not in QUANTUM_KINDS:
        raise ValueError(f"line elements are defined only for quantum metrics, got {kind}")
    if not 0.0 < chi <= math.pi / 2.0:
        raise ValueError(f"hyperspherical angle {chi!r} outside (0, pi/2]")
    angular = dtheta * dtheta + math.sin(theta) ** 2 * dphi * dphi
    if kind is MetricKind.BURES:
        return dchi * dchi + math.sin(chi) ** 2 * angular
    return dchi * dchi + angular


def sjoqvist_weights(p: float) -> tuple[float, float]:
    """Extrinsic weights (omega_x0, omega_x) of the Sjoqvist embedding.

    omega_x0 = (2p^2 - 1)/p^4 changes sign at p = 1/sqrt(2), so the
    extrinsic quadratic form does not have constant signature; omega_x =
    1/p^2. Both diverge at p = 0.
    """
    if p < SJOQVIST_MIN_P:
        raise ValueError(f"p = {p!r}: extrinsic weights diverge at the center")
    p2 = p * p
    return (2.0 * p2 - 1.0) / (p2 * p2), 1.0 / p2


def embed_extrinsic(kind: MetricKind, state: SphericalState) -> EmbeddedPoint4:
    """Map a state to its R^4 embedding x = (sqrt(1 - p^2), p_vec).

    The point itself is the same for either metric; `kind` selects which
    quadratic form is meant to act on displacements of the returned
    coordinates (unweighted for Bures, sjoqvist_weights otherwise).
    """
    if kind not in QUANTUM_KINDS:
        raise ValueError(f"embedding defined only for quantum metrics, got {kind}")
    v = state.to_bloch().as_array()
    p2 = min(float(v @ v), 1.0)
    return EmbeddedPoint4(math.sqrt(1.0 - p2), v)


def extrinsic_line_element_fd(
    kind: MetricKind,
    state: SphericalState,
    dp: float,
    dtheta: float,
    dphi: float,
    h: float = FD_STEP,
) -> float:
    """ds^2 recovered from the embedding by central differences.

    Walks the straight coordinate line (p, theta, phi) + t (dp, dtheta,
    dphi), differences the embedded coordinates at t = +-h and applies the
    extrinsic quadratic form. Truncation error is O(h^2); for the Sjoqvist
    weights the leading terms cancel near the center, which amplifies that
    error by roughly (1 - p^2)/p^2.
    """
    p = state.p
    _check_quantum_domain(kind, p)

    def embedded(t: float) -> np.ndarray:
        s = SphericalState(p + t * dp, state.theta + t * dtheta, state.phi + t * dphi)
        return embed_extrinsic(kind, s).as_array()

    dx = (embedded(h) - embedded(-h)) / (2.0 * h)
    if kind is MetricKind.BURES:
        return 0.25 * float(dx @ dx)
    w0, wx = sjoqvist_weights(p)
    return 0.25 * (w0 * dx[0] ** 2 + wx * float(dx[1:] @ dx[1:]))


@dataclass(frozen=True)
class EmbeddingTrajectory:
    """Cumulative embedding coordinates integrated along a sampled path.

    `x` holds the spatial coordinates (zero at the path start; the
    defining integral leaves the constant free), `x0` the temporal one for
    the Sjoqvist case. `crosses_signature_flip` flags Sjoqvist paths whose
    radial length crosses p = 1/sqrt(2), where the temporal weight changes
    sign; the integral uses its absolute value throughout.
    """

    s: np.ndarray
    x: np.ndarray
    x0: np.ndarray | None
    crosses_signature_flip: bool = False


def embedding_trajectory(
    kind: MetricKind, s, p, p_hat
) -> EmbeddingTrajectory:
    """Integrate the embedding coordinates along a sampled path.

    Bures accumulates sin(chi(s)) * d(p_hat)/ds. Sjoqvist accumulates the
    weighted differentials of x = p_vec and x0 = sqrt(1 - p^2): spatial
    integrand omega_x^(-1/2) dx/ds and temporal sqrt(|omega_x0|) dx0/ds.

    Args:
        kind: BURES or SJOQVIST.
        s: (n,) strictly monotone parameter values, densely sampled.
        p: (n,) radial lengths along the path.
        p_hat: (n, 3) unit direction vectors along the path.
    """
    if kind not in QUANTUM_KINDS:
        raise ValueError(f"trajectory integrals defined only for quantum metrics, got {kind}")
    s = np.asarray(s, dtype=float)
    p = np.asarray(p, dtype=float)
    p_hat = np.asarray(p_hat, dtype=float)
    if s.ndim != 1 or p.shape != s.shape or p_hat.shape != (s.size, 3):
        raise ValueError("expected s (n,), p (n,), p_hat (n, 3)")

    if kind is MetricKind.BURES:
        dhat = np.gradient(p_hat, s, axis=0)
        integrand = p[:, None] * dhat
        x = cumulative_trapezoid(integrand, s, axis=0, initial=0.0)
        return EmbeddingTrajectory(s=s, x=x, x0=None)

    if np.min(p) < SJOQVIST_MIN_P:
        raise ValueError("path touches the maximally mixed center where the metric is singular")
    xv = p[:, None] * p_hat
    dxv = np.gradient(xv, s, axis=0)
    # omega_x^(-1/2) = p
    x = cumulative_trapezoid(p[:, None] * dxv, s, axis=0, initial=0.0)
    x0_coord = np.sqrt(np.maximum(0.0, 1.0 - p * p))
    dx0 = np.gradient(x0_coord, s)
    w0 = np.abs(2.0 * p * p - 1.0) / p**4
    x0 = cumulative_trapezoid(np.sqrt(w0) * dx0, s, initial=0.0)
    offset = p - 1.0 / math.sqrt(2.0)
    crosses = bool(np.any(offset[:-1] * offset[1:] < 0.0))
    return EmbeddingTrajectory(s=s, x=x, x0=x0, crosses_signature_flip=crosses)


def planar_embedding_trajectory(kind: MetricKind, thetas, r) -> EmbeddingTrajectory:
    """Embedding trajectory of an xz-plane curve sampled as (theta_i, r_i)."""
    thetas = np.asarray(thetas, dtype=float)
    r = np.asarray(r, dtype=float)
    p_hat = np.column_stack((np.sin(thetas), np.zeros_like(thetas), np.cos(thetas)))
    return embedding_trajectory(kind, thetas, r, p_hat)
