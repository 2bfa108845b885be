"""Finite distances between qubit states and the classical plane metrics.

The Bures distance comes from the Uhlmann fidelity: for qubits the
fidelity has the closed form tr(rho1 rho2) + 2 sqrt(det rho1 det rho2),
and for a pair of xz-plane states (r_a, theta_a), (r_b, theta_b) the
distance collapses to an explicit expression in those polar coordinates.
The Sjoqvist distance is the geodesic arc length in the flat
(theta, arcsin r) strip:

    L = (1/2) sqrt( (theta_b - theta_a)^2 + (arcsin r_b - arcsin r_a)^2 ),

which depends on the radii only through arcsin r_b - arcsin r_a.

Angle differences are taken at face value: theta_b - theta_a is *not*
wrapped modulo 2*pi, matching the strip picture. Callers wanting the
shorter of the two angular routes can pass wrap_angle=True to
sjoqvist_distance (the Bures formula sees theta only through its cosine
and needs no wrapping).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .metrics import MetricKind, SJOQVIST_MIN_P
from .states import DensityMatrix, PlanarState

#: eigenvalues in [-PSD_TOL, 0) are treated as round-off and clamped to 0
PSD_TOL = 1e-12

BURES_MAX = math.sqrt(2.0)
SJOQVIST_MAX = math.pi / 2.0


@dataclass(frozen=True)
class DistanceReport:
    """A pairwise distance together with the formula that produced it."""

    kind: MetricKind
    a: PlanarState
    b: PlanarState
    value: float
    formula_id: str


# ---------------------------------------------------------------------------
# fidelity
# ---------------------------------------------------------------------------

def fidelity(rho1: DensityMatrix, rho2: DensityMatrix) -> float:
    """Uhlmann fidelity of two qubit states, closed form.

    F = tr(rho1 rho2) + 2 sqrt(det rho1 det rho2). Equals 1 iff the states
    coincide and 0 only for orthogonal pure states.
    """
    m1, m2 = rho1.matrix, rho2.matrix
    overlap = float(np.real(np.trace(m1 @ m2)))
    dets = []
    for m in (m1, m2):
        d = float(np.real(np.linalg.det(m)))
        if d < -PSD_TOL:
            raise ValueError(f"negative determinant {d!r}: not a valid state")
        dets.append(max(d, 0.0))
    value = overlap + 2.0 * math.sqrt(dets[0] * dets[1])
    return min(max(value, 0.0), 1.0)


def _sqrtm_psd(m: np.ndarray) -> np.ndarray:
    """Square root of a Hermitian PSD matrix via eigendecomposition."""
    w, vec = np.linalg.eigh(m)
    if w.min() < -PSD_TOL:
        raise ValueError(f"matrix has eigenvalue {w.min()!r} below the PSD clamp")
    w = np.clip(w, 0.0, None)
    return (vec * np.sqrt(w)) @ vec.conj().T


def fidelity_general(rho1: DensityMatrix, rho2: DensityMatrix) -> float:
    """Uhlmann fidelity (tr sqrt(sqrt(rho1) rho2 sqrt(rho1)))^2.

    Dimension-agnostic route through matrix square roots; serves as the
    independent check of the qubit closed form.
    """
    s1 = _sqrtm_psd(rho1.matrix)
    inner = s1 @ rho2.matrix @ s1
    inner = (inner + inner.conj().T) / 2.0
    value = float(np.real(np.trace(_sqrtm_psd(inner)))) ** 2
    return min(max(value, 0.0), 1.0)


# ---------------------------------------------------------------------------
# quantum distances
# ---------------------------------------------------------------------------

def _bures_length(ra, theta_a, rb, theta_b):
    """Planar Bures distance; broadcasts over array inputs."""
    ra = np.asarray(ra, dtype=float)
    rb = np.asarray(rb, dtype=float)
    root_f = np.sqrt(
        2.0
        * (
            (1.0 + ra * rb * np.cos(np.asarray(theta_a) - np.asarray(theta_b))) / 4.0
            + np.sqrt((1.0 - ra * ra) * (1.0 - rb * rb)) / 4.0
        )
    )
    return math.sqrt(2.0) * np.sqrt(np.maximum(0.0, 1.0 - np.minimum(root_f, 1.0)))


def _sjoqvist_length(ra, theta_a, rb, theta_b):
    """Planar Sjoqvist distance; broadcasts over array inputs."""
    dtheta = np.asarray(theta_b, dtype=float) - np.asarray(theta_a, dtype=float)
    dradial = np.arcsin(np.asarray(rb, dtype=float)) - np.arcsin(np.asarray(ra, dtype=float))
    return 0.5 * np.sqrt(dtheta * dtheta + dradial * dradial)


def bures_distance(a: PlanarState, b: PlanarState) -> float:
    """Bures distance between two xz-plane states.

    Valid on the whole closed ball; equals sqrt(2) [1 - sqrt(F)]^(1/2)
    with F the fidelity of the corresponding density matrices.
    """
    return float(_bures_length(a.r, a.theta, b.r, b.theta))


def sjoqvist_distance(a: PlanarState, b: PlanarState, wrap_angle: bool = False) -> float:
    """Sjoqvist distance between two xz-plane states.

    The maximally mixed center (r = 0) lies outside the metric domain.
    With wrap_angle=True the angular separation is reduced to [0, pi]
    before applying the formula (the shorter of the two angular routes);
    the default keeps theta_b - theta_a as given.
    """
    for name, state in (("a", a), ("b", b)):
        if state.r < SJOQVIST_MIN_P:
            raise ValueError(
                f"state {name} has r = {state.r!r}: the interferometric "
                "metric is singular at the maximally mixed state"
            )
    theta_b = b.theta
    if wrap_angle:
        delta = abs(b.theta - a.theta) % (2.0 * math.pi)
        theta_b = a.theta + min(delta, 2.0 * math.pi - delta)
    return float(_sjoqvist_length(a.r, a.theta, b.r, theta_b))


def bures_distance_general(rho1: DensityMatrix, rho2: DensityMatrix) -> float:
    """Bures distance sqrt(2) [1 - tr sqrt(sqrt(rho1) rho2 sqrt(rho1))]^(1/2).

    Works for any pair of density matrices (no plane restriction); agrees
    with the planar closed form after rotating both states into the
    xz-plane.
    """
    s1 = _sqrtm_psd(rho1.matrix)
    inner = s1 @ rho2.matrix @ s1
    inner = (inner + inner.conj().T) / 2.0
    root_f = float(np.real(np.trace(_sqrtm_psd(inner))))
    return math.sqrt(2.0) * math.sqrt(max(0.0, 1.0 - min(root_f, 1.0)))


# ---------------------------------------------------------------------------
# classical plane metrics
# ---------------------------------------------------------------------------

def euclid_distance(a, b) -> float:
    """Euclidean distance between two points of the plane."""
    (ax, az), (bx, bz) = _as_plane_point(a), _as_plane_point(b)
    return math.hypot(ax - bx, az - bz)


def taxicab_distance(a, b) -> float:
    """Taxicab (L1) distance between two points of the plane."""
    (ax, az), (bx, bz) = _as_plane_point(a), _as_plane_point(b)
    return abs(ax - bx) + abs(az - bz)


def _as_plane_point(point) -> tuple[float, float]:
    if isinstance(point, PlanarState):
        return point.to_xz()
    x, z = point
    for v in (x, z):
        if not math.isfinite(v):
            raise ValueError(f"non-finite plane coordinate {v!r}")
    return float(x), float(z)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

_FORMULA_IDS = {
    MetricKind.BURES: "bures-planar-fidelity",
    MetricKind.SJOQVIST: "sjoqvist-strip-arc-length",
    MetricKind.EUCLID: "euclid-l2",
    MetricKind.TAXICAB: "taxicab-l1",
}


def compute_distance(kind: MetricKind, a: PlanarState, b: PlanarState) -> DistanceReport:
    """Distance between two planar states under the selected metric.

    Classical kinds act on the Cartesian (x, z) images of the states.
    """
    if kind is MetricKind.BURES:
        value = bures_distance(a, b)
    elif kind is MetricKind.SJOQVIST:
        value = sjoqvist_distance(a, b)
    elif kind is MetricKind.EUCLID:
        value = euclid_distance(a, b)
    elif kind is MetricKind.TAXICAB:
        value = taxicab_distance(a, b)
    else:
        raise ValueError(f"unknown metric kind {kind}")
    return DistanceReport(kind=kind, a=a, b=b, value=value, formula_id=_FORMULA_IDS[kind])
