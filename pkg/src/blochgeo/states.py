"""Single-qubit state representations and conversions between them.

A qubit density matrix is parameterized by a real polarization 3-vector in
the closed unit ball: rho = (I + p . sigma)/2. Points on the surface
(|p| = 1) are pure states, interior points are mixed states. All distance
and geodesic closed forms downstream operate on states restricted to the
xz-plane, represented here as (r, theta) pairs with theta the polar angle
measured from the +z axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

#: tolerance for state invariants (norms, Hermiticity, trace)
STATE_TOL = 1e-12
#: tolerance on |p_y| for xz-plane membership; rotation pipelines
#: accumulate ~1e-14, so this leaves headroom
PLANE_TOL = 1e-9

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULIS = (PAULI_X, PAULI_Y, PAULI_Z)
IDENTITY2 = np.eye(2, dtype=complex)


@dataclass(frozen=True)
class BlochVector:
    """Polarization vector of a qubit state; the norm may not exceed 1."""

    px: float
    py: float
    pz: float

    def __post_init__(self) -> None:
        if self.norm > 1.0 + STATE_TOL:
            raise ValueError(
                f"Bloch vector norm {self.norm!r} exceeds 1: unphysical state"
            )

    @property
    def norm(self) -> float:
        return math.sqrt(self.px * self.px + self.py * self.py + self.pz * self.pz)

    def unit(self) -> np.ndarray:
        """Direction p/|p|. Undefined at the maximally mixed center."""
        n = self.norm
        if n == 0.0:
            raise ValueError("direction undefined for the zero Bloch vector")
        return self.as_array() / n

    def as_array(self) -> np.ndarray:
        return np.array([self.px, self.py, self.pz])

    @classmethod
    def from_array(cls, v) -> "BlochVector":
        v = np.asarray(v, dtype=float)
        if v.shape != (3,):
            raise ValueError(f"expected a 3-vector, got shape {v.shape}")
        return cls(float(v[0]), float(v[1]), float(v[2]))


@dataclass(frozen=True)
class SphericalState:
    """Bloch vector in spherical coordinates (p, theta, phi).

    p is the radial length in [0, 1], theta the polar angle from +z in
    [0, pi] and phi the azimuthal angle in [0, 2*pi).
    """

    p: float
    theta: float
    phi: float

    def __post_init__(self) -> None:
        if not -STATE_TOL <= self.p <= 1.0 + STATE_TOL:
            raise ValueError(f"radial length {self.p!r} outside [0, 1]")

    def to_bloch(self) -> BlochVector:
        st = math.sin(self.theta)
        return BlochVector(
            self.p * st * math.cos(self.phi),
            self.p * st * math.sin(self.phi),
            self.p * math.cos(self.theta),
        )

    @classmethod
    def from_bloch(cls, v: BlochVector) -> "SphericalState":
        p = v.norm
        if p == 0.0:
            return cls(0.0, 0.0, 0.0)
        theta = math.acos(min(1.0, max(-1.0, v.pz / p)))
        phi = math.atan2(v.py, v.px) % (2.0 * math.pi)
        return cls(p, theta, phi)


@dataclass(frozen=True)
class PlanarState:
    """State in the xz-plane: (r, theta) with x = r sin(theta), z = r cos(theta).

    Equivalent to a SphericalState with phi = 0; theta is canonically in
    [0, pi] for physical states but any real angle is accepted.
    """

    r: float
    theta: float

    def __post_init__(self) -> None:
        if not -STATE_TOL <= self.r <= 1.0 + STATE_TOL:
            raise ValueError(f"radial length {self.r!r} outside [0, 1]")

    def to_bloch(self) -> BlochVector:
        return BlochVector(
            self.r * math.sin(self.theta), 0.0, self.r * math.cos(self.theta)
        )

    def to_xz(self) -> tuple[float, float]:
        """Cartesian coordinates (x, z) in the plane."""
        return self.r * math.sin(self.theta), self.r * math.cos(self.theta)

    @classmethod
    def from_xz(cls, x: float, z: float) -> "PlanarState":
        return cls(math.hypot(x, z), math.atan2(x, z))


@dataclass(frozen=True)
class DensityMatrix:
    """2x2 density operator: Hermitian, unit trace, positive semidefinite."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > STATE_TOL:
            raise ValueError("density matrix is not Hermitian")
        if abs(np.trace(m).real - 1.0) > STATE_TOL or abs(np.trace(m).imag) > STATE_TOL:
            raise ValueError("density matrix trace differs from 1")
        if np.linalg.eigvalsh(m).min() < -STATE_TOL:
            raise ValueError("density matrix has a negative eigenvalue")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def purity(self) -> float:
        """tr(rho^2); equals (1 + |p|^2)/2 and is 1 exactly for pure states."""
        return float(np.real(np.trace(self.matrix @ self.matrix)))


def bloch_to_density(p: BlochVector) -> DensityMatrix:
    """Density operator (I + p . sigma)/2 of a Bloch vector.

    Rejects vectors with norm beyond 1 (enforced by BlochVector itself).
    """
    m = IDENTITY2.copy()
    for component, pauli in zip((p.px, p.py, p.pz), PAULIS):
        m += component * pauli
    return DensityMatrix(m / 2.0)


def density_to_bloch(rho: DensityMatrix) -> BlochVector:
    """Polarization components p_i = tr(rho sigma_i)."""
    m = rho.matrix
    return BlochVector(
        float(np.real(np.trace(m @ PAULI_X))),
        float(np.real(np.trace(m @ PAULI_Y))),
        float(np.real(np.trace(m @ PAULI_Z))),
    )


def to_planar(p: BlochVector) -> PlanarState:
    """Read a Bloch vector already in the xz-plane as a PlanarState.

    The polar angle is measured from +z (atan2-style), so theta lands in
    [0, pi] whenever px >= 0. Vectors with |p_y| above the plane tolerance
    are rejected; reduce them with the rotations module first.
    """
    if abs(p.py) > PLANE_TOL:
        raise ValueError(
            f"|p_y| = {abs(p.py)!r} exceeds plane tolerance {PLANE_TOL}; "
            "rotate the state into the xz-plane first"
        )
    return PlanarState(p.norm, math.atan2(p.px, p.pz))
