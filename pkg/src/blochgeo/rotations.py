"""Rotations of Bloch vectors and the reduction of state pairs to the xz-plane.

An SU(2) element U(alpha, n) = exp(-i alpha/2 n . sigma) acts on density
matrices by conjugation; the matching SO(3) rotation acting on Bloch
vectors is recovered entrywise from R_ij = tr(sigma_i U sigma_j U^dag)/2,
and equals the familiar axis-angle (Rodrigues) matrix. U and -U give the
same rotation (double cover).

Both quantum distances are rotation invariant, so any pair of Bloch
vectors can be carried into the xz-plane without changing their distance:
first rotate about the normalized p1 x z axis by the polar angle of p1
(sending p1 onto the +z axis), then rotate about z so that the image of
p2 loses its y-component. The closed-form planar distances then apply.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .states import (
    BlochVector,
    DensityMatrix,
    PAULIS,
    PlanarState,
    STATE_TOL,
)

#: |p1 x z| below this means p1 is already on the z-axis: step 1 is skipped
DEGENERATE_AXIS_TOL = 1e-12
UNIT_AXIS_TOL = 1e-10
Z_AXIS = np.array([0.0, 0.0, 1.0])


@dataclass(frozen=True)
class SU2Matrix:
    """2x2 special unitary matrix."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
        if np.max(np.abs(m @ m.conj().T - np.eye(2))) > STATE_TOL:
            raise ValueError("matrix is not unitary")
        if abs(np.linalg.det(m) - 1.0) > STATE_TOL:
            raise ValueError("matrix determinant differs from 1")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)


@dataclass(frozen=True)
class RotationMatrix3:
    """3x3 proper orthogonal matrix."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=float)
        if m.shape != (3, 3):
            raise ValueError(f"expected a 3x3 matrix, got shape {m.shape}")
        if np.max(np.abs(m.T @ m - np.eye(3))) > STATE_TOL:
            raise ValueError("matrix is not orthogonal")
        if abs(np.linalg.det(m) - 1.0) > STATE_TOL:
            raise ValueError("matrix is not a proper rotation (det != 1)")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @classmethod
    def identity(cls) -> "RotationMatrix3":
        return cls(np.eye(3))


def su2_from_axis_angle(alpha: float, n_hat) -> SU2Matrix:
    """Counterclockwise SU(2) rotation by alpha about the unit axis n_hat.

    exp(-i alpha/2 n . sigma): alpha = 2*pi returns -I, the spinor sign.
    """
    n = np.asarray(n_hat, dtype=float)
    if abs(np.linalg.norm(n) - 1.0) > UNIT_AXIS_TOL:
        raise ValueError(f"rotation axis must be a unit vector, |n| = {np.linalg.norm(n)!r}")
    c, s = math.cos(alpha / 2.0), math.sin(alpha / 2.0)
    nx, ny, nz = n
    return SU2Matrix(
        np.array(
            [
                [c - 1.0j * s * nz, -1.0j * s * (nx - 1.0j * ny)],
                [-1.0j * s * (nx + 1.0j * ny), c + 1.0j * s * nz],
            ]
        )
    )


def so3_from_su2(u: SU2Matrix) -> RotationMatrix3:
    """SO(3) rotation of the SU(2) element: R_ij = tr(sigma_i U sigma_j U^dag)/2."""
    m = u.matrix
    md = m.conj().T
    r = np.empty((3, 3))
    for i, si in enumerate(PAULIS):
        for j, sj in enumerate(PAULIS):
            r[i, j] = 0.5 * float(np.real(np.trace(si @ m @ sj @ md)))
    return RotationMatrix3(r)


def so3_from_axis_angle(alpha: float, n_hat) -> RotationMatrix3:
    """Axis-angle rotation matrix, written out entrywise (Rodrigues form)."""
    n = np.asarray(n_hat, dtype=float)
    if abs(np.linalg.norm(n) - 1.0) > UNIT_AXIS_TOL:
        raise ValueError(f"rotation axis must be a unit vector, |n| = {np.linalg.norm(n)!r}")
    c, s = math.cos(alpha), math.sin(alpha)
    nx, ny, nz = n
    k = 1.0 - c
    return RotationMatrix3(
        np.array(
            [
                [c + nx * nx * k, nx * ny * k - nz * s, nx * nz * k + ny * s],
                [ny * nx * k + nz * s, c + ny * ny * k, ny * nz * k - nx * s],
                [nz * nx * k - ny * s, nz * ny * k + nx * s, c + nz * nz * k],
            ]
        )
    )


def rotate_state(rotation, state):
    """Apply a rotation to a state, in either representation.

    RotationMatrix3 acts on a BlochVector by matrix action; SU2Matrix acts
    on a DensityMatrix by conjugation. The two paths describe the same map
    when the rotations correspond under so3_from_su2.
    """
    if isinstance(rotation, RotationMatrix3) and isinstance(state, BlochVector):
        return BlochVector.from_array(rotation.matrix @ state.as_array())
    if isinstance(rotation, SU2Matrix) and isinstance(state, DensityMatrix):
        u = rotation.matrix
        return DensityMatrix(u @ state.matrix @ u.conj().T)
    raise TypeError(
        "expected (RotationMatrix3, BlochVector) or (SU2Matrix, DensityMatrix), "
        f"got ({type(rotation).__name__}, {type(state).__name__})"
    )


@dataclass(frozen=True)
class PlaneReduction:
    """Result of carrying a pair of Bloch vectors into the xz-plane.

    `rotation` is the composition of the two rotation steps. `reflected`
    records whether a final x -> -x reflection was applied to place the
    second vector at a polar angle in [0, pi]; the reflection is an
    isometry of both planar metrics (they see theta only through dtheta^2
    or cos(theta_a - theta_b)), so distances are unaffected.
    """

    rotation: RotationMatrix3
    p1_new: BlochVector
    p2_new: BlochVector
    theta2_prime: float
    phi2_prime: float
    reflected: bool = False

    def __post_init__(self) -> None:
        for name, vec in (("p1_new", self.p1_new), ("p2_new", self.p2_new)):
            if abs(vec.py) > 1e-10:
                raise ValueError(f"{name} is not in the xz-plane: p_y = {vec.py!r}")

    def planar_states(self) -> tuple[PlanarState, PlanarState]:
        """The reduced pair as (r, theta) plane states."""
        p1, p2 = self.p1_new, self.p2_new
        return (
            PlanarState(p1.norm, math.atan2(p1.px, p1.pz)),
            PlanarState(p2.norm, math.atan2(p2.px, p2.pz)),
        )


def reduce_to_xz_plane(p1: BlochVector, p2: BlochVector) -> PlaneReduction:
    """Rotate a pair of Bloch vectors into the xz-plane, preserving distances.

    Step 1 rotates about (p1 x z)/|p1 x z| by the polar angle of p1,
    sending p1 to |p1| z; when p1 is already on the z-axis (or zero) the
    step is the identity. Step 2 rotates about z by the azimuth of the
    intermediate image of p2, clearing its y-component; the azimuth is the
    sign-corrected arccos of x/sqrt(x^2 + y^2), taken as 0 when y = 0. If
    the final second vector lands at negative x (possible only in the
    degenerate y = 0 case) it is reflected to the x >= 0 half-plane.
    """
    v1 = p1.as_array()
    v2 = p2.as_array()

    axis = np.cross(v1, Z_AXIS)
    axis_norm = float(np.linalg.norm(axis))
    if axis_norm < DEGENERATE_AXIS_TOL:
        step1 = RotationMatrix3.identity()
    else:
        theta1 = math.atan2(math.hypot(v1[0], v1[1]), v1[2])
        step1 = so3_from_axis_angle(theta1, axis / axis_norm)
    w1 = step1.matrix @ v1
    w2 = step1.matrix @ v2

    x, y = w2[0], w2[1]
    rho = math.hypot(x, y)
    if rho < DEGENERATE_AXIS_TOL:
        phi2 = 0.0
        step2 = RotationMatrix3.identity()
    else:
        phi2 = math.copysign(1.0, y) * math.acos(x / rho) if y != 0.0 else 0.0
        step2 = so3_from_axis_angle(-phi2, Z_AXIS)

    f1 = step2.matrix @ w1
    f2 = step2.matrix @ w2
    reflected = f2[0] < 0.0
    if reflected:
        f2 = f2 * np.array([-1.0, 1.0, 1.0])
        f1 = f1 * np.array([-1.0, 1.0, 1.0])

    r2 = float(np.linalg.norm(w2))
    theta2 = math.acos(min(1.0, max(-1.0, w2[2] / r2))) if r2 > 0.0 else 0.0

    return PlaneReduction(
        rotation=RotationMatrix3(step2.matrix @ step1.matrix),
        p1_new=BlochVector.from_array(f1),
        p2_new=BlochVector.from_array(f2),
        theta2_prime=theta2,
        phi2_prime=phi2,
        reflected=bool(reflected),
    )
