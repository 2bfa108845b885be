"""Comparative analyses of the four metrics.

Distance-based relative ranking of point pairs is not preserved across
metrics, even topologically equivalent ones: a pair that is closer than
another under the Euclidean metric can be farther under the taxicab
metric, and the same happens between the Bures and Sjoqvist metrics.
This module reproduces those violations, searches for new ones with a
seeded generator, groups equidistant pairs, maps the ratio of the two
quantum fidelities over the (r, theta) parameter rectangle, and checks
the pointwise identity between the (rescaled) Bures line element and the
spatial part of the closed Robertson-Walker cosmological metric.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .distances import (
    BURES_MAX,
    SJOQVIST_MAX,
    _bures_length,
    _sjoqvist_length,
    compute_distance,
)
from .metrics import MetricKind, line_element_hyperspherical
from .states import PlanarState

#: distances closer than this are considered tied (non-rankable)
TIE_TOL = 1e-12
#: fidelity-ratio cells with denominator below this are reported as undefined
RATIO_MIN_FIDELITY = 1e-15

PlanarPair = tuple[PlanarState, PlanarState]


@dataclass(frozen=True)
class RankingCase:
    """Two point pairs compared under two metrics.

    `violated` is true iff the strict distance ordering of the pairs under
    the first metric is reversed under the second (ties under either
    metric never count as a violation).
    """

    pair1: PlanarPair
    pair2: PlanarPair
    metric_a: MetricKind
    metric_b: MetricKind
    d_first_metric: tuple[float, float]
    d_second_metric: tuple[float, float]
    violated: bool


def _order_sign(d1: float, d2: float, tol: float = TIE_TOL) -> int:
    if abs(d1 - d2) <= tol:
        return 0
    return 1 if d1 > d2 else -1


def check_ranking(
    pair1: PlanarPair,
    pair2: PlanarPair,
    metric_a: MetricKind,
    metric_b: MetricKind,
) -> RankingCase:
    """Compare the ordering of two pairs under two metrics."""
    da = tuple(compute_distance(metric_a, *pair).value for pair in (pair1, pair2))
    db = tuple(compute_distance(metric_b, *pair).value for pair in (pair1, pair2))
    sign_a = _order_sign(*da)
    sign_b = _order_sign(*db)
    return RankingCase(
        pair1=pair1,
        pair2=pair2,
        metric_a=metric_a,
        metric_b=metric_b,
        d_first_metric=da,
        d_second_metric=db,
        violated=sign_a * sign_b == -1,
    )


def find_ranking_violations(
    seed: int,
    n_trials: int,
    metric_a: MetricKind,
    metric_b: MetricKind,
    max_found: int | None = None,
) -> list[RankingCase]:
    """Seeded random search for ranking violations between two metrics.

    Each trial draws two independent pairs of planar states with r in
    (0, 1] and theta in [0, pi] and keeps the trial if the orderings
    disagree. The same seed always reproduces the same list.
    """
    if n_trials < 1:
        raise ValueError("n_trials must be positive")
    rng = np.random.default_rng(seed)
    found: list[RankingCase] = []
    for _ in range(n_trials):
        r = 1.0 - rng.random(4)  # in (0, 1]
        th = rng.uniform(0.0, math.pi, 4)
        pair1 = (PlanarState(r[0], th[0]), PlanarState(r[1], th[1]))
        pair2 = (PlanarState(r[2], th[2]), PlanarState(r[3], th[3]))
        case = check_ranking(pair1, pair2, metric_a, metric_b)
        if case.violated:
            found.append(case)
            if max_found is not None and len(found) >= max_found:
                break
    return found


@dataclass(frozen=True)
class EquidistanceReport:
    """Distances of a list of pairs under one metric, with tie groups.

    groups lists the indices of pairs whose distances agree within the tie
    tolerance; every pair appears in exactly one group.
    """

    kind: MetricKind
    distances: tuple[float, ...]
    groups: tuple[tuple[int, ...], ...]


def equidistance_check(
    pairs: Sequence[PlanarPair], kind: MetricKind, tol: float = TIE_TOL
) -> EquidistanceReport:
    """Group pairs of states that sit at the same distance from each other."""
    distances = [compute_distance(kind, *pair).value for pair in pairs]
    order = sorted(range(len(distances)), key=lambda i: distances[i])
    groups: list[tuple[int, ...]] = []
    current: list[int] = []
    for idx in order:
        if current and abs(distances[idx] - distances[current[-1]]) > tol:
            groups.append(tuple(current))
            current = []
        current.append(idx)
    if current:
        groups.append(tuple(current))
    return EquidistanceReport(
        kind=kind, distances=tuple(distances), groups=tuple(groups)
    )


# ---------------------------------------------------------------------------
# fidelity ratio over the parameter rectangle
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FidelityRatioField:
    """Ratio of Sjoqvist to Bures fidelity against a fixed source state.

    The fidelities are F = [1 - L^2/L_max^2]^2 with L_max = sqrt(2) for
    Bures and pi/2 for Sjoqvist. `ratio` is sampled at the cell midpoints
    of a regular grid on [0, 1] x [0, pi]; cells whose Bures fidelity
    vanishes (below RATIO_MIN_FIDELITY) hold NaN and are counted in
    n_undefined. `area_fraction` is the fraction of defined cells with
    0 <= ratio <= 1, i.e. the uniform (r, theta)-measure of the region
    where the Bures fidelity dominates.
    """

    source: PlanarState
    r: np.ndarray
    theta: np.ndarray
    ratio: np.ndarray
    area_fraction: float
    n_undefined: int


def fidelity_ratio_field(
    source: PlanarState, grid_nr: int = 512, grid_ntheta: int = 512
) -> FidelityRatioField:
    """Midpoint-rule map of the fidelity ratio over (r, theta).

    The ratio is 1 at the source itself (both fidelities are 1) and the
    region with ratio <= 1 covers well over half of the rectangle for
    generic mixed sources.
    """
    if grid_nr < 2 or grid_ntheta < 2:
        raise ValueError("grid must have at least 2 cells per axis")
    r = (np.arange(grid_nr) + 0.5) / grid_nr
    theta = (np.arange(grid_ntheta) + 0.5) * math.pi / grid_ntheta
    grid_r, grid_theta = np.meshgrid(r, theta, indexing="ij")
    lb = _bures_length(source.r, source.theta, grid_r, grid_theta)
    ls = _sjoqvist_length(source.r, source.theta, grid_r, grid_theta)
    f_bures = (1.0 - lb * lb / BURES_MAX**2) ** 2
    f_sjoqvist = (1.0 - ls * ls / SJOQVIST_MAX**2) ** 2
    defined = f_bures >= RATIO_MIN_FIDELITY
    ratio = np.where(defined, f_sjoqvist / np.where(defined, f_bures, 1.0), np.nan)
    in_region = defined & (ratio >= 0.0) & (ratio <= 1.0)
    n_defined = int(defined.sum())
    if n_defined == 0:
        raise ValueError("fidelity ratio undefined on the whole grid")
    return FidelityRatioField(
        source=source,
        r=r,
        theta=theta,
        ratio=ratio,
        area_fraction=float(in_region.sum()) / n_defined,
        n_undefined=int(grid_nr * grid_ntheta - n_defined),
    )


# ---------------------------------------------------------------------------
# Robertson-Walker spatial equivalence
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RWParams:
    """Point of the Robertson-Walker spatial section in hyperspherical angles.

    The equivalence with the (rescaled) Bures metric holds for the closed
    case k = +1 with unit scale factor; other curvature tags parameterize
    the general line element only.
    """

    chi: float
    theta: float
    phi: float
    k: int = 1
    scale_factor: float = 1.0

    def __post_init__(self) -> None:
        if self.k not in (-1, 0, 1):
            raise ValueError(f"spatial curvature tag must be -1, 0 or +1, got {self.k!r}")


def rw_spatial_line_element(
    params: RWParams, dchi: float, dtheta: float, dphi: float
) -> float:
    """Spatial line element R^2 [dr^2/(1 - k r^2) + r^2 dOmega^2], r = sin(chi).

    Evaluated exactly as written, with dr = cos(chi) dchi substituted;
    no trigonometric simplification is applied, so this is an independent
    numerical route from the hyperspherical quantum line elements.
    """
    if not 0.0 < params.chi <= math.pi / 2.0:
        raise ValueError(f"hyperspherical angle {params.chi!r} outside (0, pi/2]")
    r = math.sin(params.chi)
    dr = math.cos(params.chi) * dchi
    angular = dtheta * dtheta + math.sin(params.theta) ** 2 * dphi * dphi
    radial = dr * dr / (1.0 - params.k * r * r)
    return params.scale_factor**2 * (radial + r * r * angular)


def rw_spatial_equivalence(samples: Iterable[tuple]) -> float:
    """Max relative gap between the closed RW spatial metric and 4*ds^2_Bures.

    Each sample is (chi, theta, phi, dchi, dtheta, dphi). Both routes are
    evaluated independently: the RW form through r = sin(chi) with k = +1
    and unit scale factor, the quantum form in its hyperspherical chart.
    """
    worst = 0.0
    for chi, theta, phi, dchi, dtheta, dphi in samples:
        rw = rw_spatial_line_element(RWParams(chi, theta, phi), dchi, dtheta, dphi)
        bures = line_element_hyperspherical(
            MetricKind.BURES, chi, theta, dchi, dtheta, dphi
        )
        scale = max(abs(rw), abs(bures))
        if scale == 0.0:
            continue
        worst = max(worst, abs(rw - bures) / scale)
    return worst


def rw_sample_displacements(seed: int, n: int) -> list[tuple]:
    """Seeded (chi, theta, phi, dchi, dtheta, dphi) samples for the check.

    chi is kept a little away from pi/2: at r = 1 the printed RW radial
    term is the indeterminate 0/0 in floating point (dr -> 0 while
    1 - r^2 -> 0), so the boundary itself cannot be checked through that
    route. Displacement norms are 1e-3.
    """
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        chi = rng.uniform(0.01, math.pi / 2.0 - 0.01)
        theta = rng.uniform(0.0, math.pi)
        phi = rng.uniform(0.0, 2.0 * math.pi)
        d = rng.normal(size=3)
        d *= 1e-3 / np.linalg.norm(d)
        out.append((chi, theta, phi, d[0], d[1], d[2]))
    return out
