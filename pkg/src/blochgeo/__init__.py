"""Geometry of single-qubit mixed states inside the Bloch ball.

Two Riemannian metrics on the interior of the Bloch sphere are implemented
side by side: the fidelity-based Bures metric and the interferometric
Sjoqvist metric. The package provides their line elements in several
coordinate systems, closed-form geodesics with an independent Runge-Kutta
cross-check, finite distances (together with the classical Euclidean and
taxicab plane metrics used for ranking comparisons), the rotation pipeline
that reduces arbitrary state pairs to the xz-plane, and comparative
analyses such as distance-ranking violations and fidelity-ratio maps.
"""

from .states import (
    BlochVector,
    DensityMatrix,
    PlanarState,
    SphericalState,
    bloch_to_density,
    density_to_bloch,
    to_planar,
)
from .metrics import (
    EmbeddedPoint4,
    MetricKind,
    TangentDisplacement,
    embed_extrinsic,
    embedding_trajectory,
    line_element_cartesian,
    line_element_hyperspherical,
    line_element_spherical,
    planar_embedding_trajectory,
    sjoqvist_weights,
)
from .geodesics import (
    BuresGeodesicParams,
    GeodesicCurve,
    GreatCircle,
    SjoqvistGeodesicParams,
    bures_geodesic_ivp,
    bures_great_circle,
    geodesic_oracle,
    sample_geodesic,
    sjoqvist_geodesic_bvp,
    sjoqvist_geodesic_ivp,
)
from .distances import (
    DistanceReport,
    bures_distance,
    bures_distance_general,
    compute_distance,
    euclid_distance,
    fidelity,
    fidelity_general,
    sjoqvist_distance,
    taxicab_distance,
)
from .rotations import (
    PlaneReduction,
    RotationMatrix3,
    SU2Matrix,
    reduce_to_xz_plane,
    rotate_state,
    so3_from_axis_angle,
    so3_from_su2,
    su2_from_axis_angle,
)
from .analysis import (
    FidelityRatioField,
    RankingCase,
    check_ranking,
    equidistance_check,
    fidelity_ratio_field,
    find_ranking_violations,
    rw_spatial_equivalence,
)

__version__ = "0.1.0"
