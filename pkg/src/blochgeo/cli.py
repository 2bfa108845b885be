"""Command-line interface.

Subcommands: distance, geodesic, contour, fig2, ranking, verify. All
angles are radians. Exit codes: 0 success, 1 verification failure,
2 usage or domain error, 3 tolerance breach.

For the distance subcommand the angular separation of (r, theta) inputs
is canonicalized to [0, pi] (the shorter angular route) before the
formulas are applied; pass --no-wrap to keep theta_b - theta_a exactly as
given. Three-vector inputs are first carried into the xz-plane by the
rotation pipeline, which lands the separation in [0, pi] by construction.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import __version__
from .analysis import find_ranking_violations
from .distances import _bures_length, _sjoqvist_length, compute_distance
from .export import ExportRecord, format_float
from .geodesics import (
    geodesic_oracle,
    oracle_window,
    sample_geodesic,
)
from .metrics import MetricKind
from .rotations import reduce_to_xz_plane
from .states import BlochVector, PlanarState
from .verify import run_suite

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_TOLERANCE = 3


def _parse_planar(text: str) -> PlanarState:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'r,theta', got {text!r}")
    return PlanarState(float(parts[0]), float(parts[1]))


def _parse_vec3(text: str) -> BlochVector:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected 'px,py,pz', got {text!r}")
    return BlochVector(float(parts[0]), float(parts[1]), float(parts[2]))


def _parse_range(text: str) -> tuple[float, float]:
    parts = text.split(":")
    if len(parts) != 2:
        raise ValueError(f"expected 'start:end', got {text!r}")
    return float(parts[0]), float(parts[1])


def _metric(name: str) -> MetricKind:
    return MetricKind(name)


def _wrap_to_halfturn(a: PlanarState, b: PlanarState) -> tuple[PlanarState, PlanarState]:
    """Re-express the pair with angular separation in [0, pi]."""
    delta = abs(b.theta - a.theta) % (2.0 * math.pi)
    delta = min(delta, 2.0 * math.pi - delta)
    return PlanarState(a.r, 0.0), PlanarState(b.r, delta)


# ---------------------------------------------------------------------------
# distance
# ---------------------------------------------------------------------------

def cmd_distance(args: argparse.Namespace) -> int:
    kind = _metric(args.metric)
    reduction = None
    if args.a3 is not None or args.b3 is not None:
        if args.a3 is None or args.b3 is None or args.a or args.b:
            raise ValueError("give either --a/--b or --a3/--b3, not a mixture")
        reduction = reduce_to_xz_plane(_parse_vec3(args.a3), _parse_vec3(args.b3))
        a, b = reduction.planar_states()
    else:
        if args.a is None or args.b is None:
            raise ValueError("two states are required (--a/--b or --a3/--b3)")
        a, b = _parse_planar(args.a), _parse_planar(args.b)
        if not args.no_wrap:
            a, b = _wrap_to_halfturn(a, b)
    report = compute_distance(kind, a, b)
    print(f"metric: {kind.value}")
    print(f"a: r={format_float(a.r)} theta={format_float(a.theta)}")
    print(f"b: r={format_float(b.r)} theta={format_float(b.theta)}")
    if reduction is not None:
        print(
            "reduction: theta2_prime="
            f"{format_float(reduction.theta2_prime)} "
            f"phi2_prime={format_float(reduction.phi2_prime)} "
            f"reflected={str(reduction.reflected).lower()}"
        )
    print(f"distance: {format_float(report.value)}")
    print(f"formula: {report.formula_id}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# geodesic
# ---------------------------------------------------------------------------

def cmd_geodesic(args: argparse.Namespace) -> int:
    theta_a, theta_end = _parse_range(args.theta)
    if theta_end == theta_a:
        raise ValueError("empty theta range")
    kinds = (
        [MetricKind.BURES, MetricKind.SJOQVIST]
        if args.metric == "both"
        else [_metric(args.metric)]
    )
    columns = ["metric", "theta", "r", "arc_length"]
    rows: list[list] = []
    metadata = {
        "command": "geodesic",
        "version": __version__,
        "ra": args.ra,
        "ra_prime": args.ra_prime,
        "theta_range": [theta_a, theta_end],
        "n_samples": args.n,
    }
    worst = 0.0
    for kind in kinds:
        curve = sample_geodesic(kind, args.ra, args.ra_prime, theta_a, theta_end, args.n)
        for theta, r, arc in zip(curve.thetas, curve.r, curve.arc_length):
            rows.append([kind.value, float(theta), float(r), float(arc)])
        if curve.reaches_turning_point:
            print(f"note: {kind.value} curve passes a radial turning point", file=sys.stderr)
        if args.verify:
            # the variational equation is singular at r in {0, 1}; compare
            # on the largest window keeping the curve inside [0.01, 0.99]
            span = abs(theta_end - theta_a)
            window = oracle_window(kind, args.ra, args.ra_prime, theta_a, max_span=span)
            result = geodesic_oracle(kind, args.ra, args.ra_prime, theta_a, window)
            worst = max(worst, result.max_deviation)
            metadata[f"oracle_deviation_{kind.value}"] = result.max_deviation
            metadata[f"oracle_window_{kind.value}"] = [theta_a, window]
            print(
                f"oracle[{kind.value}]: max deviation "
                f"{format_float(result.max_deviation)} on theta in "
                f"[{format_float(theta_a)}, {format_float(window)}]"
            )
    record = ExportRecord(columns=columns, rows=rows, metadata=metadata)
    record.write(args.out, fmt=args.format)
    print(f"wrote {len(rows)} samples to {args.out}")
    if args.verify and worst > args.tol:
        print(
            f"error: oracle deviation {format_float(worst)} exceeds --tol "
            f"{format_float(args.tol)}",
            file=sys.stderr,
        )
        return EXIT_TOLERANCE
    return EXIT_OK


# ---------------------------------------------------------------------------
# contour
# ---------------------------------------------------------------------------

def cmd_contour(args: argparse.Namespace) -> int:
    source = _parse_planar(args.source)
    kinds = (
        [MetricKind.EUCLID, MetricKind.TAXICAB, MetricKind.BURES, MetricKind.SJOQVIST]
        if args.metric == "all"
        else [_metric(args.metric)]
    )
    r = np.linspace(0.0, 1.0, args.nr)
    theta = np.linspace(0.0, math.pi, args.ntheta)
    grid_r, grid_theta = np.meshgrid(r, theta, indexing="ij")
    sx, sz = source.to_xz()
    gx = grid_r * np.sin(grid_theta)
    gz = grid_r * np.cos(grid_theta)
    fields = {}
    for kind in kinds:
        if kind is MetricKind.EUCLID:
            fields[kind] = np.hypot(gx - sx, gz - sz)
        elif kind is MetricKind.TAXICAB:
            fields[kind] = np.abs(gx - sx) + np.abs(gz - sz)
        elif kind is MetricKind.BURES:
            fields[kind] = _bures_length(source.r, source.theta, grid_r, grid_theta)
        else:
            value = _sjoqvist_length(source.r, source.theta, grid_r, grid_theta)
            fields[kind] = np.where(grid_r < 1e-12, np.nan, value)
    columns = ["r", "theta"] + [kind.value for kind in kinds]
    rows = []
    for i in range(args.nr):
        for j in range(args.ntheta):
            row: list = [float(r[i]), float(theta[j])]
            for kind in kinds:
                cell = float(fields[kind][i, j])
                row.append(None if math.isnan(cell) else cell)
            rows.append(row)
    metadata = {
        "command": "contour",
        "version": __version__,
        "source": [source.r, source.theta],
        "grid": [args.nr, args.ntheta],
        "note": "sjoqvist is undefined at r = 0; those cells are empty",
    }
    ExportRecord(columns=columns, rows=rows, metadata=metadata).write(args.out, fmt=args.format)
    print(f"wrote {len(rows)} grid cells to {args.out}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# fig2-style distance comparison
# ---------------------------------------------------------------------------

def cmd_fig2(args: argparse.Namespace) -> int:
    r_values = [float(v) for v in args.r_values.split(",")]
    for r in r_values:
        if not 0.0 < r <= 1.0:
            raise ValueError(f"radius {r!r} outside (0, 1]")
    dtheta = np.linspace(0.0, math.pi, args.n)
    columns = ["dtheta"] + [f"bures_r={format_float(r)}" for r in r_values] + ["sjoqvist"]
    sjoq = _sjoqvist_length(r_values[0], 0.0, r_values[0], dtheta)
    bures_columns = [_bures_length(r, 0.0, r, dtheta) for r in r_values]
    rows = []
    breach = None
    for i, dth in enumerate(dtheta):
        row = [float(dth)] + [float(col[i]) for col in bures_columns] + [float(sjoq[i])]
        rows.append(row)
        for col in bures_columns:
            if not (
                -1e-12 <= col[i] <= sjoq[i] + 1e-12
                and sjoq[i] <= math.pi / 2.0 + 1e-12
            ):
                breach = (float(dth), float(col[i]), float(sjoq[i]))
    metadata = {
        "command": "fig2",
        "version": __version__,
        "r_values": r_values,
        "n_samples": args.n,
        "note": "sjoqvist column is radius-independent: dtheta/2",
    }
    ExportRecord(columns=columns, rows=rows, metadata=metadata).write(args.out, fmt=args.format)
    print(f"wrote {len(rows)} rows to {args.out}")
    if breach is not None:
        print(
            f"error: ordering 0 <= bures <= sjoqvist <= pi/2 failed at "
            f"dtheta={breach[0]}: bures={breach[1]}, sjoqvist={breach[2]}",
            file=sys.stderr,
        )
        return EXIT_TOLERANCE
    return EXIT_OK


# ---------------------------------------------------------------------------
# ranking search
# ---------------------------------------------------------------------------

def cmd_ranking(args: argparse.Namespace) -> int:
    metric_a, metric_b = _metric(args.metric_a), _metric(args.metric_b)
    cases = find_ranking_violations(
        args.seed, args.trials, metric_a, metric_b, max_found=args.max_found
    )
    print(
        f"{len(cases)} ranking violations in {args.trials} trials "
        f"({metric_a.value} vs {metric_b.value}, seed {args.seed})"
    )
    for case in cases[:5]:
        p1, p2 = case.pair1
        q1, q2 = case.pair2
        print(
            f"  pair1 ({format_float(p1.r)},{format_float(p1.theta)})-"
            f"({format_float(p2.r)},{format_float(p2.theta)}) "
            f"d=({format_float(case.d_first_metric[0])}, {format_float(case.d_second_metric[0])})  "
            f"pair2 ({format_float(q1.r)},{format_float(q1.theta)})-"
            f"({format_float(q2.r)},{format_float(q2.theta)}) "
            f"d=({format_float(case.d_first_metric[1])}, {format_float(case.d_second_metric[1])})"
        )
    if args.out:
        columns = [
            "pair1_ra", "pair1_ta", "pair1_rb", "pair1_tb",
            "pair2_ra", "pair2_ta", "pair2_rb", "pair2_tb",
            f"d_{metric_a.value}_pair1", f"d_{metric_a.value}_pair2",
            f"d_{metric_b.value}_pair1", f"d_{metric_b.value}_pair2",
        ]
        rows = []
        for case in cases:
            (p1, p2), (q1, q2) = case.pair1, case.pair2
            rows.append(
                [p1.r, p1.theta, p2.r, p2.theta, q1.r, q1.theta, q2.r, q2.theta]
                + list(case.d_first_metric)
                + list(case.d_second_metric)
            )
        metadata = {
            "command": "ranking",
            "version": __version__,
            "seed": args.seed,
            "trials": args.trials,
            "metric_a": metric_a.value,
            "metric_b": metric_b.value,
            "violations": len(cases),
        }
        ExportRecord(columns=columns, rows=rows, metadata=metadata).write(
            args.out, fmt=args.format
        )
        print(f"wrote {len(rows)} violations to {args.out}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args: argparse.Namespace) -> int:
    results = run_suite(args.suite, args.seed, args.trials)
    document = {
        "suite": args.suite,
        "seed": args.seed,
        "version": __version__,
        "passed": all(r.passed for r in results),
        "results": [r.as_dict() for r in results],
    }
    print(json.dumps(document, indent=2, allow_nan=False))
    failed = [r for r in results if not r.passed]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(
            f"{status} {r.name}: observed {r.observed:.3e} vs tolerance {r.tolerance:.3e}",
            file=sys.stderr,
        )
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            json.dump(document, handle, indent=2, allow_nan=False)
            handle.write("\n")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blochgeo",
        description="Distances, geodesics and verification suites for the "
        "Bures and Sjoqvist geometries of the Bloch ball. Angles in radians.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "distance",
        help="distance between two states",
        description="Distance between two states. Planar input (--a/--b) is "
        "canonicalized to an angular separation in [0, pi] unless --no-wrap "
        "is given; 3-vector input (--a3/--b3) is rotated into the xz-plane "
        "first.",
    )
    p.add_argument("--metric", required=True, choices=[k.value for k in MetricKind])
    p.add_argument("--a", help="first state as r,theta")
    p.add_argument("--b", help="second state as r,theta")
    p.add_argument("--a3", help="first state as px,py,pz")
    p.add_argument("--b3", help="second state as px,py,pz")
    p.add_argument(
        "--no-wrap",
        action="store_true",
        help="use theta_b - theta_a exactly as given",
    )
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("geodesic", help="sample a closed-form geodesic to a file")
    p.add_argument("--metric", required=True, choices=["bures", "sjoqvist", "both"])
    p.add_argument("--ra", type=float, required=True, help="initial radius")
    p.add_argument("--ra-prime", type=float, required=True, help="initial dr/dtheta")
    p.add_argument("--theta", required=True, help="range start:end")
    p.add_argument("-n", type=int, default=1000, help="number of samples")
    p.add_argument("--out", required=True, help="output file (.csv or .json)")
    p.add_argument("--format", choices=["csv", "json"], help="override format by extension")
    p.add_argument(
        "--verify",
        action="store_true",
        help="integrate the variational equation and report the deviation",
    )
    p.add_argument("--tol", type=float, default=1e-6, help="max allowed oracle deviation")
    p.set_defaults(func=cmd_geodesic)

    p = sub.add_parser("contour", help="distance field from a fixed source state")
    p.add_argument("--source", required=True, help="source state as r,theta")
    p.add_argument(
        "--metric",
        default="all",
        choices=["all"] + [k.value for k in MetricKind],
    )
    p.add_argument("--nr", type=int, default=101, help="radial grid size")
    p.add_argument("--ntheta", type=int, default=101, help="angular grid size")
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=["csv", "json"])
    p.set_defaults(func=cmd_contour)

    p = sub.add_parser(
        "fig2", help="equal-radius distance comparison over the angular separation"
    )
    p.add_argument(
        "--r-values", default="1,0.95,0.75,0.5", help="comma-separated radii"
    )
    p.add_argument("-n", type=int, default=181, help="number of dtheta samples")
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=["csv", "json"])
    p.set_defaults(func=cmd_fig2)

    p = sub.add_parser("ranking", help="seeded random search for ranking violations")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--metric-a", default="bures", choices=[k.value for k in MetricKind])
    p.add_argument("--metric-b", default="sjoqvist", choices=[k.value for k in MetricKind])
    p.add_argument("--max-found", type=int, help="stop after this many violations")
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv", "json"])
    p.set_defaults(func=cmd_ranking)

    p = sub.add_parser("verify", help="run invariant suites, JSON verdicts on stdout")
    p.add_argument(
        "--suite",
        required=True,
        choices=["metrics", "geodesics", "distances", "rotations", "ranking", "rw", "all"],
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, help="override the per-check sample counts")
    p.add_argument("--out", help="also write the JSON report to this path")
    p.set_defaults(func=cmd_verify)

    return parser


#: flags whose values may start with a minus sign (e.g. "-0.2,0.1,0.4"),
#: which bare argparse would misread as an option
_VALUE_FLAGS = {"--a", "--b", "--a3", "--b3", "--source", "--r-values", "--theta"}


def _join_dashed_values(argv: list[str]) -> list[str]:
    out: list[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            out.append(token)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_join_dashed_values(list(argv)))
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
