"""Command line interface: analyze, transform, selfcheck."""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from .core import Trajectory, detected_frames
from .ingest import TrimSpec, load_landmark_file, save_landmark_file, trim
from .metrics import distance_series, movement_summary, windowed_sd_series
from .selfcheck import run_selfcheck
from .transforms import PlanarTransform, apply_transform, resample_duplicate

SUMMARY_COLUMNS = ("label", "l2_norm", "sigma_combined", "n_frames", "hand_scale", "detection_rate")


@dataclass(frozen=True)
class AnalysisRecord:
    """One summary row per analyzed file."""

    label: str
    l2_norm: float
    sigma_combined: float
    n_frames: int
    hand_scale: float
    detection_rate: float


def _parse_trim(text: str) -> TrimSpec:
    start_s, sep, end_s = text.partition(":")
    if not sep:
        raise ValueError("trim must look like <start>:<end>, e.g. 30:480 or 30: or :480")
    try:
        start = int(start_s) if start_s else None
        end = int(end_s) if end_s else None
    except ValueError:
        raise ValueError(f"trim bounds must be integers, got {text!r}") from None
    return TrimSpec(start_frame=start, end_frame=end)


def _parse_translate(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError("translate must look like <dx>,<dy>")
    return float(parts[0]), float(parts[1])


def _analyze_one(path: str, trim_spec: TrimSpec | None, window: int) -> tuple[AnalysisRecord, Trajectory]:
    traj = load_landmark_file(path)
    if trim_spec is not None:
        traj = trim(traj, trim_spec)
    summary = movement_summary(traj)
    record = AnalysisRecord(
        label=traj.label or Path(path).stem,
        l2_norm=summary.l2_norm,
        sigma_combined=summary.sigma_combined,
        n_frames=summary.n_frames,
        hand_scale=summary.hand_scale.s,
        detection_rate=len(detected_frames(traj)) / len(traj.frames),
    )
    return record, traj


def _series_path(series_out: str, input_path: str, multiple: bool) -> Path:
    out = Path(series_out)
    if multiple or out.is_dir():
        out.mkdir(parents=True, exist_ok=True)
        return out / (Path(input_path).stem + ".series.csv")
    if out.parent and not out.parent.exists():
        out.parent.mkdir(parents=True, exist_ok=True)
    return out


def _write_series(path: Path, traj: Trajectory, window: int) -> None:
    distances = distance_series(traj)
    sigma_by_start = {p.frame_index: p.value for p in windowed_sd_series(traj, window)}
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["frame_index", "distance", "window_sigma"])
        for point in distances:
            sigma = sigma_by_start.get(point.frame_index)
            writer.writerow(
                [point.frame_index, repr(point.value), "" if sigma is None else repr(sigma)]
            )


def _print_records(records: list[AnalysisRecord], fmt: str) -> None:
    if fmt == "table":
        label_width = max([len("label")] + [len(r.label) for r in records])
        print(
            f"{'label':<{label_width}}  {'l2_norm':>8}  {'sigma_combined':>14}  "
            f"{'n_frames':>8}  {'hand_scale':>10}  {'detection_rate':>14}"
        )
        for r in records:
            print(
                f"{r.label:<{label_width}}  {r.l2_norm:>8.4f}  {r.sigma_combined:>14.4f}  "
                f"{r.n_frames:>8d}  {r.hand_scale:>10.2f}  {r.detection_rate:>14.3f}"
            )
    elif fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(SUMMARY_COLUMNS)
        for r in records:
            writer.writerow(
                [
                    r.label,
                    repr(r.l2_norm),
                    repr(r.sigma_combined),
                    r.n_frames,
                    repr(r.hand_scale),
                    repr(r.detection_rate),
                ]
            )
    else:
        print(
            json.dumps(
                [
                    {
                        "label": r.label,
                        "l2_norm": r.l2_norm,
                        "sigma_combined": r.sigma_combined,
                        "n_frames": r.n_frames,
                        "hand_scale": r.hand_scale,
                        "detection_rate": r.detection_rate,
                    }
                    for r in records
                ],
                indent=2,
            )
        )


def cmd_analyze(args) -> int:
    records: list[AnalysisRecord] = []
    failed = False
    multiple = len(args.paths) > 1
    for path in args.paths:
        try:
            record, traj = _analyze_one(path, args.trim, args.window)
            records.append(record)
            if args.series_out:
                _write_series(_series_path(args.series_out, path, multiple), traj, args.window)
        except (OSError, ValueError) as exc:
            print(f"error: {path}: {exc}", file=sys.stderr)
            failed = True
    if records:
        _print_records(records, args.format)
    return 1 if failed else 0


def cmd_transform(args) -> int:
    try:
        traj = load_landmark_file(args.in_path)
    except (OSError, ValueError) as exc:
        print(f"error: {args.in_path}: {exc}", file=sys.stderr)
        return 1
    xf = PlanarTransform(
        theta=math.radians(args.rotate),
        scale=args.scale,
        translate_x=args.translate[0],
        translate_y=args.translate[1],
        reflect_x=args.reflect,
    )
    traj = apply_transform(traj, xf)
    if args.duplicate > 1:
        traj = resample_duplicate(traj, args.duplicate)
    try:
        save_landmark_file(traj, args.out_path)
    except OSError as exc:
        print(f"error: {args.out_path}: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_selfcheck(args) -> int:
    try:
        traj = load_landmark_file(args.path)
    except (OSError, ValueError) as exc:
        print(f"error: {args.path}: {exc}", file=sys.stderr)
        return 1
    results = run_selfcheck(traj, trials=args.trials, tolerance=args.tolerance, seed=args.seed)
    print(
        f"selfcheck {args.path}  trials={args.trials}  "
        f"tolerance={args.tolerance:g}  seed={args.seed}"
    )
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"  {r.name:<15} max_deviation={r.max_deviation:.3e}  {status}")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="handmotion",
        description="Quantify hand movement in landmark-series (HLS1) files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="summarize movement metrics per file")
    p_analyze.add_argument("paths", nargs="+", metavar="FILE")
    p_analyze.add_argument("--window", type=int, default=15, help="windowed-sigma width in frames")
    p_analyze.add_argument("--trim", type=str, default=None, metavar="START:END",
                           help="keep only frame indices in [START, END)")
    p_analyze.add_argument("--series-out", type=str, default=None, metavar="PATH",
                           help="write per-frame distance and windowed sigma CSV here "
                                "(treated as a directory when analyzing several files)")
    p_analyze.add_argument("--format", choices=("table", "csv", "json"), default="table")

    p_transform = sub.add_parser("transform", help="apply a similarity transform to a file")
    p_transform.add_argument("in_path", metavar="IN")
    p_transform.add_argument("out_path", metavar="OUT")
    p_transform.add_argument("--scale", type=float, default=1.0)
    p_transform.add_argument("--rotate", type=float, default=0.0, metavar="DEGREES")
    p_transform.add_argument("--translate", type=str, default="0,0", metavar="DX,DY")
    p_transform.add_argument("--reflect", action="store_true",
                             help="mirror across the vertical axis")
    p_transform.add_argument("--duplicate", type=int, default=1, metavar="M",
                             help="repeat every frame M times")

    p_check = sub.add_parser("selfcheck", help="verify the metric invariances on a file")
    p_check.add_argument("path", metavar="FILE")
    p_check.add_argument("--trials", type=int, default=25)
    p_check.add_argument("--tolerance", type=float, default=1e-9)
    p_check.add_argument("--seed", type=int, default=0)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "analyze":
        if args.window < 2:
            parser.error(f"--window must be >= 2, got {args.window}")
        if args.trim is not None:
            try:
                args.trim = _parse_trim(args.trim)
            except ValueError as exc:
                parser.error(str(exc))
        return cmd_analyze(args)

    if args.command == "transform":
        if args.scale <= 0:
            parser.error(f"--scale must be positive, got {args.scale}")
        if args.duplicate < 1:
            parser.error(f"--duplicate must be >= 1, got {args.duplicate}")
        try:
            args.translate = _parse_translate(args.translate)
        except ValueError as exc:
            parser.error(str(exc))
        return cmd_transform(args)

    if args.trials < 1:
        parser.error(f"--trials must be >= 1, got {args.trials}")
    if args.tolerance < 0:
        parser.error(f"--tolerance must be >= 0, got {args.tolerance}")
    return cmd_selfcheck(args)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
