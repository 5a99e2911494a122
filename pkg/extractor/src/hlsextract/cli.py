"""Command line front end: extract a landmark series from one video."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .adjust import AdjustmentSetting
from .extract import (
    DEFAULT_MIN_CONFIDENCE,
    DEFAULT_SAMPLE_STRIDE,
    auto_adjust,
    extract,
)
from .engines import ENGINE_NAMES, make_engine
from .video import VideoError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extract",
        description="Detect hand landmarks in a video and write an HLS1 series file.",
    )
    parser.add_argument("video", help="input video file")
    parser.add_argument("-o", "--out", required=True, metavar="HLS1_PATH",
                        help="output series file")
    parser.add_argument("--auto-adjust", action="store_true",
                        help="search the gain grid for the best detection rate")
    parser.add_argument("--brightness", type=float, default=None, metavar="G",
                        help="brightness gain (default 1.0)")
    parser.add_argument("--saturation", type=float, default=None, metavar="G",
                        help="saturation gain (default 1.0)")
    parser.add_argument("--min-confidence", type=float,
                        default=DEFAULT_MIN_CONFIDENCE, metavar="C",
                        help="detections below this confidence count as missed "
                             "(default %(default)s)")
    parser.add_argument("--sample-stride", type=int,
                        default=DEFAULT_SAMPLE_STRIDE, metavar="N",
                        help="score every N-th frame during auto adjustment "
                             "(default %(default)s)")
    parser.add_argument("--report", default=None, metavar="JSON_PATH",
                        help="also write a JSON extraction report")
    parser.add_argument("--engine", choices=ENGINE_NAMES, default="mediapipe",
                        help="hand detection engine (default %(default)s)")
    parser.add_argument("--label", default=None,
                        help="label written to the output header "
                             "(default: video file stem)")
    return parser


def _manual_setting(parser: argparse.ArgumentParser,
                    args: argparse.Namespace) -> AdjustmentSetting:
    try:
        return AdjustmentSetting(
            1.0 if args.brightness is None else args.brightness,
            1.0 if args.saturation is None else args.saturation,
        )
    except ValueError as exc:
        parser.error(str(exc))


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.auto_adjust and (args.brightness is not None or args.saturation is not None):
        parser.error("--auto-adjust replaces --brightness/--saturation; give one or the other")
    if not (0.0 <= args.min_confidence <= 1.0):
        parser.error(f"--min-confidence must be in [0, 1], got {args.min_confidence}")
    if args.sample_stride < 1:
        parser.error(f"--sample-stride must be at least 1, got {args.sample_stride}")
    setting = _manual_setting(parser, args)  # validates gains against the range

    try:
        engine = make_engine(args.engine)
    except ImportError as exc:
        print(f"extract: {exc}", file=sys.stderr)
        return 1

    rates = ()
    try:
        if args.auto_adjust:
            setting, rates = auto_adjust(
                args.video, engine,
                sample_stride=args.sample_stride,
                min_confidence=args.min_confidence,
            )
        payload, report = extract(
            args.video, setting, engine,
            min_confidence=args.min_confidence,
            label=args.label,
            per_setting_rates=rates,
        )
    except (VideoError, OSError, ValueError) as exc:
        print(f"extract: {args.video}: {exc}", file=sys.stderr)
        return 1

    try:
        Path(args.out).write_bytes(payload)
        if args.report is not None:
            Path(args.report).write_text(
                json.dumps(report.to_dict(), indent=2) + "\n", encoding="utf-8"
            )
    except OSError as exc:
        print(f"extract: {exc}", file=sys.stderr)
        return 1

    print(
        f"{args.video}: {report.detected_frames}/{report.total_frames} frames detected "
        f"({report.detection_rate:.1%}), brightness={setting.brightness_gain} "
        f"saturation={setting.saturation_gain} -> {args.out}"
    )
    if report.detected_frames == 0:
        print(
            f"extract: warning: no hands detected in {args.video}; "
            "output contains only undetected frames",
            file=sys.stderr,
        )
        return 1
    return 0


def run() -> None:
    sys.exit(main())
