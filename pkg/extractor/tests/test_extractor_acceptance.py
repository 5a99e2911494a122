"""Acceptance gate for the extraction pipeline.

Four release-blocking contract checks run against bundled synthetic
clips; a reporter fixture prints one PASS/FAIL line per check straight
to the terminal so the result survives output capture.
"""

import json

import numpy as np
import pytest

from handmotion import movement_summary, parse_landmark_file
from hlsextract import AdjustmentSetting, ColorBlobEngine, Detection, extract, probe
from hlsextract.cli import main

CRITERIA = {
    "test_criterion_9_emitted_file_parses": (
        "criterion 9: emitted series file parses via the analysis ingest"
    ),
    "test_criterion_9_auto_rate_dominates_identity": (
        "criterion 9: auto-adjust detection rate >= identity rate"
    ),
    "test_criterion_9_pixel_conversion_matches_header": (
        "criterion 9: normalized->pixel conversion agrees with header dims"
    ),
    "test_criterion_9_adjustment_reduces_inflation": (
        "criterion 9: adjustment lowers noise-inflated movement scores"
    ),
}


@pytest.fixture(autouse=True)
def criterion_reporter(request, capfd):
    yield
    label = CRITERIA.get(request.node.name)
    rep = getattr(request.node, "rep_call", None)
    if label is None or rep is None:
        return
    with capfd.disabled():
        print(f"[acceptance] {label}: {'PASS' if rep.passed else 'FAIL'}", flush=True)


def cli_extract(clip, out_path, *extra) -> int:
    return main([str(clip), "-o", str(out_path), "--engine", "blob", *map(str, extra)])


def test_criterion_9_emitted_file_parses(well_lit_clip, tmp_path):
    meta = probe(well_lit_clip)
    payload, report = extract(well_lit_clip, AdjustmentSetting(), ColorBlobEngine())

    # the bundled clip stays well under ten seconds
    assert report.total_frames / meta.fps <= 10.0
    assert report.detected_frames > 0

    trajectory = parse_landmark_file(payload)
    assert len(trajectory.frames) == report.total_frames
    assert sum(f.detected for f in trajectory.frames) == report.detected_frames
    assert trajectory.source_width == meta.width
    assert trajectory.source_height == meta.height
    assert trajectory.fps == meta.fps

    # and the same bytes parse when routed through the CLI and disk
    out_path = tmp_path / "clip.hls"
    assert cli_extract(well_lit_clip, out_path) == 0
    assert parse_landmark_file(out_path.read_bytes()).label == "handclip"


def test_criterion_9_auto_rate_dominates_identity(
        well_lit_clip, over_bright_clip, tmp_path, capfd):
    for clip in (well_lit_clip, over_bright_clip):
        identity_report = tmp_path / f"{clip.stem}_identity.json"
        auto_report = tmp_path / f"{clip.stem}_auto.json"
        cli_extract(clip, tmp_path / "identity.hls", "--report", identity_report)
        code = cli_extract(clip, tmp_path / "auto.hls", "--auto-adjust",
                           "--report", auto_report)
        assert code == 0
        capfd.readouterr()

        identity_rate = json.loads(identity_report.read_text())["detection_rate"]
        auto_rate = json.loads(auto_report.read_text())["detection_rate"]
        assert auto_rate >= identity_rate


def test_criterion_9_pixel_conversion_matches_header(well_lit_clip, no_hand_clip):
    class CornerStub:
        """Engine pinned to known normalized positions."""

        def reset(self):
            pass

        def detect(self, frame_bgr):
            pts = np.tile((0.25, 0.75), (21, 1))
            pts[5] = (1.0, 0.0)
            return Detection(landmarks=pts, confidence=1.0)

    payload, _ = extract(no_hand_clip, AdjustmentSetting(), CornerStub())
    trajectory = parse_landmark_file(payload)
    width, height = trajectory.source_width, trajectory.source_height
    for frame in trajectory.frames:
        assert frame.landmarks[0, 0] == 0.25 * width
        assert frame.landmarks[0, 1] == 0.75 * height
        assert frame.landmarks[5, 0] == 1.0 * width
        assert frame.landmarks[5, 1] == 0.0

    # with the real engine every emitted pixel lands inside the header box
    payload, _ = extract(well_lit_clip, AdjustmentSetting(), ColorBlobEngine())
    trajectory = parse_landmark_file(payload)
    pts = np.vstack([f.landmarks for f in trajectory.frames if f.detected])
    assert np.all(pts >= 0.0)
    assert np.all(pts[:, 0] <= trajectory.source_width)
    assert np.all(pts[:, 1] <= trajectory.source_height)


def test_criterion_9_adjustment_reduces_inflation(over_bright_clip, tmp_path, capfd):
    # On the overexposed fixture the hand is invisible at identity gains;
    # the only detections are small distractor patches jumping between
    # corners, which inflates both movement scores. The auto-chosen
    # setting restores the hand, so the scores drop. Direction only; the
    # magnitudes are properties of the synthetic scene.
    identity_out = tmp_path / "identity.hls"
    auto_out = tmp_path / "auto.hls"
    auto_report = tmp_path / "auto.json"
    cli_extract(over_bright_clip, identity_out)
    code = cli_extract(over_bright_clip, auto_out, "--auto-adjust",
                       "--report", auto_report)
    assert code == 0
    capfd.readouterr()

    chosen = json.loads(auto_report.read_text())["chosen_adjustment"]
    assert chosen["brightness_gain"] < 1.0

    inflated = movement_summary(parse_landmark_file(identity_out.read_bytes()))
    recovered = movement_summary(parse_landmark_file(auto_out.read_bytes()))
    assert recovered.l2_norm < inflated.l2_norm
    assert recovered.sigma_combined < inflated.sigma_combined
