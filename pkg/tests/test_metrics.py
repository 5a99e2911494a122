"""Movement metric values, edge cases, and oracle agreement."""

import math

import numpy as np
import pytest

from handmotion import (
    LandmarkFrame,
    Trajectory,
    distance_series,
    frame_from_pairs,
    hand_scale,
    l2_norm_metric,
    mean_position,
    movement_summary,
    sd_metric,
    windowed_sd_series,
)

from gen import random_trajectory
from oracles import (
    oracle_distance_series,
    oracle_hand_scale,
    oracle_l2,
    oracle_mean_position,
    oracle_rotate,
    oracle_sigmas,
    oracle_windowed,
)


def wrist_trajectory(wrist_xy, mcp_offsets=None, indices=None):
    """Trajectory with given wrist positions; landmark 5 offset sets the scale."""
    frames = []
    for i, (x, y) in enumerate(wrist_xy):
        off = (0.0, 1.0) if mcp_offsets is None else mcp_offsets[i]
        pts = [(x, y)] * 21
        pts[5] = (x + off[0], y + off[1])
        idx = i if indices is None else indices[i]
        frames.append(frame_from_pairs(idx, pts))
    return Trajectory(frames=tuple(frames), source_width=640, source_height=480, fps=30.0)


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def test_hand_scale_345_triangle():
    t = wrist_trajectory([(0.0, 0.0)], mcp_offsets=[(3.0, 4.0)])
    assert hand_scale(t).s == 5.0
    assert hand_scale(t).frames_used == 1


def test_hand_scale_is_arithmetic_mean():
    t = wrist_trajectory([(0.0, 0.0), (10.0, 10.0)], mcp_offsets=[(5.0, 0.0), (0.0, 7.0)])
    assert hand_scale(t).s == 6.0


def test_hand_scale_ignores_undetected(rng):
    t = random_trajectory(rng, n_frames=50)
    only_detected = Trajectory(
        frames=tuple(f for f in t.frames if f.detected),
        source_width=t.source_width,
        source_height=t.source_height,
        fps=t.fps,
    )
    assert hand_scale(t).s == hand_scale(only_detected).s
    assert hand_scale(t).frames_used == len(only_detected.frames)


def test_hand_scale_degenerate_raises():
    t = wrist_trajectory([(50.0, 50.0)], mcp_offsets=[(0.0, 0.0)])
    with pytest.raises(ValueError, match="degenerate hand scale"):
        hand_scale(t)
    # a looser epsilon turns the same geometry into an explicit opt-in
    tiny = wrist_trajectory([(50.0, 50.0)], mcp_offsets=[(2.0**-27, 0.0)])
    assert hand_scale(tiny, epsilon=1e-10).s == 2.0**-27


def test_mean_position_two_frames():
    t = wrist_trajectory([(0.0, 0.0), (2.0, 4.0)])
    assert (mean_position(t).x_bar, mean_position(t).y_bar) == (1.0, 2.0)


def test_mean_position_single_frame_identity():
    t = wrist_trajectory([(12.5, -3.25)])
    assert (mean_position(t).x_bar, mean_position(t).y_bar) == (12.5, -3.25)


def test_l2_constant_is_zero():
    t = wrist_trajectory([(7.0, 9.0)] * 6)
    assert l2_norm_metric(t) == 0.0


def test_l2_symmetric_two_point():
    t = wrist_trajectory([(0.0, 0.0), (2.0, 0.0)])
    assert hand_scale(t).s == 1.0
    assert l2_norm_metric(t) == pytest.approx(1.0, abs=1e-15)


def test_sd_constant_is_zero():
    t = wrist_trajectory([(7.0, 9.0)] * 6)
    assert sd_metric(t) == (0.0, 0.0, 0.0)


def test_sd_symmetric_two_point():
    t = wrist_trajectory([(0.0, 0.0), (2.0, 0.0)])
    sigma_x, sigma_y, combined = sd_metric(t)
    assert sigma_x == pytest.approx(1.0, abs=1e-15)
    assert sigma_y == 0.0
    assert combined == pytest.approx(1.0, abs=1e-15)


def test_combined_sd_survives_37_degree_rotation(rng):
    t = random_trajectory(rng, n_frames=80)
    rotated = oracle_rotate(t, math.radians(37.0), pivot_x=400.0, pivot_y=-120.0)
    assert rel(sd_metric(t)[2], sd_metric(rotated)[2]) < 1e-9
    assert rel(l2_norm_metric(t), l2_norm_metric(rotated)) < 1e-9


def test_per_axis_sigmas_are_not_rotation_invariant(rng):
    # the combination is invariant; its components must not be, or the
    # combined check would be vacuous
    t = wrist_trajectory([(0.0, 0.0), (2.0, 0.0), (4.0, 0.0)])
    rotated = oracle_rotate(t, math.radians(90.0))
    assert rel(sd_metric(t)[0], sd_metric(rotated)[0]) > 0.5
    assert rel(sd_metric(t)[2], sd_metric(rotated)[2]) < 1e-12


def test_movement_summary_matches_parts(rng):
    t = random_trajectory(rng, n_frames=90)
    s = movement_summary(t)
    assert s.l2_norm == l2_norm_metric(t)
    assert (s.sigma_x, s.sigma_y, s.sigma_combined) == sd_metric(t)
    assert s.hand_scale == hand_scale(t)
    assert s.n_frames == sum(1 for f in t.frames if f.detected)
    assert s.sigma_combined == pytest.approx(math.hypot(s.sigma_x, s.sigma_y), rel=1e-15)


def test_distance_series_constant_all_zero():
    t = wrist_trajectory([(3.0, 3.0)] * 4)
    assert [p.value for p in distance_series(t)] == [0.0] * 4


def test_distance_series_mean_equals_l2(rng):
    for _ in range(10):
        t = random_trajectory(rng)
        values = [p.value for p in distance_series(t)]
        assert rel(sum(values) / len(values), l2_norm_metric(t)) < 1e-12


def test_distance_series_keeps_original_frame_indices(rng):
    t = random_trajectory(rng, n_frames=60)
    detected_indices = [f.frame_index for f in t.frames if f.detected]
    assert [p.frame_index for p in distance_series(t)] == detected_indices


def test_metrics_match_oracles_point_by_point(rng):
    t = random_trajectory(rng, n_frames=500, detection_gaps=True)
    assert rel(hand_scale(t).s, oracle_hand_scale(t)) < 1e-12
    mp = mean_position(t)
    ox, oy = oracle_mean_position(t)
    assert rel(mp.x_bar, ox) < 1e-12 and rel(mp.y_bar, oy) < 1e-12
    assert rel(l2_norm_metric(t), oracle_l2(t)) < 1e-12
    for got, want in zip(sd_metric(t), oracle_sigmas(t)):
        assert rel(got, want) < 1e-12
    got_series = distance_series(t)
    want_series = oracle_distance_series(t)
    assert [p.frame_index for p in got_series] == [i for i, _ in want_series]
    for p, (_, want) in zip(got_series, want_series):
        assert abs(p.value - want) <= 1e-12 * max(1.0, want)


def test_windowed_constant_30_frames():
    t = wrist_trajectory([(5.0, 5.0)] * 30)
    points = windowed_sd_series(t, window=15)
    assert [(p.frame_index, p.value) for p in points] == [(0, 0.0), (15, 0.0)]


def test_windowed_15_alternating_frames():
    # 8 frames at x=0 and 7 at x=2 with s=1: mean 14/15, population
    # variance 224/225, so the single window reads sqrt(224)/15 (~0.9978).
    # An even split would give exactly 1; an odd frame count cannot.
    t = wrist_trajectory([(0.0 if i % 2 == 0 else 2.0, 0.0) for i in range(15)])
    points = windowed_sd_series(t, window=15)
    assert len(points) == 1
    assert points[0].frame_index == 0
    assert points[0].value == pytest.approx(math.sqrt(224.0) / 15.0, rel=1e-15)
    want = oracle_windowed(t, 15)
    assert points[0].value == pytest.approx(want[0][1], rel=1e-15)


def test_windowed_16_alternating_frames_even_split():
    t = wrist_trajectory([(0.0 if i % 2 == 0 else 2.0, 0.0) for i in range(16)])
    points = windowed_sd_series(t, window=16)
    assert len(points) == 1
    assert points[0].value == pytest.approx(1.0, rel=1e-15)


def test_windowed_partial_window_rules():
    wander = [(float(i), float(i % 3)) for i in range(31)]
    # 31 = 15 + 15 + 1: the single leftover frame is dropped
    assert len(windowed_sd_series(wrist_trajectory(wander), window=15)) == 2
    # 32 = 15 + 15 + 2: a two-frame tail is kept
    wander.append((40.0, 2.0))
    points = windowed_sd_series(wrist_trajectory(wander), window=15)
    assert len(points) == 3
    assert points[2].frame_index == 30


def test_windowed_forms_windows_over_detected_sequence(rng):
    t = random_trajectory(rng, n_frames=120, detection_gaps=True)
    detected_indices = [f.frame_index for f in t.frames if f.detected]
    points = windowed_sd_series(t, window=15)
    assert [p.frame_index for p in points] == detected_indices[::15][: len(points)]


def test_windowed_uses_whole_trajectory_scale():
    # second half has a hand twice the size; per-window normalization would
    # halve its value, global normalization must not
    wrist = [(math.sin(i) * 10.0, math.cos(i) * 10.0) for i in range(30)]
    offsets = [(0.0, 1.0)] * 15 + [(0.0, 3.0)] * 15
    t = wrist_trajectory(wrist, mcp_offsets=offsets)
    s = hand_scale(t).s
    assert s == 2.0
    points = windowed_sd_series(t, window=15)
    want = oracle_windowed(t, 15)
    for p, (_, w) in zip(points, want):
        assert p.value == pytest.approx(w, rel=1e-12)
    # re-derive the second window by hand with the global scale
    chunk = np.array(wrist[15:])
    centered = chunk - chunk.mean(axis=0)
    by_hand = math.sqrt(float(np.mean(centered[:, 0] ** 2) + np.mean(centered[:, 1] ** 2))) / s
    assert points[1].value == pytest.approx(by_hand, rel=1e-12)


def test_windowed_random_against_oracle(rng):
    for _ in range(5):
        t = random_trajectory(rng, n_frames=200)
        got = windowed_sd_series(t, window=15)
        want = oracle_windowed(t, 15)
        assert [p.frame_index for p in got] == [i for i, _ in want]
        for p, (_, w) in zip(got, want):
            assert abs(p.value - w) <= 1e-12 * max(1.0, w)


def test_windowed_rejects_window_below_two(rng):
    t = random_trajectory(rng, n_frames=10)
    with pytest.raises(ValueError, match="window"):
        windowed_sd_series(t, window=1)


def test_windowed_empty_when_single_detected_frame():
    frames = (
        frame_from_pairs(0, [(1.0, 1.0)] * 5 + [(4.0, 5.0)] + [(1.0, 1.0)] * 15),
        frame_from_pairs(1, [(0.0, 0.0)] * 21, detected=False, confidence=0.0),
    )
    t = Trajectory(frames=frames, source_width=640, source_height=480, fps=30.0)
    assert windowed_sd_series(t, window=15) == []


def test_l2_never_exceeds_combined_sd(rng):
    for _ in range(25):
        t = random_trajectory(rng)
        assert l2_norm_metric(t) <= sd_metric(t)[2]


def test_l2_equals_combined_sd_for_circular_motion():
    # every frame equidistant from the mean: the mean-of-distances equals
    # the root-mean-square, so the two scores coincide
    wrist = [(math.cos(2 * math.pi * i / 8) * 50.0, math.sin(2 * math.pi * i / 8) * 50.0) for i in range(8)]
    t = wrist_trajectory(wrist)
    assert l2_norm_metric(t) == pytest.approx(sd_metric(t)[2], rel=1e-12)


def test_l2_strictly_below_sd_when_distances_differ():
    t = wrist_trajectory([(0.0, 0.0), (1.0, 0.0), (5.0, 0.0)])
    assert l2_norm_metric(t) < sd_metric(t)[2]
