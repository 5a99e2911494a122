"""Movement metrics over the wrist landmark of a trajectory.

All metrics share the same normalization: coordinates are divided by the
hand scale s (mean wrist-to-index-MCP pixel distance), which cancels video
resolution and camera zoom. Two summary scores are produced:

* l2_norm: mean normalized distance of the wrist from its average position,
      d = (1 / (n*s)) * sum_i sqrt((x_i - mean_x)^2 + (y_i - mean_y)^2)
* sigma_combined: sqrt(sigma_x^2 + sigma_y^2) of the normalized wrist
  coordinates, with population standard deviations (divide by n). The
  combination is invariant under rotation of the input coordinates even
  though sigma_x and sigma_y individually are not.

sigma_combined is the quadratic mean of the same per-frame distances that
l2_norm averages, so l2_norm <= sigma_combined always holds, with equality
exactly when every frame sits at the same distance from the mean.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import INDEX_MCP, WRIST, HandScale, LandmarkFrame, Trajectory, require_detected

DEFAULT_SCALE_EPSILON = 1e-6
DEFAULT_WINDOW = 15


@dataclass(frozen=True)
class MeanPosition:
    """Mean wrist position over the detected frames, in pixels."""

    x_bar: float
    y_bar: float


@dataclass(frozen=True)
class MovementSummary:
    """Whole-trajectory movement scores plus the normalization used."""

    l2_norm: float
    sigma_x: float
    sigma_y: float
    sigma_combined: float
    hand_scale: HandScale
    n_frames: int


@dataclass(frozen=True)
class SeriesPoint:
    """One sample of a per-frame or per-window series."""

    frame_index: int
    value: float


def _wrist(frames: list[LandmarkFrame]) -> np.ndarray:
    """(n, 2) array of wrist coordinates, one row per detected frame."""
    return np.array([f.landmarks[WRIST] for f in frames], dtype=np.float64)


def hand_scale(t: Trajectory, epsilon: float = DEFAULT_SCALE_EPSILON) -> HandScale:
    """Mean pixel distance between wrist and index-finger MCP.

    Raises ValueError when the mean falls below ``epsilon`` (the two
    landmarks coincide in every frame, so nothing can be normalized).
    """
    frames = require_detected(t)
    diffs = np.array(
        [f.landmarks[WRIST] - f.landmarks[INDEX_MCP] for f in frames], dtype=np.float64
    )
    distances = np.hypot(diffs[:, 0], diffs[:, 1])
    s = float(np.mean(distances))
    if s < epsilon:
        raise ValueError(
            f"degenerate hand scale: {s} < {epsilon} "
            "(wrist and index-MCP landmarks coincide)"
        )
    return HandScale(s=s, frames_used=len(frames))


def mean_position(t: Trajectory) -> MeanPosition:
    """Component-wise mean of the wrist coordinates over detected frames."""
    wrist = _wrist(require_detected(t))
    return MeanPosition(x_bar=float(np.mean(wrist[:, 0])), y_bar=float(np.mean(wrist[:, 1])))


def _normalized_deviations(t: Trajectory, epsilon: float) -> tuple[np.ndarray, list[LandmarkFrame], HandScale]:
    """Wrist offsets from the mean position divided by the hand scale."""
    scale = hand_scale(t, epsilon=epsilon)
    frames = require_detected(t)
    wrist = _wrist(frames)
    deviations = (wrist - wrist.mean(axis=0)) / scale.s
    return deviations, frames, scale


def l2_norm_metric(t: Trajectory, epsilon: float = DEFAULT_SCALE_EPSILON) -> float:
    """Mean normalized wrist distance from the mean position."""
    deviations, _, _ = _normalized_deviations(t, epsilon)
    return float(np.mean(np.hypot(deviations[:, 0], deviations[:, 1])))


def sd_metric(
    t: Trajectory, epsilon: float = DEFAULT_SCALE_EPSILON
) -> tuple[float, float, float]:
    """Per-axis population standard deviations of the normalized wrist.

    Returns (sigma_x, sigma_y, sigma_combined) where sigma_combined is
    sqrt(sigma_x^2 + sigma_y^2), the rotation-invariant combination.
    """
    deviations, _, _ = _normalized_deviations(t, epsilon)
    sigma_x = float(np.sqrt(np.mean(deviations[:, 0] ** 2)))
    sigma_y = float(np.sqrt(np.mean(deviations[:, 1] ** 2)))
    return sigma_x, sigma_y, math.hypot(sigma_x, sigma_y)


def movement_summary(t: Trajectory, epsilon: float = DEFAULT_SCALE_EPSILON) -> MovementSummary:
    """Compute every whole-trajectory score in one pass."""
    deviations, frames, scale = _normalized_deviations(t, epsilon)
    sigma_x = float(np.sqrt(np.mean(deviations[:, 0] ** 2)))
    sigma_y = float(np.sqrt(np.mean(deviations[:, 1] ** 2)))
    return MovementSummary(
        l2_norm=float(np.mean(np.hypot(deviations[:, 0], deviations[:, 1]))),
        sigma_x=sigma_x,
        sigma_y=sigma_y,
        sigma_combined=math.hypot(sigma_x, sigma_y),
        hand_scale=scale,
        n_frames=len(frames),
    )


def distance_series(
    t: Trajectory, epsilon: float = DEFAULT_SCALE_EPSILON
) -> list[SeriesPoint]:
    """Per-frame normalized wrist distance from the mean position.

    The arithmetic mean of the values equals l2_norm_metric by definition.
    """
    deviations, frames, _ = _normalized_deviations(t, epsilon)
    radii = np.hypot(deviations[:, 0], deviations[:, 1])
    return [
        SeriesPoint(frame_index=f.frame_index, value=float(r))
        for f, r in zip(frames, radii)
    ]


def windowed_sd_series(
    t: Trajectory,
    window: int = DEFAULT_WINDOW,
    epsilon: float = DEFAULT_SCALE_EPSILON,
) -> list[SeriesPoint]:
    """sigma_combined over consecutive non-overlapping windows of frames.

    Windows are formed over the detected-frame sequence (gaps do not leave
    holes), each window's deviations are taken about its own mean, and every
    window is normalized by the whole-trajectory hand scale so values stay
    comparable across windows. The final partial window is kept when it has
    at least 2 frames; a single leftover frame would report a fake 0.

    Each point carries the frame_index of the first frame in its window.
    Returns an empty series when fewer than 2 frames are detected.
    """
    if window < 2:
        raise ValueError(f"window must be >= 2, got {window}")
    scale = hand_scale(t, epsilon=epsilon)
    frames = require_detected(t)
    if len(frames) < 2:
        return []
    wrist = _wrist(frames)

    points: list[SeriesPoint] = []
    for start in range(0, len(frames), window):
        chunk = wrist[start : start + window]
        if len(chunk) < 2:
            break
        centered = (chunk - chunk.mean(axis=0)) / scale.s
        sigma_x = float(np.sqrt(np.mean(centered[:, 0] ** 2)))
        sigma_y = float(np.sqrt(np.mean(centered[:, 1] ** 2)))
        points.append(
            SeriesPoint(
                frame_index=frames[start].frame_index,
                value=math.hypot(sigma_x, sigma_y),
            )
        )
    return points
