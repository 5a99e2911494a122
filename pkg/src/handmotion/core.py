"""Core data model for hand-landmark trajectories.

A trajectory is an ordered series of per-frame hand detections. Each frame
stores all 21 MediaPipe-style hand landmarks in pixel coordinates (origin at
the top-left corner of the video frame, x right, y down). The movement
metrics only consume landmark 0 (wrist) and landmark 5 (index-finger MCP),
but all 21 are kept so files never need regeneration when new analyses
arrive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

NUM_LANDMARKS = 21

# Landmark indices consumed by the metrics.
WRIST = 0
INDEX_MCP = 5


@dataclass(frozen=True)
class LandmarkPoint:
    """One landmark position in pixel coordinates (x right, y down)."""

    x: float
    y: float


@dataclass(frozen=True, eq=False)
class LandmarkFrame:
    """One video frame's hand detection.

    ``landmarks`` is a read-only float64 array of shape (21, 2) holding
    (x, y) pixel coordinates per landmark. When ``detected`` is False the
    stored coordinates are placeholders and every metric ignores them.
    """

    frame_index: int
    landmarks: np.ndarray  # shape (21, 2), read-only
    detected: bool = True
    confidence: float = 1.0

    def __post_init__(self):
        arr = np.asarray(self.landmarks, dtype=np.float64)
        if arr.shape != (NUM_LANDMARKS, 2):
            raise ValueError(
                f"landmarks must have shape ({NUM_LANDMARKS}, 2), got {arr.shape}"
            )
        if arr is self.landmarks and arr.flags.writeable:
            arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "landmarks", arr)
        object.__setattr__(self, "frame_index", int(self.frame_index))
        object.__setattr__(self, "detected", bool(self.detected))
        object.__setattr__(self, "confidence", float(self.confidence))

    def point(self, index: int) -> LandmarkPoint:
        x, y = self.landmarks[index]
        return LandmarkPoint(float(x), float(y))

    def __eq__(self, other):
        if not isinstance(other, LandmarkFrame):
            return NotImplemented
        return (
            self.frame_index == other.frame_index
            and self.detected == other.detected
            and self.confidence == other.confidence
            and np.array_equal(self.landmarks, other.landmarks)
        )


@dataclass(frozen=True)
class Trajectory:
    """Ordered landmark frames for one video, plus source metadata.

    The metadata (resolution, fps) describes provenance only; metrics never
    read it because coordinates are already in pixels.
    """

    frames: tuple[LandmarkFrame, ...]
    source_width: int
    source_height: int
    fps: float
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "frames", tuple(self.frames))
        object.__setattr__(self, "source_width", int(self.source_width))
        object.__setattr__(self, "source_height", int(self.source_height))
        object.__setattr__(self, "fps", float(self.fps))

    def __len__(self) -> int:
        return len(self.frames)


@dataclass(frozen=True)
class HandScale:
    """Normalization constant: mean pixel distance between landmarks 0 and 5.

    Dividing coordinates by this value makes the metrics independent of
    video resolution and camera zoom.
    """

    s: float
    frames_used: int


def validate_trajectory(t: Trajectory) -> list[str]:
    """Check every trajectory invariant and return all violations found.

    An empty list means the trajectory is valid. Violations are returned as
    human-readable strings rather than raised, so callers can report every
    problem in one pass.
    """
    violations: list[str] = []

    if t.source_width <= 0:
        violations.append(f"source_width must be positive, got {t.source_width}")
    if t.source_height <= 0:
        violations.append(f"source_height must be positive, got {t.source_height}")
    if not (math.isfinite(t.fps) and t.fps > 0):
        violations.append(f"fps must be a positive finite number, got {t.fps}")

    prev_index = None
    any_detected = False
    for frame in t.frames:
        where = f"frame_index {frame.frame_index}"
        if frame.frame_index < 0:
            violations.append(f"{where}: frame_index is negative")
        if prev_index is not None and frame.frame_index <= prev_index:
            violations.append(
                f"non-monotone frame_index: {prev_index} followed by {frame.frame_index}"
            )
        prev_index = frame.frame_index

        if not np.all(np.isfinite(frame.landmarks)):
            bad = np.argwhere(~np.isfinite(frame.landmarks))
            violations.append(
                f"{where}: non-finite coordinate at landmark {int(bad[0][0])}"
            )
        if not (0.0 <= frame.confidence <= 1.0):
            violations.append(
                f"{where}: confidence {frame.confidence} outside [0, 1]"
            )
        if frame.detected:
            any_detected = True
        elif frame.confidence != 0.0:
            violations.append(
                f"{where}: undetected frame must carry confidence 0, got {frame.confidence}"
            )

    if not any_detected:
        violations.append("no detected frames")

    return violations


def detected_frames(t: Trajectory) -> list[LandmarkFrame]:
    """Return the frames with ``detected=True``, in order.

    This subsequence is the data set every metric is computed over; its
    length is the ``n`` appearing in all the formulas.
    """
    return [f for f in t.frames if f.detected]


def require_detected(t: Trajectory) -> list[LandmarkFrame]:
    """detected_frames, but raising when the result would be empty."""
    frames = detected_frames(t)
    if not frames:
        raise ValueError("trajectory has no detected frames")
    return frames


def frame_from_pairs(
    frame_index: int,
    pairs,
    detected: bool = True,
    confidence: float = 1.0,
) -> LandmarkFrame:
    """Build a LandmarkFrame from any sequence of 21 (x, y) pairs."""
    return LandmarkFrame(
        frame_index=frame_index,
        landmarks=np.asarray(pairs, dtype=np.float64),
        detected=detected,
        confidence=confidence,
    )
