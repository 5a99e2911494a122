"""Planar similarity transforms over trajectories.

Used both as a CLI utility (generate rescaled / rotated / shifted variants
of a landmark file) and as the oracle behind the invariance self-check:
every invariance the metrics claim is exercised by transforming coordinates
here and re-measuring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import LandmarkFrame, Trajectory


@dataclass(frozen=True)
class PlanarTransform:
    """Similarity transform applied as reflect, then scale, then rotate,
    then translate.

    Rotation uses the standard 2D rotation matrix; since pixel y points
    down, positive theta turns clockwise on screen. ``reflect_x`` mirrors
    across the vertical axis (x -> -x) before everything else.
    """

    theta: float = 0.0
    scale: float = 1.0
    translate_x: float = 0.0
    translate_y: float = 0.0
    reflect_x: bool = False

    def __post_init__(self):
        if not math.isfinite(self.theta):
            raise ValueError(f"theta must be finite, got {self.theta}")
        if not (math.isfinite(self.scale) and self.scale > 0):
            raise ValueError(f"scale must be positive, got {self.scale}")

    def matrix(self) -> np.ndarray:
        """2x2 linear part (reflection, scale, rotation combined)."""
        c, s = math.cos(self.theta), math.sin(self.theta)
        rot = np.array([[c, -s], [s, c]])
        flip = np.array([[-1.0 if self.reflect_x else 1.0, 0.0], [0.0, 1.0]])
        return rot @ (self.scale * flip)

    def offset(self) -> np.ndarray:
        return np.array([self.translate_x, self.translate_y])


IDENTITY = PlanarTransform()


def rotation_about(theta: float, pivot_x: float, pivot_y: float) -> PlanarTransform:
    """Rotation by theta about an arbitrary pivot, as a single transform."""
    c, s = math.cos(theta), math.sin(theta)
    return PlanarTransform(
        theta=theta,
        translate_x=pivot_x - (c * pivot_x - s * pivot_y),
        translate_y=pivot_y - (s * pivot_x + c * pivot_y),
    )


def apply_transform(t: Trajectory, xf: PlanarTransform) -> Trajectory:
    """Map every landmark of every frame through the transform.

    Undetected frames' placeholder coordinates are transformed too, keeping
    the operation total. Frame indices, detection flags and metadata are
    untouched (resolution metadata records the source video, not the
    transformed coordinates).
    """
    matrix_t = xf.matrix().T
    offset = xf.offset()
    frames = tuple(
        LandmarkFrame(
            frame_index=f.frame_index,
            landmarks=f.landmarks @ matrix_t + offset,
            detected=f.detected,
            confidence=f.confidence,
        )
        for f in t.frames
    )
    return Trajectory(
        frames=frames,
        source_width=t.source_width,
        source_height=t.source_height,
        fps=t.fps,
        label=t.label,
    )


def resample_duplicate(t: Trajectory, m: int) -> Trajectory:
    """Repeat every frame m consecutive times, as if the video ran at m
    times the frame rate. Frames are re-indexed 0..n*m-1 and fps metadata
    is multiplied accordingly.
    """
    if m < 1:
        raise ValueError(f"duplication factor must be >= 1, got {m}")
    frames = []
    for f in t.frames:
        for _ in range(m):
            frames.append(
                LandmarkFrame(
                    frame_index=len(frames),
                    landmarks=f.landmarks,
                    detected=f.detected,
                    confidence=f.confidence,
                )
            )
    return Trajectory(
        frames=tuple(frames),
        source_width=t.source_width,
        source_height=t.source_height,
        fps=t.fps * m,
        label=t.label,
    )
