"""Regenerate the shipped .hls fixtures. Deterministic; run from the repo root."""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np

from handmotion import LandmarkFrame, Trajectory, save_landmark_file

HERE = Path(__file__).resolve().parent


def hand_template(span: float) -> np.ndarray:
    """A rigid 21-point hand-like shape; landmark 5 sits `span` px from landmark 0."""
    rng = np.random.default_rng(2024)
    template = rng.uniform(-0.9, 0.9, size=(21, 2))
    template[0] = 0.0
    template[5] = template[5] / np.hypot(*template[5])
    return template * span


def pendulum(n_frames: int = 200) -> Trajectory:
    """Hand swinging along a Lissajous path, rigid shape, every frame detected."""
    template = hand_template(span=90.0)
    center = np.array([320.0, 260.0])
    frames = []
    for i in range(n_frames):
        wrist = center + np.array([110.0 * math.sin(0.09 * i), 60.0 * math.sin(0.17 * i + 0.6)])
        theta = 0.35 * math.sin(0.05 * i)
        c, s = math.cos(theta), math.sin(theta)
        rot = np.array([[c, s], [-s, c]])
        pts = wrist + template @ rot
        conf = round(0.86 + 0.13 * math.sin(i / 9.0) ** 2, 3)
        frames.append(LandmarkFrame(frame_index=i, landmarks=pts, confidence=conf))
    return Trajectory(frames=tuple(frames), source_width=640, source_height=480, fps=30.0, label="pendulum")


def steady(n_frames: int = 30) -> Trajectory:
    """A hand that never moves: both summary metrics are exactly zero."""
    pts = hand_template(span=75.0) + np.array([400.0, 300.0])
    frames = tuple(
        LandmarkFrame(frame_index=i, landmarks=pts) for i in range(n_frames)
    )
    return Trajectory(frames=frames, source_width=640, source_height=480, fps=30.0, label="steady")


def main() -> None:
    save_landmark_file(pendulum(), HERE / "pendulum.hls")
    save_landmark_file(steady(), HERE / "steady.hls")
    print(f"wrote {HERE / 'pendulum.hls'} and {HERE / 'steady.hls'}")


if __name__ == "__main__":
    main()
