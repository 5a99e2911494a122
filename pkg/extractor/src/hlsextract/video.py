"""Video decoding helpers built on OpenCV."""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Union

import cv2
import numpy as np

PathLike = Union[str, Path]


class VideoError(RuntimeError):
    """The file cannot be opened or carries unusable metadata."""


def _open(path: PathLike) -> cv2.VideoCapture:
    capture = cv2.VideoCapture(str(path))
    if not capture.isOpened():
        capture.release()
        raise VideoError(f"cannot open video: {path}")
    return capture


@dataclass(frozen=True)
class VideoMeta:
    width: int
    height: int
    fps: float


def probe(path: PathLike) -> VideoMeta:
    """Read container metadata without decoding frames."""
    capture = _open(path)
    try:
        width = int(capture.get(cv2.CAP_PROP_FRAME_WIDTH))
        height = int(capture.get(cv2.CAP_PROP_FRAME_HEIGHT))
        fps = float(capture.get(cv2.CAP_PROP_FPS))
    finally:
        capture.release()
    if width <= 0 or height <= 0:
        raise VideoError(f"video reports invalid dimensions {width}x{height}: {path}")
    if not math.isfinite(fps) or fps <= 0:
        raise VideoError(f"video reports invalid frame rate {fps}: {path}")
    return VideoMeta(width=width, height=height, fps=fps)


def iter_frames(path: PathLike) -> Iterator[np.ndarray]:
    """Yield decoded BGR frames in order."""
    capture = _open(path)
    try:
        while True:
            ok, frame = capture.read()
            if not ok:
                break
            yield frame
    finally:
        capture.release()


def sample_frames(path: PathLike, stride: int) -> list:
    """Every stride-th frame, starting with the first."""
    if stride < 1:
        raise ValueError(f"stride must be at least 1, got {stride}")
    return [frame for i, frame in enumerate(iter_frames(path)) if i % stride == 0]
