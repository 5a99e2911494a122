"""HLS1 emission.

Writes the plain-text hand-landmark series format: one header line

    HLS1 width=<int> height=<int> fps=<float> label="<escaped>"

then one record per frame,

    <frame_index> <0|1> <confidence> x0 y0 ... x20 y20

with coordinates in pixels. Floats use ``repr`` so consumers re-parse
them bit-exactly. Unlike an analysis-side serializer this writer accepts
files with no detected frames at all: a failed extraction still produces
a complete, inspectable artifact.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

LANDMARK_COUNT = 21

_LABEL_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r"}


def _escape_label(label: str) -> str:
    return "".join(_LABEL_ESCAPES.get(c, c) for c in label)


@dataclass(frozen=True)
class FrameRecord:
    """One output row: pixels is (21, 2) when detected, ignored otherwise."""

    frame_index: int
    detected: bool
    confidence: float
    pixels: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.frame_index < 0:
            raise ValueError(f"frame_index must be nonnegative, got {self.frame_index}")
        if self.detected:
            pts = np.asarray(self.pixels, dtype=np.float64)
            if pts.shape != (LANDMARK_COUNT, 2):
                raise ValueError(
                    f"expected ({LANDMARK_COUNT}, 2) pixel landmarks, got {pts.shape}"
                )
            if not np.all(np.isfinite(pts)):
                raise ValueError("landmark coordinates must be finite")
            object.__setattr__(self, "pixels", pts)
            if not (0.0 <= self.confidence <= 1.0):
                raise ValueError(f"confidence must be in [0, 1], got {self.confidence}")
        elif self.confidence != 0.0:
            raise ValueError("undetected frames carry confidence 0")


def render(width: int, height: int, fps: float, label: str,
           records: Iterable[FrameRecord]) -> bytes:
    """Render a complete HLS1 document as UTF-8 bytes."""
    if width <= 0 or height <= 0:
        raise ValueError(f"invalid frame dimensions {width}x{height}")
    if not (fps > 0 and np.isfinite(fps)):
        raise ValueError(f"invalid fps {fps}")

    zeros = " ".join(["0.0"] * (2 * LANDMARK_COUNT))
    lines = [
        f'HLS1 width={int(width)} height={int(height)} '
        f'fps={float(fps)!r} label="{_escape_label(label)}"'
    ]
    last_index = -1
    for record in records:
        if record.frame_index <= last_index:
            raise ValueError(
                f"frame_index must increase: {record.frame_index} after {last_index}"
            )
        last_index = record.frame_index
        if record.detected:
            coords = " ".join(f"{float(v)!r}" for v in record.pixels.ravel())
            lines.append(f"{record.frame_index} 1 {float(record.confidence)!r} {coords}")
        else:
            lines.append(f"{record.frame_index} 0 0.0 {zeros}")
    return ("\n".join(lines) + "\n").encode("utf-8")
