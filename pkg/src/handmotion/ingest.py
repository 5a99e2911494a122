"""Reading, writing and trimming HLS1 landmark-series files.

HLS1 ("hand landmark series v1") is a line-oriented text format::

    HLS1 width=1280 height=720 fps=30.0 label="dove r1"
    # comment lines and blank lines are ignored
    0 1 0.97 512.0 388.25 ... x20 y20
    1 0 0.0 0 0 ... 0 0

The first non-comment line is the header. Every following record line is
``frame_index detected confidence`` followed by 42 coordinate fields
(x0 y0 .. x20 y20), space separated. ``detected`` is 0 or 1; undetected
frames usually carry zero coordinates. Records must be sorted by strictly
increasing frame_index.

Coordinates are serialized with ``repr`` so parse(serialize(t)) reproduces
every float bit-exactly; invariance tests are never polluted by format
rounding.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .core import NUM_LANDMARKS, LandmarkFrame, Trajectory, validate_trajectory

_HEADER_RE = re.compile(
    r'^HLS1[ \t]+width=(\S+)[ \t]+height=(\S+)[ \t]+fps=(\S+)'
    r'[ \t]+label="((?:[^"\\]|\\.)*)"[ \t]*$'
)

_RECORD_FIELDS = 3 + 2 * NUM_LANDMARKS

_LABEL_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r"}
_LABEL_UNESCAPES = {"\\": "\\", '"': '"', "n": "\n", "r": "\r"}


class HLSFormatError(ValueError):
    """Malformed HLS1 input. ``line`` is the 1-based offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class TrimSpec:
    """Half-open frame-index window [start_frame, end_frame) to keep.

    Either bound may be None (unbounded). Used to cut away the parts of a
    recording that are not the performance itself.
    """

    start_frame: int | None = None
    end_frame: int | None = None

    def __post_init__(self):
        for name, value in (("start_frame", self.start_frame), ("end_frame", self.end_frame)):
            if value is not None and value < 0:
                raise ValueError(f"{name} must be non-negative, got {value}")
        if self.start_frame is not None and self.end_frame is not None:
            if not self.start_frame < self.end_frame:
                raise ValueError(
                    f"start_frame must be < end_frame, got [{self.start_frame}, {self.end_frame})"
                )

    def contains(self, frame_index: int) -> bool:
        if self.start_frame is not None and frame_index < self.start_frame:
            return False
        if self.end_frame is not None and frame_index >= self.end_frame:
            return False
        return True


def _escape_label(label: str) -> str:
    return "".join(_LABEL_ESCAPES.get(c, c) for c in label)


def _unescape_label(raw: str, lineno: int) -> str:
    out = []
    i = 0
    while i < len(raw):
        c = raw[i]
        if c == "\\":
            if i + 1 >= len(raw) or raw[i + 1] not in _LABEL_UNESCAPES:
                raise HLSFormatError(lineno, f"bad escape sequence in label: {raw[i:i+2]!r}")
            out.append(_LABEL_UNESCAPES[raw[i + 1]])
            i += 2
        else:
            out.append(c)
            i += 1
    return "".join(out)


def _decode(data: bytes | str) -> str:
    if isinstance(data, str):
        return data
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        lineno = data[: exc.start].count(b"\n") + 1
        raise HLSFormatError(lineno, "not valid UTF-8 text") from exc


def _parse_positive_int(token: str, what: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise HLSFormatError(lineno, f"{what} must be an integer, got {token!r}") from None
    if value <= 0:
        raise HLSFormatError(lineno, f"{what} must be positive, got {value}")
    return value


def parse_landmark_file(data: bytes | str) -> Trajectory:
    """Parse HLS1 bytes (or text) into a validated Trajectory.

    Raises HLSFormatError, never anything else, for any malformed input:
    bad header, wrong field count, non-numeric or non-finite coordinates,
    non-monotone frame indices, or a file with no detected frame at all.
    """
    text = _decode(data)

    header = None
    frames: list[LandmarkFrame] = []
    prev_index: int | None = None

    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue

        if header is None:
            m = _HEADER_RE.match(line)
            if m is None:
                raise HLSFormatError(lineno, "malformed or missing HLS1 header")
            width = _parse_positive_int(m.group(1), "width", lineno)
            height = _parse_positive_int(m.group(2), "height", lineno)
            try:
                fps = float(m.group(3))
            except ValueError:
                raise HLSFormatError(lineno, f"fps must be a number, got {m.group(3)!r}") from None
            if not (math.isfinite(fps) and fps > 0):
                raise HLSFormatError(lineno, f"fps must be positive and finite, got {fps}")
            label = _unescape_label(m.group(4), lineno)
            header = (width, height, fps, label)
            continue

        fields = line.split()
        if len(fields) != _RECORD_FIELDS:
            raise HLSFormatError(
                lineno,
                f"expected {NUM_LANDMARKS} landmarks "
                f"({_RECORD_FIELDS} fields), got {len(fields)} fields",
            )

        try:
            frame_index = int(fields[0])
        except ValueError:
            raise HLSFormatError(
                lineno, f"frame_index must be an integer, got {fields[0]!r}"
            ) from None
        if frame_index < 0:
            raise HLSFormatError(lineno, f"frame_index must be non-negative, got {frame_index}")
        if prev_index is not None and frame_index <= prev_index:
            raise HLSFormatError(
                lineno, f"non-monotone frame_index: {prev_index} followed by {frame_index}"
            )
        prev_index = frame_index

        if fields[1] not in ("0", "1"):
            raise HLSFormatError(lineno, f"detected flag must be 0 or 1, got {fields[1]!r}")
        detected = fields[1] == "1"

        try:
            confidence = float(fields[2])
        except ValueError:
            raise HLSFormatError(
                lineno, f"confidence must be a number, got {fields[2]!r}"
            ) from None
        if not (0.0 <= confidence <= 1.0):
            raise HLSFormatError(lineno, f"confidence {confidence} outside [0, 1]")
        if not detected and confidence != 0.0:
            raise HLSFormatError(
                lineno, f"undetected frame must carry confidence 0, got {confidence}"
            )

        try:
            coords = np.array([float(v) for v in fields[3:]], dtype=np.float64)
        except ValueError:
            raise HLSFormatError(lineno, "non-numeric coordinate field") from None
        if not np.all(np.isfinite(coords)):
            raise HLSFormatError(lineno, "NaN or infinite coordinate")

        frames.append(
            LandmarkFrame(
                frame_index=frame_index,
                landmarks=coords.reshape(NUM_LANDMARKS, 2),
                detected=detected,
                confidence=confidence,
            )
        )

    if header is None:
        raise HLSFormatError(1, "empty file: missing HLS1 header")

    width, height, fps, label = header
    trajectory = Trajectory(
        frames=tuple(frames),
        source_width=width,
        source_height=height,
        fps=fps,
        label=label,
    )
    violations = validate_trajectory(trajectory)
    if violations:
        # Structural problems were caught per line above; what remains is
        # trajectory-level (e.g. every frame undetected).
        raise HLSFormatError(len(text.splitlines()) or 1, "; ".join(violations))
    return trajectory


def serialize_trajectory(t: Trajectory) -> bytes:
    """Serialize a valid Trajectory to canonical HLS1 bytes.

    Floats are written with ``repr`` so the output re-parses to a
    coordinate-exact equal trajectory.
    """
    violations = validate_trajectory(t)
    if violations:
        raise ValueError("cannot serialize invalid trajectory: " + "; ".join(violations))

    lines = [
        f'HLS1 width={t.source_width} height={t.source_height} '
        f'fps={float(t.fps)!r} label="{_escape_label(t.label)}"'
    ]
    for frame in t.frames:
        coords = " ".join(f"{float(v)!r}" for v in frame.landmarks.ravel())
        lines.append(
            f"{frame.frame_index} {1 if frame.detected else 0} "
            f"{float(frame.confidence)!r} {coords}"
        )
    return ("\n".join(lines) + "\n").encode("utf-8")


def load_landmark_file(path) -> Trajectory:
    with open(path, "rb") as fh:
        return parse_landmark_file(fh.read())


def save_landmark_file(t: Trajectory, path) -> None:
    with open(path, "wb") as fh:
        fh.write(serialize_trajectory(t))


def trim(t: Trajectory, spec: TrimSpec) -> Trajectory:
    """Keep only the frames inside the trim window, preserving metadata.

    Raises ValueError if no detected frame survives the window.
    """
    kept = tuple(f for f in t.frames if spec.contains(f.frame_index))
    result = Trajectory(
        frames=kept,
        source_width=t.source_width,
        source_height=t.source_height,
        fps=t.fps,
        label=t.label,
    )
    if not any(f.detected for f in kept):
        raise ValueError(
            f"empty after trim: window [{spec.start_frame}, {spec.end_frame}) "
            "leaves no detected frames"
        )
    return result
