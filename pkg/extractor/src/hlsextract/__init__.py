"""hlsextract: hand-landmark series extraction from video."""

from .adjust import (
    DEFAULT_GAIN_RANGE,
    GRID_GAINS,
    IDENTITY,
    AdjustmentSetting,
    apply_adjustment,
    default_grid,
)
from .engines import (
    ColorBlobEngine,
    Detection,
    DetectionEngine,
    MediaPipeHandsEngine,
    make_engine,
)
from .extract import (
    DEFAULT_MIN_CONFIDENCE,
    DEFAULT_SAMPLE_STRIDE,
    ExtractionReport,
    auto_adjust,
    extract,
)
from .hls import FrameRecord, render
from .video import VideoError, VideoMeta, iter_frames, probe, sample_frames

__version__ = "0.1.0"

__all__ = [
    "AdjustmentSetting",
    "ColorBlobEngine",
    "DEFAULT_GAIN_RANGE",
    "DEFAULT_MIN_CONFIDENCE",
    "DEFAULT_SAMPLE_STRIDE",
    "Detection",
    "DetectionEngine",
    "ExtractionReport",
    "FrameRecord",
    "GRID_GAINS",
    "IDENTITY",
    "MediaPipeHandsEngine",
    "VideoError",
    "VideoMeta",
    "apply_adjustment",
    "auto_adjust",
    "default_grid",
    "extract",
    "iter_frames",
    "make_engine",
    "probe",
    "render",
    "sample_frames",
]
