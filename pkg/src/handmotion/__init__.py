"""Scale- and rotation-invariant movement metrics for 2D hand-landmark series."""

from .core import (
    INDEX_MCP,
    NUM_LANDMARKS,
    WRIST,
    HandScale,
    LandmarkFrame,
    LandmarkPoint,
    Trajectory,
    detected_frames,
    frame_from_pairs,
    validate_trajectory,
)
from .ingest import (
    HLSFormatError,
    TrimSpec,
    load_landmark_file,
    parse_landmark_file,
    save_landmark_file,
    serialize_trajectory,
    trim,
)
from .metrics import (
    DEFAULT_WINDOW,
    MeanPosition,
    MovementSummary,
    SeriesPoint,
    distance_series,
    hand_scale,
    l2_norm_metric,
    mean_position,
    movement_summary,
    sd_metric,
    windowed_sd_series,
)
from .selfcheck import PROPERTY_NAMES, PropertyResult, run_selfcheck
from .transforms import IDENTITY, PlanarTransform, apply_transform, resample_duplicate, rotation_about

__all__ = [
    "INDEX_MCP",
    "NUM_LANDMARKS",
    "WRIST",
    "HandScale",
    "LandmarkFrame",
    "LandmarkPoint",
    "Trajectory",
    "detected_frames",
    "frame_from_pairs",
    "validate_trajectory",
    "HLSFormatError",
    "TrimSpec",
    "load_landmark_file",
    "parse_landmark_file",
    "save_landmark_file",
    "serialize_trajectory",
    "trim",
    "DEFAULT_WINDOW",
    "MeanPosition",
    "MovementSummary",
    "SeriesPoint",
    "distance_series",
    "hand_scale",
    "l2_norm_metric",
    "mean_position",
    "movement_summary",
    "sd_metric",
    "windowed_sd_series",
    "PROPERTY_NAMES",
    "PropertyResult",
    "run_selfcheck",
    "IDENTITY",
    "PlanarTransform",
    "apply_transform",
    "resample_duplicate",
    "rotation_about",
    "__version__",
]

__version__ = "0.1.0"
