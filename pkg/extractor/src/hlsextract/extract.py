"""Extraction pipeline: video in, hand-landmark series out."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .adjust import AdjustmentSetting, apply_adjustment, default_grid
from .engines import DetectionEngine
from .hls import FrameRecord, render
from .video import PathLike, VideoError, iter_frames, probe, sample_frames

DEFAULT_MIN_CONFIDENCE = 0.5
DEFAULT_SAMPLE_STRIDE = 10


@dataclass(frozen=True)
class ExtractionReport:
    """Summary of one extraction run.

    ``per_setting_rates`` is populated only when auto adjustment searched
    the grid; manual extractions leave it empty.
    """

    total_frames: int
    detected_frames: int
    detection_rate: float
    chosen_adjustment: AdjustmentSetting
    per_setting_rates: tuple[tuple[AdjustmentSetting, float], ...] = ()

    def to_dict(self) -> dict:
        return {
            "total_frames": self.total_frames,
            "detected_frames": self.detected_frames,
            "detection_rate": self.detection_rate,
            "chosen_adjustment": {
                "brightness_gain": self.chosen_adjustment.brightness_gain,
                "saturation_gain": self.chosen_adjustment.saturation_gain,
            },
            "per_setting_rates": [
                {
                    "brightness_gain": setting.brightness_gain,
                    "saturation_gain": setting.saturation_gain,
                    "detection_rate": rate,
                }
                for setting, rate in self.per_setting_rates
            ],
        }


def _detection_rate(frames: Sequence, engine: DetectionEngine,
                    setting: AdjustmentSetting, min_confidence: float) -> float:
    # Engines may track across frames; each candidate gets a clean slate.
    engine.reset()
    hits = 0
    for frame in frames:
        detection = engine.detect(apply_adjustment(frame, setting))
        if detection is not None and detection.confidence >= min_confidence:
            hits += 1
    return hits / len(frames)


def auto_adjust(video: PathLike, engine: DetectionEngine,
                sample_stride: int = DEFAULT_SAMPLE_STRIDE,
                grid: Optional[Sequence[AdjustmentSetting]] = None,
                min_confidence: float = DEFAULT_MIN_CONFIDENCE,
                ) -> tuple[AdjustmentSetting, list[tuple[AdjustmentSetting, float]]]:
    """Pick the grid setting with the best sampled detection rate.

    Every stride-th frame is scored under each candidate setting. Ties go
    to the identity setting when it is among the best, otherwise to the
    smallest deviation from identity (brightness first). Returns the
    winner plus the full list of (setting, rate) pairs in grid order.

    The identity setting is part of the default grid, so the chosen
    setting never scores below an unadjusted pass.
    """
    candidates = list(default_grid() if grid is None else grid)
    if not candidates:
        raise ValueError("adjustment grid is empty")
    samples = sample_frames(video, sample_stride)
    if not samples:
        raise VideoError(f"no frames decoded from {video}")
    rates = [
        (setting, _detection_rate(samples, engine, setting, min_confidence))
        for setting in candidates
    ]
    best_rate = max(rate for _, rate in rates)
    tied = [setting for setting, rate in rates if rate == best_rate]
    chosen = min(tied, key=AdjustmentSetting.deviation_key)
    return chosen, rates


def extract(video: PathLike, setting: AdjustmentSetting, engine: DetectionEngine,
            min_confidence: float = DEFAULT_MIN_CONFIDENCE,
            label: Optional[str] = None,
            per_setting_rates: Sequence[tuple[AdjustmentSetting, float]] = (),
            ) -> tuple[bytes, ExtractionReport]:
    """Run the engine over every frame and render the HLS1 document.

    Frames where the engine finds nothing, or finds a hand below
    ``min_confidence``, are written as undetected. Landmark coordinates
    are converted from the engine's normalized space to pixels using the
    same width and height written to the output header.
    """
    if not (0.0 <= min_confidence <= 1.0):
        raise ValueError(f"min_confidence must be in [0, 1], got {min_confidence}")
    meta = probe(video)
    scale = np.array([meta.width, meta.height], dtype=np.float64)

    engine.reset()
    records = []
    detected = 0
    for index, frame in enumerate(iter_frames(video)):
        detection = engine.detect(apply_adjustment(frame, setting))
        if detection is not None and detection.confidence >= min_confidence:
            records.append(FrameRecord(
                frame_index=index,
                detected=True,
                confidence=detection.confidence,
                pixels=detection.landmarks * scale,
            ))
            detected += 1
        else:
            records.append(FrameRecord(frame_index=index, detected=False, confidence=0.0))
    if not records:
        raise VideoError(f"no frames decoded from {video}")

    payload = render(
        meta.width, meta.height, meta.fps,
        Path(str(video)).stem if label is None else label,
        records,
    )
    report = ExtractionReport(
        total_frames=len(records),
        detected_frames=detected,
        detection_rate=detected / len(records),
        chosen_adjustment=setting,
        per_setting_rates=tuple(per_setting_rates),
    )
    return payload, report
