"""Brightness and saturation adjustment applied before hand detection.

Gains are applied in HSV space: the value channel is scaled by the
brightness gain and the saturation channel by the saturation gain, both
clipped to the 8-bit range. Hue is never touched.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import cv2
import numpy as np

# Gains outside this range wash out or crush the image far past anything
# a detector can recover from, so settings are rejected up front.
DEFAULT_GAIN_RANGE = (0.4, 1.6)

# Search grid used by auto adjustment: every pairing of these gains.
GRID_GAINS = (0.6, 0.8, 1.0, 1.2, 1.4)


@dataclass(frozen=True)
class AdjustmentSetting:
    """One brightness/saturation gain pair.

    ``gain_range`` is carried for validation only; it does not take part
    in equality so settings compare by their gains alone.
    """

    brightness_gain: float = 1.0
    saturation_gain: float = 1.0
    gain_range: tuple[float, float] = field(
        default=DEFAULT_GAIN_RANGE, compare=False, repr=False
    )

    def __post_init__(self):
        lo, hi = self.gain_range
        for name, gain in (
            ("brightness_gain", self.brightness_gain),
            ("saturation_gain", self.saturation_gain),
        ):
            if not (lo <= gain <= hi):
                raise ValueError(
                    f"{name} {gain!r} outside allowed range [{lo}, {hi}]"
                )

    def is_identity(self) -> bool:
        return self.brightness_gain == 1.0 and self.saturation_gain == 1.0

    def deviation_key(self) -> tuple[float, float, float, float]:
        """Sort key preferring settings closer to the identity.

        Brightness deviation dominates, then saturation deviation; the raw
        gains break any remaining tie so ordering is total.
        """
        return (
            abs(self.brightness_gain - 1.0),
            abs(self.saturation_gain - 1.0),
            self.brightness_gain,
            self.saturation_gain,
        )

    def apply(self, frame_bgr: np.ndarray) -> np.ndarray:
        return apply_adjustment(frame_bgr, self)


IDENTITY = AdjustmentSetting()


def default_grid() -> list[AdjustmentSetting]:
    """Grid of candidate settings searched by auto adjustment."""
    return [
        AdjustmentSetting(b, s) for b in GRID_GAINS for s in GRID_GAINS
    ]


def apply_adjustment(frame_bgr: np.ndarray, setting: AdjustmentSetting) -> np.ndarray:
    """Return ``frame_bgr`` with the setting's gains applied.

    The identity setting returns the input array untouched, so an
    unadjusted extraction never pays HSV round-trip quantization.
    """
    if setting.is_identity():
        return frame_bgr
    hsv = cv2.cvtColor(frame_bgr, cv2.COLOR_BGR2HSV).astype(np.float32)
    hsv[:, :, 1] *= setting.saturation_gain
    hsv[:, :, 2] *= setting.brightness_gain
    np.clip(hsv[:, :, 1:], 0.0, 255.0, out=hsv[:, :, 1:])
    return cv2.cvtColor(np.rint(hsv).astype(np.uint8), cv2.COLOR_HSV2BGR)
