"""Hand detection engines.

Every engine takes a BGR frame and answers with at most one hand: 21
landmark points in normalized image coordinates plus a confidence score.
The extraction pipeline is engine-agnostic; anything satisfying
``DetectionEngine`` plugs in.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Protocol

import cv2
import numpy as np

LANDMARK_COUNT = 21


@dataclass(frozen=True)
class Detection:
    """One detected hand: normalized landmarks and a confidence score."""

    landmarks: np.ndarray  # (21, 2) float64, x and y in [0, 1]
    confidence: float

    def __post_init__(self):
        pts = np.asarray(self.landmarks, dtype=np.float64)
        if pts.shape != (LANDMARK_COUNT, 2):
            raise ValueError(f"expected ({LANDMARK_COUNT}, 2) landmarks, got {pts.shape}")
        pts.setflags(write=False)
        object.__setattr__(self, "landmarks", pts)


class DetectionEngine(Protocol):
    def reset(self) -> None:
        """Drop any state carried across frames (trackers, smoothing)."""
        ...

    def detect(self, frame_bgr: np.ndarray) -> Optional[Detection]:
        """Detect the most confident hand in one frame, or None."""
        ...


class MediaPipeHandsEngine:
    """Hand landmarks via the MediaPipe Hands solution.

    mediapipe is imported lazily at construction so the package installs
    and the other engines work without it. When several hands are found
    the one with the highest handedness score wins.
    """

    def __init__(self, max_hands: int = 2,
                 min_detection_confidence: float = 0.5,
                 min_tracking_confidence: float = 0.5):
        try:
            import mediapipe
        except ImportError as exc:
            raise ImportError(
                "mediapipe is not installed; install hlsextract[mediapipe] "
                "or choose another engine"
            ) from exc
        self._mp = mediapipe
        self._kwargs = dict(
            static_image_mode=False,
            max_num_hands=max_hands,
            min_detection_confidence=min_detection_confidence,
            min_tracking_confidence=min_tracking_confidence,
        )
        self._hands = self._make()

    def _make(self):
        return self._mp.solutions.hands.Hands(**self._kwargs)

    def reset(self) -> None:
        # The solution tracks hands across frames; a fresh instance is the
        # only supported way to clear that state.
        self._hands.close()
        self._hands = self._make()

    def detect(self, frame_bgr: np.ndarray) -> Optional[Detection]:
        rgb = np.ascontiguousarray(frame_bgr[:, :, ::-1])
        result = self._hands.process(rgb)
        hands = result.multi_hand_landmarks
        if not hands:
            return None
        scores = []
        if result.multi_handedness:
            for item in result.multi_handedness:
                scores.append(item.classification[0].score)
        best_index = 0
        best_score = scores[0] if scores else 1.0
        for i in range(1, len(hands)):
            score = scores[i] if i < len(scores) else 1.0
            if score > best_score:
                best_index, best_score = i, score
        points = hands[best_index].landmark
        landmarks = np.array([[p.x, p.y] for p in points], dtype=np.float64)
        return Detection(landmarks=landmarks, confidence=float(best_score))


# Landmark layout emitted by the blob engine, as fractions of the blob's
# bounding box: wrist at bottom center, thumb sweeping left, four fingers
# fanning upward. Rigid, so hand size tracks blob size.
_BLOB_TEMPLATE = np.array([
    (0.50, 0.95),
    (0.30, 0.82), (0.18, 0.68), (0.10, 0.55), (0.05, 0.44),
    (0.32, 0.42), (0.30, 0.26), (0.29, 0.14), (0.28, 0.04),
    (0.47, 0.40), (0.47, 0.22), (0.47, 0.10), (0.47, 0.00),
    (0.62, 0.42), (0.63, 0.25), (0.64, 0.13), (0.65, 0.04),
    (0.76, 0.46), (0.79, 0.32), (0.81, 0.22), (0.83, 0.13),
], dtype=np.float64)


class ColorBlobEngine:
    """Deterministic fallback engine: skin-colored blob tracking.

    Thresholds the frame in HSV for a skin-tone band, takes the largest
    connected region, and lays a fixed 21-point hand template over its
    bounding box. No learned weights, no state, bit-identical output for
    identical frames. Useful for pipelines that must run hermetically and
    as the reference engine in tests.

    Overexposed skin drifts above the value ceiling and drops out of the
    mask, which is exactly the failure mode brightness adjustment exists
    to repair.
    """

    HSV_LOW = (5, 60, 60)
    HSV_HIGH = (25, 255, 245)
    MIN_AREA = 100.0
    # Area at which confidence saturates at 1.0.
    FULL_CONFIDENCE_AREA = 800.0

    def reset(self) -> None:
        pass  # stateless

    def detect(self, frame_bgr: np.ndarray) -> Optional[Detection]:
        hsv = cv2.cvtColor(frame_bgr, cv2.COLOR_BGR2HSV)
        mask = cv2.inRange(hsv, self.HSV_LOW, self.HSV_HIGH)
        contours, _ = cv2.findContours(mask, cv2.RETR_EXTERNAL, cv2.CHAIN_APPROX_SIMPLE)
        if not contours:
            return None
        largest = max(contours, key=cv2.contourArea)
        area = float(cv2.contourArea(largest))
        if area < self.MIN_AREA:
            return None
        x, y, w, h = cv2.boundingRect(largest)
        height, width = frame_bgr.shape[:2]
        pixels = _BLOB_TEMPLATE * (w, h) + (x, y)
        landmarks = pixels / (width, height)
        confidence = min(1.0, area / self.FULL_CONFIDENCE_AREA)
        return Detection(landmarks=landmarks, confidence=confidence)


ENGINE_NAMES = ("mediapipe", "blob")


def make_engine(name: str) -> DetectionEngine:
    if name == "mediapipe":
        return MediaPipeHandsEngine()
    if name == "blob":
        return ColorBlobEngine()
    raise ValueError(f"unknown engine {name!r}; choose from {ENGINE_NAMES}")
