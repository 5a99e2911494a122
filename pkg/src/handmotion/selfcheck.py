"""Mechanical verification of the metric invariance claims.

Each property transforms the input trajectory (random parameters, seeded),
recomputes the metrics, and records the worst relative deviation observed.
This is the live counterpart of the analytical arguments for why the scores
do not depend on resolution, zoom, camera angle, mirroring or frame rate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Trajectory
from .metrics import distance_series, l2_norm_metric, sd_metric, windowed_sd_series
from .transforms import PlanarTransform, apply_transform, resample_duplicate, rotation_about

PROPERTY_NAMES = (
    "scale",
    "rotation",
    "translation",
    "reflection",
    "duplication",
    "cauchy_schwarz",
)


@dataclass(frozen=True)
class PropertyResult:
    name: str
    max_deviation: float
    tolerance: float
    passed: bool
    trials: int


# Metric values this small are floating-point residue, not movement: a constant
# trajectory yields "zero" metrics that differ by a few ulp across transforms,
# and a naive relative comparison would report that noise as deviation 1.
NEGLIGIBLE = 1e-12


def _rel(a: float, b: float) -> float:
    if abs(a) < NEGLIGIBLE:
        a = 0.0
    if abs(b) < NEGLIGIBLE:
        b = 0.0
    denom = max(abs(a), abs(b))
    if denom == 0.0:
        return 0.0
    return abs(a - b) / denom


def _series_rel(a, b) -> float:
    if len(a) != len(b):
        return math.inf
    worst = 0.0
    for pa, pb in zip(a, b):
        if pa.frame_index != pb.frame_index:
            return math.inf
        worst = max(worst, _rel(pa.value, pb.value))
    return worst


def _summary_rel(t: Trajectory, v: Trajectory) -> float:
    dev = _rel(l2_norm_metric(t), l2_norm_metric(v))
    dev = max(dev, _rel(sd_metric(t)[2], sd_metric(v)[2]))
    return dev


def _all_outputs_rel(t: Trajectory, v: Trajectory, window: int) -> float:
    dev = _summary_rel(t, v)
    dev = max(dev, _series_rel(distance_series(t), distance_series(v)))
    dev = max(dev, _series_rel(windowed_sd_series(t, window), windowed_sd_series(v, window)))
    return dev


def run_selfcheck(
    t: Trajectory,
    trials: int = 25,
    tolerance: float = 1e-9,
    seed: int = 0,
    window: int = 15,
) -> list[PropertyResult]:
    """Run all six invariance properties and return one result per property.

    * scale: uniform scaling leaves all four outputs unchanged (the hand
      scale grows by the same factor and cancels).
    * rotation: l2_norm and sigma_combined survive rotation about random
      pivots. Per-axis sigmas do not, and are deliberately not checked.
    * translation: shifting leaves all four outputs unchanged.
    * reflection: mirroring is exact (pure sign flips), one trial suffices.
    * duplication: repeating every frame m times scales every sum's
      numerator and denominator alike. The windowed series is excluded:
      window boundaries legitimately shift.
    * cauchy_schwarz: l2_norm <= sigma_combined on the input and on random
      similarity transforms of it; deviation is the relative excess.
    """
    rng = np.random.default_rng(seed)
    results: list[PropertyResult] = []

    def record(name: str, deviation: float, n_trials: int) -> None:
        results.append(
            PropertyResult(
                name=name,
                max_deviation=deviation,
                tolerance=tolerance,
                passed=deviation <= tolerance,
                trials=n_trials,
            )
        )

    dev = 0.0
    for _ in range(trials):
        k = math.exp(rng.uniform(math.log(0.25), math.log(4.0)))
        dev = max(dev, _all_outputs_rel(t, apply_transform(t, PlanarTransform(scale=k)), window))
    record("scale", dev, trials)

    dev = 0.0
    for _ in range(trials):
        theta = rng.uniform(-math.pi, math.pi)
        px, py = rng.uniform(-2000.0, 2000.0, size=2)
        dev = max(dev, _summary_rel(t, apply_transform(t, rotation_about(theta, px, py))))
    record("rotation", dev, trials)

    dev = 0.0
    for _ in range(trials):
        dx, dy = rng.uniform(-2000.0, 2000.0, size=2)
        shifted = apply_transform(t, PlanarTransform(translate_x=dx, translate_y=dy))
        dev = max(dev, _all_outputs_rel(t, shifted, window))
    record("translation", dev, trials)

    mirrored = apply_transform(t, PlanarTransform(reflect_x=True))
    record("reflection", _all_outputs_rel(t, mirrored, window), 1)

    dev = 0.0
    for _ in range(trials):
        m = int(rng.integers(2, 6))
        dev = max(dev, _summary_rel(t, resample_duplicate(t, m)))
    record("duplication", dev, trials)

    dev = 0.0
    variants = [t]
    for _ in range(trials):
        xf = PlanarTransform(
            theta=rng.uniform(-math.pi, math.pi),
            scale=math.exp(rng.uniform(math.log(0.25), math.log(4.0))),
            translate_x=rng.uniform(-2000.0, 2000.0),
            translate_y=rng.uniform(-2000.0, 2000.0),
            reflect_x=bool(rng.integers(0, 2)),
        )
        variants.append(apply_transform(t, xf))
    for v in variants:
        l2 = l2_norm_metric(v)
        combined = sd_metric(v)[2]
        if l2 > combined:
            dev = max(dev, _rel(l2, combined))
    record("cauchy_schwarz", dev, trials)

    return results
