"""Hyperboloid time slices, the zero-radius cone, and 1+1 dimensional boosts.

Everything is reduced to the intersection of the defect with the x-axis: a
slice of radius r contributes the points +r and -r.
"""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np


def slice_radius(a: float, b: float, t: float) -> float:
    """``a sqrt(1 + t^2/b^2)``: radius of the hyperboloid slice at time t."""
    if b <= 0:
        raise ValueError(f"b must be positive, got {b}")
    if a < 0:
        raise ValueError(f"a must be non-negative, got {a}")
    return a * math.sqrt(1.0 + (t / b) ** 2)


def cone_position(t: float) -> tuple[float, float]:
    """Intersection points of the degenerate circle x^2 - t^2 = 0 with the x-axis."""
    return (t + 0.0, 0.0 - t)


def lorentz_factor(v: float) -> float:
    if not -1.0 < v < 1.0:
        raise ValueError(f"boost velocity must satisfy |v| < 1, got {v}")
    return 1.0 / math.sqrt(1.0 - v * v)


def boost_point(x: float, t: float, v: float) -> tuple[float, float]:
    g = lorentz_factor(v)
    return g * (x - v * t), g * (t - v * x)


def invariant_speed_check(v: float, ts: Sequence[float]) -> float:
    """Boost the worldline x = t and return max | |dx'/dt'| - 1 | over consecutive samples."""
    ts = [float(t) for t in ts]
    if len(set(ts)) < 2:
        raise ValueError("need at least two distinct times")
    boosted = [boost_point(t, t, v) for t in ts]
    worst = 0.0
    for (x1, t1), (x2, t2) in zip(boosted, boosted[1:]):
        dt = t2 - t1
        if dt == 0.0:
            raise ValueError("coincident boosted times")
        worst = max(worst, abs(abs((x2 - x1) / dt) - 1.0))
    return worst


def hyperboloid_asymptotic_speed(a: float, b: float) -> float:
    """Limit of slice_radius(a, b, t) / t for large t."""
    if a <= 0 or b <= 0:
        raise ValueError("a and b must be positive")
    return a / b


def boosted_asymptotic_speed(a: float, b: float, v: float) -> float:
    """Slope of the asymptote x = (a/b) t as seen from a frame moving at v."""
    u = hyperboloid_asymptotic_speed(a, b)
    x, t = boost_point(u, 1.0, v)
    return x / t


def interval(x: float, t: float) -> float:
    return x * x - t * t


def interval_deviation(x: float, t: float, v: float) -> float:
    """Relative change of x^2 - t^2 under a boost, scaled by the larger of x^2 + t^2 before and after."""
    xb, tb = boost_point(x, t, v)
    scale = max(x * x + t * t, xb * xb + tb * tb)
    if scale == 0.0:
        return 0.0
    return abs(interval(xb, tb) - interval(x, t)) / scale


def slice_table(a: float, b: float, ts: Sequence[float]) -> np.ndarray:
    return np.array([[t, slice_radius(a, b, t)] for t in ts], dtype=float).reshape(-1, 2)
