"""Equal-perimeter ellipse deformations and their spreading occupation regions.

An ellipse with semiaxes (a, b) has approximate perimeter
``pi * (1.5 (a + b) - sqrt(a b))``. Fixing the perimeter ties b to a; the
largest admissible a is ``perimeter / (1.5 pi)``, where the relation meets b = 0.
In the pseudo-Euclidean plane the ellipse becomes the hyperbola
``x^2/a^2 - t^2/b^2 = 1`` and its point on the positive x-axis moves as
``x(t) = a sqrt(1 + t^2/b^2)``. The negative branch is the mirror image and is
not simulated separately.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import ellipe

A_MAX_CLAMP = 1e-9
DEFAULT_A_MIN_FRACTION = 0.01


class NoSolutionError(ValueError):
    pass


def perimeter_of(a: float, b: float) -> float:
    if a <= 0 or b <= 0:
        raise ValueError(f"semiaxes must be positive, got a={a}, b={b}")
    return math.pi * (1.5 * (a + b) - math.sqrt(a * b))


def exact_perimeter(a: float, b: float) -> float:
    """True ellipse perimeter from the complete elliptic integral of the second kind."""
    if a <= 0 or b <= 0:
        raise ValueError("semiaxes must be positive")
    major, minor = max(a, b), min(a, b)
    return 4.0 * major * float(ellipe(1.0 - (minor / major) ** 2))


def a_max(perimeter: float) -> float:
    return perimeter / (1.5 * math.pi)


def _larger_root(a: np.ndarray, perimeter: float) -> np.ndarray:
    sa = np.sqrt(a)
    b = ((sa + np.sqrt(6.0 * perimeter / math.pi - 8.0 * a)) / 3.0) ** 2
    # One Newton step in b brings the roundtrip to machine precision.
    g = math.pi * (1.5 * (a + b) - np.sqrt(a * b)) - perimeter
    dg = math.pi * (1.5 - 0.5 * np.sqrt(a / b))
    return b - g / dg


def solve_b(a: float, perimeter: float) -> float:
    """Semiaxis b for which ``perimeter_of(a, b) == perimeter``.

    Solves ``1.5 s^2 - sqrt(a) s + (1.5 a - perimeter/pi) = 0`` for s = sqrt(b).
    For 0 < a < a_max only the larger root is positive; it is also the branch
    through the circle a = b = perimeter / (2 pi). At a == a_max the smaller
    root touches b = 0 and the larger one (b = 4 a / 9) is returned.
    """
    if a <= 0:
        raise ValueError(f"semiaxis a must be positive, got {a}")
    if perimeter <= 0:
        raise ValueError("perimeter must be positive")
    if a > a_max(perimeter) * (1 + 1e-15):
        raise NoSolutionError(f"a={a} exceeds a_max={a_max(perimeter)}")
    return float(_larger_root(np.float64(a), perimeter))


@dataclass(frozen=True)
class EllipseDefect:
    a: float
    b: float
    perimeter: float

    def __post_init__(self):
        if self.a <= 0 or self.b <= 0 or self.perimeter <= 0:
            raise ValueError("semiaxes and perimeter must be positive")
        if abs(perimeter_of(self.a, self.b) - self.perimeter) >= 1e-9 * self.perimeter:
            raise ValueError("semiaxes do not match the perimeter")

    @classmethod
    def from_a(cls, a: float, perimeter: float) -> "EllipseDefect":
        return cls(a, solve_b(a, perimeter), perimeter)


def position_at(defect: EllipseDefect, t: float) -> float:
    """Positive-x point of the hyperbolic time slice at time t."""
    if defect.b == 0:
        raise ValueError("degenerate defect (b == 0); use the light-cone model")
    return defect.a * math.sqrt(1.0 + (t / defect.b) ** 2)


@dataclass(frozen=True)
class EnsembleConfig:
    perimeter: float
    sample_count: int
    a_min_fraction: float = DEFAULT_A_MIN_FRACTION
    seed: int = 0
    times: tuple[float, ...] = (0.0,)

    def __post_init__(self):
        object.__setattr__(self, "times", tuple(float(t) for t in self.times))
        if self.perimeter <= 0:
            raise ValueError("perimeter must be positive")
        if self.sample_count < 1:
            raise ValueError("sample_count must be >= 1")
        if not 0 < self.a_min_fraction < 1:
            raise ValueError("a_min_fraction must lie in (0, 1)")
        if not self.times:
            raise ValueError("times must be nonempty")
        if any(t < 0 for t in self.times):
            raise ValueError("times must be non-negative")
        if any(t2 <= t1 for t1, t2 in zip(self.times, self.times[1:])):
            raise ValueError("times must be strictly ascending")

    @property
    def a_range(self) -> tuple[float, float]:
        top = a_max(self.perimeter)
        return self.a_min_fraction * top, top * (1.0 - A_MAX_CLAMP)


@dataclass(frozen=True)
class OccupationRegion:
    t: float
    x_lo: float
    x_hi: float
    sample_positions: np.ndarray = field(repr=False)


def sample_semiaxes(cfg: EnsembleConfig) -> np.ndarray:
    """Uniform draws of a on the configured range; draw i depends only on the seed."""
    lo, hi = cfg.a_range
    rng = np.random.default_rng(cfg.seed)
    return rng.uniform(lo, hi, size=cfg.sample_count)


def _positions(a: np.ndarray, b: np.ndarray, t: float) -> np.ndarray:
    return a * np.sqrt(1.0 + (t / b) ** 2)


def run_ensemble(cfg: EnsembleConfig) -> list[OccupationRegion]:
    """Occupation region of the ensemble at each configured time.

    The envelope comes from the end points of the a-range (the position is
    increasing in a), so it carries no sampling noise. A single-sample
    ensemble collapses to that sample's trajectory.
    """
    a = sample_semiaxes(cfg)
    b = _larger_root(a, cfg.perimeter)
    lo, hi = cfg.a_range
    ends = [EllipseDefect.from_a(lo, cfg.perimeter), EllipseDefect.from_a(hi, cfg.perimeter)]
    regions = []
    for t in cfg.times:
        xs = _positions(a, b, t)
        if cfg.sample_count == 1:
            x_lo = x_hi = float(xs[0])
        else:
            x_lo, x_hi = (position_at(d, t) for d in ends)
        regions.append(OccupationRegion(t, x_lo, x_hi, xs))
    return regions


def occupation_histogram(cfg: EnsembleConfig, t: float, bins: int) -> list[tuple[float, int]]:
    if bins < 1:
        raise ValueError("bins must be >= 1")
    if t < 0:
        raise ValueError("t must be non-negative")
    region = run_ensemble(_at_time(cfg, t))[0]
    counts, edges = np.histogram(region.sample_positions, bins=bins, range=(region.x_lo, region.x_hi))
    centers = 0.5 * (edges[:-1] + edges[1:])
    return [(float(c), int(n)) for c, n in zip(centers, counts)]


def _at_time(cfg: EnsembleConfig, t: float) -> EnsembleConfig:
    return EnsembleConfig(cfg.perimeter, cfg.sample_count, cfg.a_min_fraction, cfg.seed, (t,))


def position_is_monotone_in_a(perimeter: float, t: float, grid: int = 2001, a_min_fraction: float = 1e-4) -> bool:
    """Check on a grid that x(t) grows with a, which the analytic envelope relies on."""
    top = a_max(perimeter) * (1.0 - A_MAX_CLAMP)
    a = np.linspace(a_min_fraction * top, top, grid)
    b = _larger_root(a, perimeter)
    return bool(np.all(np.diff(_positions(a, b, t)) > 0))
