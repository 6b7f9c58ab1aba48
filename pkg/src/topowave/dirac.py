"""Free Dirac plane waves in natural units (hbar = c = 1).

Four-vectors are stored with upper indices, ``(t, x, y, z)`` for positions and
``(E, px, py, pz)`` for momenta. The plane wave is

    psi(x) = u(p) exp(-i p.x),   p.x = E t - px x - py y - pz z.

A momentum component ``p_mu`` corresponds to the length ``2 pi / p_mu``; a zero
component has no finite length and raises :class:`InfiniteWavelengthError`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .clifford import METRIC, gamma, pauli

TOL = 1e-12
DEFAULT_PROBE_SEED = 20070611
DEFAULT_PROBE_COUNT = 100
PROBE_HALF_WIDTH = 5.0

Branch = Literal["up", "down"]

_GAMMAS = tuple(gamma(mu) for mu in range(4))
_SPINOR = {"up": np.array([1.0, 0.0], dtype=complex), "down": np.array([0.0, 1.0], dtype=complex)}


class OffShellError(ValueError):
    pass


class InfiniteWavelengthError(ValueError):
    """A zero momentum component was converted to a length."""

    def __init__(self, axes: Sequence[int]):
        self.axes = tuple(int(a) for a in axes)
        super().__init__(f"infinite wavelength on axes {self.axes}")


def four_vector(values: Sequence[float]) -> np.ndarray:
    v = np.asarray(values, dtype=float)
    if v.shape != (4,):
        raise ValueError(f"expected 4 components, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("four-vector components must be finite")
    return v


def minkowski_dot(p: np.ndarray, x: np.ndarray) -> float:
    return float(p[0] * x[0] - p[1] * x[1] - p[2] * x[2] - p[3] * x[3])


def lower(p: np.ndarray) -> np.ndarray:
    return METRIC @ np.asarray(p, dtype=float)


def energy_for(mass: float, momentum3: Sequence[float]) -> float:
    p3 = np.asarray(momentum3, dtype=float)
    return math.sqrt(mass * mass + float(p3 @ p3))


def mass_shell_residual(p: Sequence[float], m: float) -> float:
    p = four_vector(p)
    return minkowski_dot(p, p) - m * m


def _shell_scale(p: np.ndarray, m: float) -> float:
    return max(1.0, float(p @ p), m * m)


def slashed(p: Sequence[float]) -> np.ndarray:
    """``gamma^mu p_mu`` for an upper-index momentum."""
    p_low = lower(p)
    return sum(_GAMMAS[mu] * p_low[mu] for mu in range(4))


def solve_bispinor(p: Sequence[float], m: float, branch: Branch = "up") -> np.ndarray:
    """Unit-norm positive-energy spinor u with ``(gamma^mu p_mu - m) u = 0``.

    ``branch`` selects the upper two-spinor (1, 0) or (0, 1); the two branches
    are orthogonal.
    """
    p = four_vector(p)
    if m < 0:
        raise ValueError("mass must be non-negative")
    if branch not in _SPINOR:
        raise ValueError(f"branch must be 'up' or 'down', got {branch!r}")
    if p[0] <= 0:
        raise OffShellError("only positive-energy solutions are constructed")
    residual = mass_shell_residual(p, m)
    if abs(residual) > TOL * _shell_scale(p, m):
        raise OffShellError(f"momentum is off shell by {residual:.3e}")
    chi = _SPINOR[branch]
    sigma_p = sum(pauli(k) * p[k + 1] for k in range(3))
    u = np.concatenate([chi, sigma_p @ chi / (p[0] + m)])
    return u / np.linalg.norm(u)


@dataclass(frozen=True)
class OnShellState:
    """Plane-wave solution data: momentum (upper index), mass, amplitude u."""

    momentum: np.ndarray
    mass: float
    amplitude: np.ndarray
    spin_branch: Branch = "up"

    def __post_init__(self):
        p = four_vector(self.momentum)
        u = np.asarray(self.amplitude, dtype=complex)
        if u.shape != (4,):
            raise ValueError("amplitude must have 4 components")
        if self.mass < 0:
            raise ValueError("mass must be non-negative")
        if abs(mass_shell_residual(p, self.mass)) > TOL * _shell_scale(p, self.mass):
            raise OffShellError("state momentum is off shell")
        object.__setattr__(self, "momentum", p)
        object.__setattr__(self, "amplitude", u)

    @classmethod
    def build(cls, mass: float, momentum3: Sequence[float], branch: Branch = "up") -> "OnShellState":
        """Positive-energy state from a mass and a spatial momentum."""
        p3 = np.asarray(momentum3, dtype=float)
        p = np.concatenate([[energy_for(mass, p3)], p3])
        return cls(p, float(mass), solve_bispinor(p, mass, branch), branch)

    def field(self, x: Sequence[float]) -> np.ndarray:
        return self.amplitude * phase(self, x)


def phase(state: OnShellState, x: Sequence[float]) -> complex:
    """exp(-i p.x) with the (+,-,-,-) product."""
    return complex(np.exp(-1j * minkowski_dot(state.momentum, four_vector(x))))


def phase_from_wavelengths(wavelengths: Sequence[float], x: Sequence[float]) -> complex:
    """exp(-2 pi i (t/l0 - x/l1 - y/l2 - z/l3)); an infinite length drops its term."""
    lam = np.asarray(wavelengths, dtype=float)
    x = four_vector(x)
    signs = np.diag(METRIC)
    with np.errstate(divide="ignore"):
        inv = np.where(np.isinf(lam), 0.0, 1.0 / lam)
    return complex(np.exp(-2j * math.pi * float(np.sum(signs * x * inv))))


def dirac_residual(state: OnShellState, x: Sequence[float]) -> np.ndarray:
    """``i gamma^mu d_mu psi - m psi`` at x, with d_mu psi = -i p_mu psi."""
    psi = state.field(x)
    p_low = lower(state.momentum)
    lhs = sum(1j * _GAMMAS[mu] @ (-1j * p_low[mu] * psi) for mu in range(4))
    return lhs - state.mass * psi


def wavelengths_from_momentum(p: Sequence[float], strict: bool = True) -> np.ndarray:
    """Componentwise ``2 pi / p_mu``.

    Zero components raise :class:`InfiniteWavelengthError`, or become ``inf``
    when ``strict`` is false.
    """
    p = four_vector(p)
    zero = np.flatnonzero(p == 0.0)
    if zero.size and strict:
        raise InfiniteWavelengthError(zero)
    with np.errstate(divide="ignore"):
        return np.where(p == 0.0, np.inf, 2 * math.pi / np.where(p == 0.0, 1.0, p))


def momentum_from_wavelengths(lam: Sequence[float]) -> np.ndarray:
    lam = np.asarray(lam, dtype=float)
    if lam.shape != (4,):
        raise ValueError("expected 4 components")
    if np.any(lam == 0.0):
        raise ValueError("zero wavelength component")
    return 2 * math.pi / lam


def wavelength_identity_residual(p: Sequence[float], m: float) -> float:
    """Relative residual of ``l0^-2 - l1^-2 - l2^-2 - l3^-2 = (m / 2 pi)^2``.

    Normalised by the largest term; requires every momentum component nonzero.
    """
    lam = wavelengths_from_momentum(p)
    terms = np.concatenate([lam ** -2.0, [(m / (2 * math.pi)) ** 2]])
    lhs = terms[0] - terms[1] - terms[2] - terms[3]
    return float(abs(lhs - terms[4]) / np.max(terms))


def probe_points(count: int = DEFAULT_PROBE_COUNT, seed: int = DEFAULT_PROBE_SEED) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.uniform(-PROBE_HALF_WIDTH, PROBE_HALF_WIDTH, size=(count, 4))


def translation_invariance_check(
    state: OnShellState,
    n: Sequence[int],
    probes: np.ndarray | None = None,
) -> float:
    """Max ``|psi(x + n_mu l_mu) - psi(x)|`` over the probe set.

    Axes with zero momentum are skipped when their shift is zero.
    """
    n = np.asarray(n, dtype=int)
    if n.shape != (4,):
        raise ValueError("shift must have 4 integer components")
    lam = wavelengths_from_momentum(state.momentum, strict=False)
    bad = np.flatnonzero(np.isinf(lam) & (n != 0))
    if bad.size:
        raise InfiniteWavelengthError(bad)
    shift = np.where(n == 0, 0.0, n * np.where(np.isinf(lam), 0.0, lam))
    if probes is None:
        probes = probe_points()
    worst = 0.0
    for x in probes:
        d = np.max(np.abs(state.field(x + shift) - state.field(x)))
        worst = max(worst, float(d))
    return worst


def reflection_signs(mu: int) -> np.ndarray:
    """Diagonal of the reflection that keeps axis ``mu`` and flips the other three."""
    if not 0 <= mu < 4:
        raise IndexError("mu must be in 0..3")
    signs = -np.ones(4)
    signs[mu] = 1.0
    return signs


def apply_reflection(state: OnShellState, mu: int) -> OnShellState:
    """Image of the state under ``psi'(x') = gamma^mu psi(x)``.

    Reflecting a spatial axis flips the energy, so the result may be a
    negative-energy plane wave; it is still on shell and still a solution.
    """
    signs = reflection_signs(mu)
    return OnShellState(
        state.momentum * signs,
        state.mass,
        _GAMMAS[mu] @ state.amplitude,
        state.spin_branch,
    )
