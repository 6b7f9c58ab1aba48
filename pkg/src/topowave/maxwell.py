"""Free Maxwell fields in Riemann-Silberstein form, units with c = 1.

With f+ = E + iH and f- = E - iH the vacuum equations read

    i d/dt f+ =  (S.p) f+,   p.f+ = 0,
    i d/dt f- = -(S.p) f-,   p.f- = 0,        p = -i grad,

and stacking f = (f+, f-) gives ``i Gamma^mu d_mu f = 0``. Plane waves carry the
factor ``exp(i(k.r - omega t))``; every derivative below is applied to that
factor analytically (d/dt -> -i omega, grad -> i k).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .clifford import big_gamma, spin_matrix

TOL = 1e-12

_S = tuple(spin_matrix(i) for i in range(3))
_BIG = tuple(big_gamma(mu) for mu in range(4))


def _vec3(v, dtype=float) -> np.ndarray:
    arr = np.asarray(v, dtype=dtype)
    if arr.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {arr.shape}")
    return arr


def rs_from_EH(E: Sequence[float], H: Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    E = _vec3(E, complex)
    H = _vec3(H, complex)
    return E + 1j * H, E - 1j * H


def EH_from_rs(f_plus: Sequence[complex]) -> tuple[np.ndarray, np.ndarray]:
    """Real E and H carried by f+ (real and imaginary parts)."""
    f = _vec3(f_plus, complex)
    return f.real.copy(), f.imag.copy()


def s_dot_k(k: Sequence[float]) -> np.ndarray:
    k = _vec3(k)
    return k[0] * _S[0] + k[1] * _S[1] + k[2] * _S[2]


def _fix_phase(v: np.ndarray, cutoff: float = 1e-8) -> np.ndarray:
    """Rotate v so its first non-negligible component is real and positive."""
    for i, c in enumerate(v):
        if abs(c) > cutoff:
            out = v * (abs(c) / c)
            out[i] = abs(c)
            return out
    return v


def transverse_basis(k: Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal e1, e2 perpendicular to k with e1 x e2 = k/|k|."""
    k = _vec3(k)
    norm = float(np.linalg.norm(k))
    if norm == 0.0:
        raise ValueError("wave vector must be nonzero")
    khat = k / norm
    ref = np.eye(3)[int(np.argmin(np.abs(khat)))]
    e1 = np.cross(khat, ref)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(khat, e1)
    return e1, e2


@dataclass(frozen=True)
class RSPlaneWave:
    """Plane-wave amplitudes for f+ and f-, wave vector k and frequency omega.

    Construction does not enforce the dispersion or transversality conditions,
    so deliberately broken waves can be fed to the residuals; ``check`` does.
    """

    f_plus_amp: np.ndarray
    f_minus_amp: np.ndarray
    k: np.ndarray
    omega: float

    def __post_init__(self):
        object.__setattr__(self, "f_plus_amp", _vec3(self.f_plus_amp, complex))
        object.__setattr__(self, "f_minus_amp", _vec3(self.f_minus_amp, complex))
        object.__setattr__(self, "k", _vec3(self.k))
        object.__setattr__(self, "omega", float(self.omega))

    @classmethod
    def from_fields(cls, E_amp, H_amp, k, omega: float | None = None) -> "RSPlaneWave":
        k = _vec3(k)
        f_plus, f_minus = rs_from_EH(E_amp, H_amp)
        if omega is None:
            omega = float(np.linalg.norm(k))
        return cls(f_plus, f_minus, k, omega)

    def with_omega(self, omega: float) -> "RSPlaneWave":
        return RSPlaneWave(self.f_plus_amp, self.f_minus_amp, self.k, omega)

    def check(self, tol: float = TOL) -> None:
        """Raise ValueError unless omega = |k| and both amplitudes are transverse."""
        knorm = float(np.linalg.norm(self.k))
        if abs(self.omega - knorm) > tol * max(1.0, knorm):
            raise ValueError(f"dispersion violated: omega={self.omega}, |k|={knorm}")
        for name, f in (("f+", self.f_plus_amp), ("f-", self.f_minus_amp)):
            if abs(self.k @ f) > tol * max(1.0, knorm):
                raise ValueError(f"{name} amplitude is not transverse to k")

    def phase(self, x: Sequence[float], t: float) -> complex:
        return complex(np.exp(1j * (float(self.k @ _vec3(x)) - self.omega * t)))

    def fields(self, x: Sequence[float], t: float) -> tuple[np.ndarray, np.ndarray]:
        ph = self.phase(x, t)
        return self.f_plus_amp * ph, self.f_minus_amp * ph


def superpose(waves: Sequence[RSPlaneWave], coeffs: Sequence[complex]) -> RSPlaneWave:
    """Linear combination of waves sharing k and omega."""
    first = waves[0]
    for w in waves[1:]:
        if not (np.array_equal(w.k, first.k) and w.omega == first.omega):
            raise ValueError("superposed waves must share k and omega")
    f_plus = sum(c * w.f_plus_amp for c, w in zip(coeffs, waves))
    f_minus = sum(c * w.f_minus_amp for c, w in zip(coeffs, waves))
    return RSPlaneWave(f_plus, f_minus, first.k, first.omega)


def solve_amplitudes(k: Sequence[float]) -> RSPlaneWave:
    """Unit circularly polarised amplitudes: helicity +1 for f+, -1 for f-.

    f+ is ``(e1 + i e2)/sqrt(2)`` in a right-handed transverse frame and f- its
    complex conjugate; each is rotated so its first nonzero entry is real
    positive. omega is set to |k|.
    """
    k = _vec3(k)
    e1, e2 = transverse_basis(k)
    f_plus = _fix_phase((e1 + 1j * e2) / math.sqrt(2.0))
    f_minus = f_plus.conj()
    return RSPlaneWave(f_plus, f_minus, k, float(np.linalg.norm(k)))


def majorana_residual(w: RSPlaneWave, x: Sequence[float], t: float) -> tuple[np.ndarray, np.ndarray]:
    """Residuals of ``i df+/dt - (S.k) f+`` and ``i df-/dt + (S.k) f-`` at (x, t)."""
    f_plus, f_minus = w.fields(x, t)
    sk = s_dot_k(w.k)
    # i * d/dt -> i * (-i omega) = omega
    r_plus = w.omega * f_plus - sk @ f_plus
    r_minus = w.omega * f_minus + sk @ f_minus
    return r_plus, r_minus


def transversality_residual(w: RSPlaneWave, x: Sequence[float], t: float) -> tuple[complex, complex]:
    """``p.f+`` and ``p.f-`` with p = -i grad, i.e. k.f on the plane wave."""
    f_plus, f_minus = w.fields(x, t)
    return complex(w.k @ f_plus), complex(w.k @ f_minus)


def majorana_max_residual(w: RSPlaneWave, x: Sequence[float], t: float) -> float:
    r_plus, r_minus = majorana_residual(w, x, t)
    d_plus, d_minus = transversality_residual(w, x, t)
    return float(max(np.max(np.abs(r_plus)), np.max(np.abs(r_minus)), abs(d_plus), abs(d_minus)))


def curl_form_residual(w: RSPlaneWave, x: Sequence[float], t: float) -> float:
    """Max magnitude of dE/dt - curl H, dH/dt + curl E, div E, div H.

    E and H are the real and imaginary parts of f+ at (x, t).
    """
    F, _ = w.fields(x, t)
    dF_dt = -1j * w.omega * F
    curl_F = 1j * np.cross(w.k, F)
    div_F = 1j * (w.k @ F)
    r1 = dF_dt.real - curl_F.imag
    r2 = dF_dt.imag + curl_F.real
    return float(max(np.max(np.abs(r1)), np.max(np.abs(r2)), abs(div_F.real), abs(div_F.imag)))


def big_gamma_form_residual(w: RSPlaneWave, x: Sequence[float], t: float) -> np.ndarray:
    """``i Gamma^mu d_mu f`` for the stacked field f = (f+, f-)."""
    f = np.concatenate(w.fields(x, t))
    # i * d_0 -> omega, i * d_j -> -k_j
    out = w.omega * (_BIG[0] @ f)
    for j in range(3):
        out = out - w.k[j] * (_BIG[j + 1] @ f)
    return out


def helicity_spectrum(k: Sequence[float]) -> np.ndarray:
    """Ascending eigenvalues of S.k_hat."""
    k = _vec3(k)
    norm = float(np.linalg.norm(k))
    if norm == 0.0:
        raise ValueError("wave vector must be nonzero")
    return np.linalg.eigvalsh(s_dot_k(k / norm))


def time_period_deviation(w: RSPlaneWave, x: Sequence[float], t: float, periods: int = 1) -> float:
    """``|f(x, t + n T) - f(x, t)|`` with T = 2 pi / omega."""
    T = 2 * math.pi / w.omega
    a_plus, a_minus = w.fields(x, t)
    b_plus, b_minus = w.fields(x, t + periods * T)
    return float(max(np.max(np.abs(b_plus - a_plus)), np.max(np.abs(b_minus - a_minus))))


def wave_residuals(w: RSPlaneWave, points: np.ndarray) -> dict[str, float]:
    """Max of each residual family over rows ``(x, y, z, t)`` of ``points``."""
    out = {"majorana": 0.0, "curl": 0.0, "gamma": 0.0}
    for row in points:
        x, t = row[:3], float(row[3])
        out["majorana"] = max(out["majorana"], majorana_max_residual(w, x, t))
        out["curl"] = max(out["curl"], curl_form_residual(w, x, t))
        out["gamma"] = max(out["gamma"], float(np.max(np.abs(big_gamma_form_residual(w, x, t)))))
    return out
