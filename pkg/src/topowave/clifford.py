"""Fixed matrix representations: Dirac gammas, spin-1 matrices and the 6x6 block gammas.

All constructors return fresh ``complex128`` arrays whose entries are exactly
0, +-1 or +-i, so identities between them can be checked with exact equality.

Index convention used throughout the package: index 0 is time, 1..3 are x, y, z.
"""
from __future__ import annotations

import numpy as np

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])
METRIC.setflags(write=False)

_PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

_SPIN = (
    np.array([[0, 0, 0], [0, 0, -1j], [0, 1j, 0]], dtype=complex),
    np.array([[0, 0, 1j], [0, 0, 0], [-1j, 0, 0]], dtype=complex),
    np.array([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]], dtype=complex),
)


def _check_index(name: str, value: int, upper: int) -> None:
    if not isinstance(value, (int, np.integer)) or not 0 <= value < upper:
        raise IndexError(f"{name} must be an integer in 0..{upper - 1}, got {value!r}")


def gamma(mu: int) -> np.ndarray:
    """Dirac gamma matrix in the Dirac (diagonal gamma^0) representation."""
    _check_index("mu", mu, 4)
    g = np.zeros((4, 4), dtype=complex)
    if mu == 0:
        g[:2, :2] = np.eye(2)
        g[2:, 2:] = -np.eye(2)
    else:
        sigma = _PAULI[mu - 1]
        g[:2, 2:] = sigma
        g[2:, :2] = -sigma
    return g


def pauli(k: int) -> np.ndarray:
    _check_index("k", k, 3)
    return _PAULI[k].copy()


def spin_matrix(axis: int) -> np.ndarray:
    """Spin-1 matrix S_x, S_y or S_z with entries (S_k)_{jl} = -i eps_{kjl}."""
    _check_index("axis", axis, 3)
    return _SPIN[axis].copy()


def big_gamma(mu: int) -> np.ndarray:
    """6x6 block matrix acting on the stacked field (f+, f-).

    ``big_gamma(0)`` has identity blocks off the diagonal; ``big_gamma(k)``
    is ``[[0, -S_k], [S_k, 0]]``.
    """
    _check_index("mu", mu, 4)
    g = np.zeros((6, 6), dtype=complex)
    if mu == 0:
        g[:3, 3:] = np.eye(3)
        g[3:, :3] = np.eye(3)
    else:
        s = _SPIN[mu - 1]
        g[:3, 3:] = -s
        g[3:, :3] = s
    return g


def _check_pair(a: np.ndarray, b: np.ndarray) -> None:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a)
    b = np.asarray(b)
    _check_pair(a, b)
    return a @ b + b @ a


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a)
    b = np.asarray(b)
    _check_pair(a, b)
    return a @ b - b @ a


def levi_civita(i: int, j: int, k: int) -> int:
    if len({i, j, k}) < 3:
        return 0
    return 1 if (i, j, k) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)) else -1


def max_deviation(a: np.ndarray, b: np.ndarray) -> float:
    """Largest entrywise magnitude of ``a - b`` (0.0 for exact equality)."""
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b)), initial=0.0))


def algebra_report() -> list[dict]:
    """Check every identity of the gamma/spin/block-gamma algebra.

    Returns one record per identity with keys ``identity``, ``passed`` and
    ``max_deviation``. Comparisons are exact.
    """
    records = []

    def record(name: str, lhs: np.ndarray, rhs: np.ndarray) -> None:
        records.append({
            "identity": name,
            "passed": bool(np.array_equal(lhs, rhs)),
            "max_deviation": max_deviation(lhs, rhs),
        })

    eye4 = np.eye(4, dtype=complex)
    for mu in range(4):
        for nu in range(4):
            record(
                f"{{gamma^{mu},gamma^{nu}}} = 2 g^{mu}{nu} I4",
                anticommutator(gamma(mu), gamma(nu)),
                2 * METRIC[mu, nu] * eye4,
            )
    for i in range(3):
        for j in range(3):
            expected = sum(1j * levi_civita(i, j, k) * spin_matrix(k) for k in range(3))
            record(
                f"[S_{i},S_{j}] = i eps_{i}{j}k S_k",
                commutator(spin_matrix(i), spin_matrix(j)),
                expected,
            )
    for i in range(3):
        s = spin_matrix(i)
        record(f"S_{i} hermitian", s, s.conj().T)
        record(f"S_{i}^3 = S_{i}", s @ s @ s, s)
    g0 = gamma(0)
    record("gamma^0 hermitian", g0, g0.conj().T)
    for k in range(1, 4):
        g = gamma(k)
        record(f"gamma^{k} anti-hermitian", g, -g.conj().T)
    b0 = big_gamma(0)
    record("Gamma^0 squared = I6", b0 @ b0, np.eye(6, dtype=complex))
    return records
