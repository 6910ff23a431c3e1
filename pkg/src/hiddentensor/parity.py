"""Hidden spin of a spinless particle in a box.

The even/odd digit of ``n = 2k + l`` is treated as a spinor index.  In the
standing-wave basis on ``[-L/2, L/2]``

    <x|2j>   = sqrt(2/L) cos((2j+1) pi x / L)   (even)
    <x|2j+1> = sqrt(2/L) sin((2j+2) pi x / L)   (odd)

this hidden spin coincides with parity.  Algebraic quantities (Bloch vector,
spin probabilities) are computed from coefficients; the grid is only used for
position densities.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson

from .errors import DomainError, ResolutionError
from .fock import as_state

__all__ = [
    "PAULI",
    "GridWavefunction",
    "grid",
    "integrate",
    "standing_wave",
    "synthesize",
    "split_components",
    "hidden_density",
    "spin_probabilities",
    "bloch_vector",
    "spinor_rotate",
    "su2_to_so3",
]

DEFAULT_POINTS = 4097

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


@dataclass(frozen=True)
class GridWavefunction:
    x: np.ndarray
    samples: np.ndarray
    L: float

    @property
    def P(self) -> int:
        return self.x.size

    def norm2(self) -> float:
        return integrate(np.abs(self.samples) ** 2, self.x)

    def reflected(self) -> np.ndarray:
        """Samples of ``psi(-x)``; the grid is symmetric about 0."""
        return self.samples[::-1]


def grid(L: float, P: int = DEFAULT_POINTS) -> np.ndarray:
    if P < 3 or P % 2 == 0:
        raise ResolutionError(f"composite Simpson needs an odd number of points >= 3, got {P}")
    if L <= 0:
        raise DomainError(f"interval length must be positive, got {L}")
    return np.linspace(-L / 2, L / 2, P)


def integrate(values, x) -> float | complex:
    """Composite Simpson rule on the uniform grid ``x``."""
    out = simpson(values, x=x)
    return float(out) if np.isrealobj(out) else complex(out)


def _max_index(P: int) -> int:
    return P // 8


def standing_wave(n: int, L: float, P: int = DEFAULT_POINTS) -> GridWavefunction:
    if n < 0:
        raise DomainError(f"basis index must be >= 0, got {n}")
    if n > _max_index(P):
        raise ResolutionError(f"index {n} too high for {P} grid points (limit {_max_index(P)})")
    x = grid(L, P)
    j, parity = divmod(n, 2)
    if parity == 0:
        y = np.sqrt(2 / L) * np.cos((2 * j + 1) * np.pi * x / L)
    else:
        y = np.sqrt(2 / L) * np.sin((2 * j + 2) * np.pi * x / L)
    return GridWavefunction(x, y.astype(complex), L)


def _basis_matrix(D: int, L: float, P: int) -> np.ndarray:
    return np.stack([standing_wave(n, L, P).samples for n in range(D)], axis=1)


def synthesize(coeffs, L: float, P: int = DEFAULT_POINTS) -> GridWavefunction:
    """``psi(x) = sum_n psi_n <x|n>``."""
    c = as_state(coeffs)
    return GridWavefunction(grid(L, P), _basis_matrix(c.size, L, P) @ c, L)


def split_components(coeffs, L: float, P: int = DEFAULT_POINTS) -> tuple[GridWavefunction, GridWavefunction]:
    """``(psi_0(x), psi_1(x))`` with ``psi_l(x) = sum_k psi_{2k+l} <x|2k+l>``."""
    c = as_state(coeffs)
    B = _basis_matrix(c.size, L, P)
    x = grid(L, P)
    even = np.arange(0, c.size, 2)
    odd = np.arange(1, c.size, 2)
    return (GridWavefunction(x, B[:, even] @ c[even], L),
            GridWavefunction(x, B[:, odd] @ c[odd], L))


def hidden_density(psi0: GridWavefunction, psi1: GridWavefunction) -> tuple[np.ndarray, np.ndarray]:
    """``(rho_hid, interference)``; position density is their sum.

    ``rho_hid = |psi_0|^2 + |psi_1|^2`` and ``interference = 2 Re(conj(psi_0) psi_1)``.
    """
    a, b = psi0.samples, psi1.samples
    rho_hid = np.abs(a) ** 2 + np.abs(b) ** 2
    interference = 2 * np.real(np.conj(a) * b)
    return rho_hid, interference


def _spinor_rows(coeffs) -> np.ndarray:
    c = as_state(coeffs)
    if c.size % 2:
        c = np.concatenate([c, [0]])
    return c.reshape(-1, 2)


def spin_probabilities(coeffs) -> tuple[float, float]:
    """``(p_0, p_1)`` of the hidden spin, from coefficients."""
    rows = _spinor_rows(coeffs)
    p = np.sum(np.abs(rows) ** 2, axis=0)
    return float(p[0]), float(p[1])


def bloch_vector(coeffs) -> np.ndarray:
    """``s_i = sum_k sum_{l,l'} conj(psi_{2k+l}) sigma_i[l,l'] psi_{2k+l'}``."""
    rows = _spinor_rows(coeffs)
    return np.array([np.real(np.einsum("kl,lm,km->", np.conj(rows), s, rows)) for s in PAULI])


def spinor_rotate(coeffs, U) -> np.ndarray:
    """``(I (x) U) psi``: ``psi_{2k+l} -> sum_l' U[l,l'] psi_{2k+l'}``."""
    c = as_state(coeffs)
    U = np.asarray(U, dtype=complex)
    if U.shape != (2, 2):
        raise DomainError(f"spinor transformation must be 2x2, got {U.shape}")
    if c.size % 2:
        raise DomainError(f"coefficient vector must have even length, got {c.size}")
    return (_spinor_rows(c) @ U.T).reshape(-1)


def su2_to_so3(U) -> np.ndarray:
    """Rotation ``R`` with ``U (r . sigma) U^dagger = (R r) . sigma``."""
    U = np.asarray(U, dtype=complex)
    Ud = np.conj(U).T
    return np.array([[0.5 * np.real(np.trace(PAULI[i] @ U @ PAULI[j] @ Ud)) for j in range(3)]
                     for i in range(3)])
