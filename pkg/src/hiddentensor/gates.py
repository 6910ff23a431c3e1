"""Gates on hidden digits and Bell correlations of a single oscillator.

Gates act on one digit ``l_j`` of ``n = ... + N^j l_j + ...`` through
:func:`hiddentensor.tensor.embed_at`.  The truncation ``D`` must be a multiple
of ``N^(j+1)`` so that every block the gate mixes is complete and the gate is
exactly unitary.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, lgamma
from typing import NamedTuple

import numpy as np

from .coherent import coherent_state
from .errors import ConfigurationError, DimensionError, DomainError
from .fock import as_state, unitarity_defect
from .parity import PAULI
from .tensor import FactorSplit, embed_at

__all__ = [
    "HADAMARD",
    "GateSpec",
    "gate_matrix",
    "build_gate",
    "CoherentHadamard",
    "hadamard_coherent_closed_form",
    "hadamard_on_coherent",
    "geometric_weights",
    "build_singlet",
    "direction",
    "bell_correlation",
    "chsh",
    "chsh_from_angles",
]

HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)

_FIXED = {
    "hadamard": HADAMARD,
    "pauli_x": PAULI[0],
    "pauli_y": PAULI[1],
    "pauli_z": PAULI[2],
}
KINDS = tuple(_FIXED) + ("custom", "digit_multiplier")


@dataclass(frozen=True)
class GateSpec:
    kind: str
    position: int = 0
    N: int = 2
    matrix: np.ndarray | None = field(default=None, compare=False)
    multiplier: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigurationError(f"unknown gate kind {self.kind!r}; choose from {KINDS}")
        if self.position < 0:
            raise ConfigurationError(f"position must be >= 0, got {self.position}")
        if self.kind in _FIXED and self.N != 2:
            raise ConfigurationError(f"{self.kind} acts on qubits (N=2), got N={self.N}")
        if self.kind == "custom":
            if self.matrix is None:
                raise ConfigurationError("custom gate needs a matrix")
            m = np.asarray(self.matrix, dtype=complex)
            if m.shape != (self.N, self.N):
                raise ConfigurationError(f"custom matrix must be {self.N}x{self.N}, got {m.shape}")
            if unitarity_defect(m) >= 1e-12:
                raise ConfigurationError("custom matrix is not unitary to 1e-12")
            object.__setattr__(self, "matrix", m)
        if self.kind == "digit_multiplier":
            if self.multiplier is None:
                raise ConfigurationError("digit_multiplier needs a multiplier")
            if gcd(self.multiplier, self.N) != 1:
                raise ConfigurationError(
                    f"l -> {self.multiplier} l mod {self.N} is not a bijection (gcd != 1)"
                )


def gate_matrix(g: GateSpec) -> np.ndarray:
    """The ``N x N`` matrix acting on the selected digit."""
    if g.kind in _FIXED:
        return _FIXED[g.kind]
    if g.kind == "custom":
        return g.matrix
    P = np.zeros((g.N, g.N), dtype=complex)
    l = np.arange(g.N)
    P[(g.multiplier * l) % g.N, l] = 1.0
    return P


def build_gate(g: GateSpec, D: int) -> np.ndarray:
    block = g.N ** (g.position + 1)
    if D % block:
        raise DimensionError(f"D={D} must be a multiple of {g.N}^{g.position + 1}={block}")
    return embed_at(gate_matrix(g), g.position, FactorSplit.for_dim(D, g.N, g.position + 1))


def _coherent_amplitude(z: complex, n: int) -> complex:
    """``z^n / sqrt(n!)`` by direct power (independent of the log recurrence)."""
    if n < 0:
        return 0.0
    return z**n / np.exp(0.5 * lgamma(n + 1))


def hadamard_coherent_closed_form(z: complex, position: int, D: int) -> np.ndarray:
    """``<n|H_j|z>`` from the piecewise closed form, for ``n < D``.

    ``H_0``: ``n`` even -> ``c_n + c_{n+1}``, odd -> ``c_{n-1} - c_n``;
    ``H_1``: ``n = 4k + l_0`` -> ``c_n + c_{n+2}``, ``n = 4k + 2 + l_0`` ->
    ``c_{n-2} - c_n``; all times ``e^{-|z|^2/2}/sqrt(2)``.
    """
    if position not in (0, 1):
        raise DomainError(f"closed form known for positions 0 and 1, got {position}")
    z = complex(z)
    shift = 2**position
    pref = np.exp(-abs(z) ** 2 / 2) / np.sqrt(2)
    out = np.empty(D, dtype=complex)
    for n in range(D):
        if (n // shift) % 2 == 0:
            out[n] = _coherent_amplitude(z, n) + _coherent_amplitude(z, n + shift)
        else:
            out[n] = _coherent_amplitude(z, n - shift) - _coherent_amplitude(z, n)
    return pref * out


class CoherentHadamard(NamedTuple):
    numeric: np.ndarray
    closed_form: np.ndarray
    residual: float


def hadamard_on_coherent(z: complex, position: int, D: int) -> CoherentHadamard:
    """Apply ``H_position`` to the truncated ``|z>`` and compare with the closed form."""
    H = build_gate(GateSpec("hadamard", position), D)
    numeric = H @ coherent_state(z, D)
    closed = hadamard_coherent_closed_form(z, position, D)
    return CoherentHadamard(numeric, closed, float(np.max(np.abs(numeric - closed))))


def geometric_weights(count: int, r: float = 0.5) -> np.ndarray:
    """Normalised outer weights ``psi_k ~ r^k``, ``k < count``."""
    w = r ** np.arange(count, dtype=float)
    return (w / np.linalg.norm(w)).astype(complex)


def build_singlet(weights, D: int | None = None) -> np.ndarray:
    """``(1/sqrt 2) sum_k psi_k (|4k+1> - |4k+2>)``."""
    w = as_state(weights)
    if abs(np.linalg.norm(w) - 1.0) >= 1e-12:
        raise DomainError("outer weights must be normalised")
    D = 4 * w.size if D is None else D
    if D < 4 * w.size or D % 4:
        raise DimensionError(f"D must be a multiple of 4 and >= {4 * w.size}, got {D}")
    psi = np.zeros(D, dtype=complex)
    k = np.arange(w.size)
    psi[4 * k + 1] = w / np.sqrt(2)
    psi[4 * k + 2] = -w / np.sqrt(2)
    return psi


def direction(theta: float, phi: float = 0.0) -> np.ndarray:
    """Unit vector at polar angle ``theta`` and azimuth ``phi`` (radians)."""
    return np.array([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)])


def _spin_along(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    return v[0] * PAULI[0] + v[1] * PAULI[1] + v[2] * PAULI[2]


def bell_correlation(psi, a, b) -> float:
    """``<psi| I (x) a.sigma (x) b.sigma |psi>`` with ``a`` on bit 1 and ``b`` on bit 0."""
    psi = as_state(psi)
    split = FactorSplit.for_dim(psi.size, 2, 2)
    op = embed_at(_spin_along(a), 1, split) @ embed_at(_spin_along(b), 0, split)
    return float(np.real(np.vdot(psi, op @ psi)))


def chsh(psi, a, a2, b, b2) -> float:
    """``E(a,b) - E(a,b') + E(a',b) + E(a',b')`` (signed)."""
    return (bell_correlation(psi, a, b) - bell_correlation(psi, a, b2)
            + bell_correlation(psi, a2, b) + bell_correlation(psi, a2, b2))


def chsh_from_angles(psi, angles_deg) -> dict:
    """CHSH value for four in-plane (x-z) directions given in degrees ``(a, a', b, b')``."""
    a, a2, b, b2 = (direction(np.deg2rad(t)) for t in angles_deg)
    E = {
        "ab": bell_correlation(psi, a, b),
        "ab'": bell_correlation(psi, a, b2),
        "a'b": bell_correlation(psi, a2, b),
        "a'b'": bell_correlation(psi, a2, b2),
    }
    S = E["ab"] - E["ab'"] + E["a'b"] + E["a'b'"]
    return {"E": E, "S_signed": S, "S": abs(S)}
