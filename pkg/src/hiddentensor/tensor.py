"""Hidden tensor products on a single truncated Fock space.

A :class:`FactorSplit` reads the basis label as ``n = N^M k + (digits)``, so a
state of dimension ``D = K N^M`` is simultaneously a state of an outer
``K``-level system and ``M`` inner ``N``-level systems.  Embeddings and
partial traces below are written as explicit index maps ``n <-> (k, l)``;
the reshape formulation is only used by :func:`schmidt_classify`, where it is
the definition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import ConfigurationError, DimensionError, DomainError
from .fock import as_state

__all__ = [
    "FactorSplit",
    "hidden_kron",
    "embed_left",
    "embed_right",
    "embed_at",
    "reduce_left",
    "reduce_right",
    "reduce_at",
    "SchmidtResult",
    "schmidt_classify",
    "pad_to_block",
    "compose_identity_check",
]


@dataclass(frozen=True)
class FactorSplit:
    """``D = K * N**levels``; ``levels > 1`` gives a multi-digit inner factor."""

    N: int
    K: int
    levels: int = 1

    def __post_init__(self):
        if self.N < 1:
            raise ConfigurationError(f"inner radix must be >= 1, got {self.N}")
        if self.K < 1:
            raise ConfigurationError(f"outer truncation must be >= 1, got {self.K}")
        if self.levels < 1:
            raise ConfigurationError(f"levels must be >= 1, got {self.levels}")

    @classmethod
    def for_dim(cls, D: int, N: int, levels: int = 1) -> "FactorSplit":
        block = N**levels
        if D % block:
            raise DimensionError(f"D={D} is not a multiple of {N}^{levels}={block}")
        return cls(N, D // block, levels)

    @property
    def inner_dim(self) -> int:
        return self.N**self.levels

    @property
    def D(self) -> int:
        return self.K * self.inner_dim

    def pair(self) -> tuple[np.ndarray, np.ndarray]:
        """``(k, l)`` for every ``n`` in ``range(D)``, ``l`` being the whole inner block."""
        n = np.arange(self.D)
        return n // self.inner_dim, n % self.inner_dim


def _check_state(psi, split: FactorSplit) -> np.ndarray:
    psi = as_state(psi)
    if psi.size != split.D:
        raise DomainError(f"state has dimension {psi.size}, split expects {split.D}")
    return psi


def _check_op(X, dim: int, what: str) -> np.ndarray:
    X = np.asarray(X, dtype=complex)
    if X.shape != (dim, dim):
        raise DomainError(f"{what} must be {dim}x{dim}, got {X.shape}")
    return X


def hidden_kron(f, g, split: FactorSplit | None = None) -> np.ndarray:
    """``|f (x) g>`` with amplitude ``f[n // N] * g[n mod N]`` at ``n``."""
    f = as_state(f)
    g = as_state(g)
    if split is None:
        split = FactorSplit(g.size, f.size)
    if f.size != split.K or g.size != split.inner_dim:
        raise DomainError(
            f"factor dims ({f.size}, {g.size}) do not match split ({split.K}, {split.inner_dim})"
        )
    k, l = split.pair()
    return f[k] * g[l]


def embed_left(Q, split: FactorSplit) -> np.ndarray:
    """``Q (x) I``: ``<Nk+l| . |Nk'+l'> = Q[k, k'] delta(l, l')``."""
    Q = _check_op(Q, split.K, "left operator")
    Nin = split.inner_dim
    out = np.zeros((split.D, split.D), dtype=complex)
    k = np.arange(split.K)
    for l in range(Nin):
        idx = Nin * k + l
        out[np.ix_(idx, idx)] = Q
    return out


def embed_right(R, split: FactorSplit) -> np.ndarray:
    """``I (x) R``: ``<Nk+l| . |Nk'+l'> = delta(k, k') R[l, l']``."""
    Nin = split.inner_dim
    R = _check_op(R, Nin, "right operator")
    out = np.zeros((split.D, split.D), dtype=complex)
    l = np.arange(Nin)
    for k in range(split.K):
        idx = Nin * k + l
        out[np.ix_(idx, idx)] = R
    return out


def embed_at(G, position: int, split: FactorSplit) -> np.ndarray:
    """Act with the ``N x N`` matrix ``G`` on digit ``l_position`` only.

    Position 0 is the least significant digit.  For every column ``m`` the
    digit ``d = (m // N^j) mod N`` is swapped for each ``l`` in the output row
    ``m + (l - d) N^j``.
    """
    N = split.N
    G = _check_op(G, N, "digit operator")
    if not 0 <= position < split.levels:
        raise DomainError(f"position {position} outside [0, {split.levels})")
    w = N**position
    m = np.arange(split.D)
    d = (m // w) % N
    base = m - d * w
    out = np.zeros((split.D, split.D), dtype=complex)
    for l in range(N):
        out[base + l * w, m] = G[l, d]
    return out


def reduce_left(psi, split: FactorSplit) -> np.ndarray:
    """Outer reduced matrix ``rho[k, k'] = sum_l psi[Nk+l] conj(psi[Nk'+l])``."""
    psi = _check_state(psi, split)
    Nin = split.inner_dim
    k = np.arange(split.K)
    rho = np.zeros((split.K, split.K), dtype=complex)
    for l in range(Nin):
        col = psi[Nin * k + l]
        rho += np.outer(col, np.conj(col))
    return rho


def reduce_right(psi, split: FactorSplit) -> np.ndarray:
    """Inner reduced matrix ``rho[l, l'] = sum_k psi[Nk+l] conj(psi[Nk+l'])``."""
    psi = _check_state(psi, split)
    Nin = split.inner_dim
    l = np.arange(Nin)
    rho = np.zeros((Nin, Nin), dtype=complex)
    for k in range(split.K):
        row = psi[Nin * k + l]
        rho += np.outer(row, np.conj(row))
    return rho


def reduce_at(psi, position: int, split: FactorSplit) -> np.ndarray:
    """``N x N`` reduced matrix of digit ``l_position``, tracing ``k`` and the other digits."""
    psi = _check_state(psi, split)
    if not 0 <= position < split.levels:
        raise DomainError(f"position {position} outside [0, {split.levels})")
    N = split.N
    w = N**position
    n = np.arange(split.D)
    # representatives with digit j = 0; digit l sits at rep + l w
    reps = n[(n // w) % N == 0]
    rho = np.zeros((N, N), dtype=complex)
    for r in reps:
        v = psi[r + w * np.arange(N)]
        rho += np.outer(v, np.conj(v))
    return rho


class SchmidtResult(NamedTuple):
    verdict: str
    singular_values: np.ndarray
    rank: int


def schmidt_classify(psi, split: FactorSplit, tol: float = 1e-10) -> SchmidtResult:
    """Product/entangled verdict from the singular values of the ``K x N`` amplitude matrix.

    A singular value counts when it exceeds ``tol`` times the largest one.
    """
    psi = _check_state(psi, split)
    s = np.linalg.svd(psi.reshape(split.K, split.inner_dim), compute_uv=False)
    if s[0] == 0:
        raise DomainError("the zero vector has no Schmidt decomposition")
    rank = int(np.count_nonzero(s > tol * s[0]))
    return SchmidtResult("product" if rank == 1 else "entangled", s, rank)


def pad_to_block(psi, block: int) -> np.ndarray:
    """Zero-pad ``psi`` to the next multiple of ``block`` (the state is unchanged)."""
    psi = as_state(psi)
    extra = (-psi.size) % block
    return np.concatenate([psi, np.zeros(extra, dtype=complex)]) if extra else psi


def compose_identity_check(A, N1: int, N0: int) -> float:
    """``max |(A (x)_{N1} I) (x)_{N0} I - A (x)_{N1 N0} I|`` (zero when the identity holds)."""
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DomainError(f"operator must be square, got {A.shape}")
    K = A.shape[0]
    inner = embed_left(A, FactorSplit(N1, K))
    nested = embed_left(inner, FactorSplit(N0, K * N1))
    direct = embed_left(A, FactorSplit(N1 * N0, K))
    return float(np.max(np.abs(nested - direct)))
