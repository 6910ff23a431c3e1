"""Coherent states and their hidden-subsystem statistics.

All Poisson weights ``e^{-|z|^2} |z|^{2n} / n!`` are accumulated in log space,
so nothing overflows for ``|z|`` up to ~6 and ``n`` up to ~1024.
"""

from __future__ import annotations

from math import exp, lgamma, log

import numpy as np
from scipy.special import pdtrc

from .errors import DomainError, TruncationError

__all__ = [
    "poisson_weight",
    "truncation_deficit",
    "default_dim",
    "coherent_state",
    "hidden_outer_pmf",
    "hidden_inner_pmf",
    "three_subsystem_outer_pmf",
    "three_subsystem_qubit_rho",
]


def poisson_weight(n: int, mu: float) -> float:
    """``e^{-mu} mu^n / n!``."""
    if mu == 0.0:
        return 1.0 if n == 0 else 0.0
    return exp(n * log(mu) - mu - lgamma(n + 1))


def truncation_deficit(z: complex, D: int) -> float:
    """Weight of ``|z>`` outside the first ``D`` levels, ``P(Poisson(|z|^2) >= D)``."""
    return float(pdtrc(D - 1, abs(z) ** 2))


def default_dim(z: complex, tol: float = 1e-12) -> int:
    """Smallest power of two ``D`` with truncation deficit below ``tol``."""
    D = 2
    while truncation_deficit(z, D) >= tol:
        D *= 2
    return D


def coherent_state(z: complex, D: int | None = None, tol: float = 1e-10) -> np.ndarray:
    """Truncated ``|z>`` with amplitudes ``e^{-|z|^2/2} z^n / sqrt(n!)``.

    Raises :class:`TruncationError` if more than ``tol`` of the weight lies
    beyond ``D`` levels.
    """
    z = complex(z)
    if D is None:
        D = default_dim(z)
    if D < 1:
        raise DomainError(f"D must be >= 1, got {D}")
    deficit = truncation_deficit(z, D)
    if deficit >= tol:
        raise TruncationError(
            f"|z|={abs(z):.3g} loses {deficit:.2e} beyond D={D}; use D >= {default_dim(z, tol)}"
        )
    psi = np.zeros(D, dtype=complex)
    if z == 0:
        psi[0] = 1.0
        return psi
    # log psi_n = log psi_{n-1} + log z - log(n)/2
    n = np.arange(1, D)
    steps = np.log(z) - 0.5 * np.log(n)
    logpsi = np.concatenate([[-abs(z) ** 2 / 2], -abs(z) ** 2 / 2 + np.cumsum(steps)])
    return np.exp(logpsi)


def hidden_outer_pmf(z: complex, N: int, k):
    """``(rho_inf)_{kk} = e^{-|z|^2} sum_{l<N} |z|^{2(Nk+l)} / (Nk+l)!``.

    Probability that the excitation number lies in ``[Nk, Nk+N-1]``.
    """
    mu = abs(z) ** 2
    ks = np.atleast_1d(np.asarray(k, dtype=np.int64))
    out = np.array([sum(poisson_weight(N * kk + l, mu) for l in range(N)) for kk in ks])
    return float(out[0]) if np.ndim(k) == 0 else out


def hidden_inner_pmf(z: complex, N: int, l, D: int | None = None):
    """``(rho_N)_{ll} = e^{-|z|^2} sum_k |z|^{2(Nk+l)} / (Nk+l)!``, summed over ``Nk+l < D``.

    Probability that the excitation number is ``l`` modulo ``N``.
    """
    mu = abs(z) ** 2
    if D is None:
        D = default_dim(z) + N
    ls = np.atleast_1d(np.asarray(l, dtype=np.int64))
    if np.any((ls < 0) | (ls >= N)):
        raise DomainError(f"residue must lie in [0, {N})")
    out = np.array([sum(poisson_weight(n, mu) for n in range(int(ll), D, N)) for ll in ls])
    return float(out[0]) if np.ndim(l) == 0 else out


def three_subsystem_outer_pmf(z: complex, k):
    """Outer marginal of the split ``n = 4k + 2 l_1 + l_0`` (N = 2, two inner bits)."""
    mu = abs(z) ** 2
    ks = np.atleast_1d(np.asarray(k, dtype=np.int64))
    out = np.array([
        sum(poisson_weight(4 * kk + 2 * l1 + l0, mu) for l1 in (0, 1) for l0 in (0, 1))
        for kk in ks
    ])
    return float(out[0]) if np.ndim(k) == 0 else out


def three_subsystem_qubit_rho(z: complex, position: int, D: int) -> np.ndarray:
    """Closed-form 2x2 reduced matrix of hidden bit ``l_1`` or ``l_0`` of ``|z>``.

    Summed over ``k < D/4``, i.e. the same truncation as the partial trace of
    ``coherent_state(z, D)``.
    """
    if D % 4:
        raise DomainError(f"D must be a multiple of 4, got {D}")
    if position not in (0, 1):
        raise DomainError(f"position must be 0 or 1, got {position}")
    z = complex(z)
    mu = abs(z) ** 2
    rho = np.zeros((2, 2), dtype=complex)
    for k in range(D // 4):
        for l in (0, 1):
            if position == 1:
                m = 4 * k + l
                c = np.sqrt((m + 1) * (m + 2))
                block = np.array([[1, np.conj(z) ** 2 / c], [z**2 / c, mu**2 / c**2]])
            else:
                m = 4 * k + 2 * l
                c = np.sqrt(m + 1)
                block = np.array([[1, np.conj(z) / c], [z / c, mu / c**2]])
            rho += poisson_weight(m, mu) * block
    return rho
