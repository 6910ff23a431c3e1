"""Brandt-Greenberg N-boson operators.

Three constructions of the same annihilator ``A_N`` are provided:

* tensor form:  ``b (x) I_N`` on the split ``n = N k + l``;
* closed form:  matrix elements ``<n|A_N|n+N> = sqrt(floor(n/N) + 1)``;
* series form:  ``sum_j alpha_j a^dagger^j a^(j+N)`` (normal ordered).

The series is an alternating sum whose terms grow like factorials, so it is
evaluated in mpmath at a working precision chosen from a bound on the largest
term and rounded to float64 only at the end.
"""

from __future__ import annotations

import warnings
from functools import lru_cache
from math import ceil, lgamma, log
from typing import NamedTuple

import mpmath
import numpy as np
from scipy.linalg import expm

from .errors import DomainError, TruncationWarning
from .fock import adjoint, annihilator, basis_state, commutator
from .tensor import FactorSplit, embed_left

__all__ = [
    "bg_annihilator_tensor",
    "bg_annihilator_closed",
    "bg_annihilator_series",
    "bg_creator",
    "bg_alpha",
    "series_precision",
    "bg_form_deviations",
    "bg_compose_check",
    "bg_commutator_check",
    "bg_commutator_boundary",
    "DisplacedState",
    "bg_displace",
    "quadrature_variance",
]

_LN10 = log(10.0)


def bg_annihilator_tensor(N: int, K: int) -> np.ndarray:
    """``A_N = b (x) I_N`` on ``D = N K``."""
    if N < 1 or K < 2:
        raise DomainError(f"need N >= 1 and K >= 2, got N={N}, K={K}")
    return embed_left(annihilator(K), FactorSplit(N, K))


def bg_annihilator_closed(N: int, D: int) -> np.ndarray:
    if N < 1 or D < N + 1:
        raise DomainError(f"need N >= 1 and D >= N + 1, got N={N}, D={D}")
    n = np.arange(D - N)
    out = np.zeros((D, D), dtype=complex)
    out[n, n + N] = np.sqrt(n // N + 1.0)
    return out


def bg_creator(N: int, D: int) -> np.ndarray:
    return adjoint(bg_annihilator_closed(N, D))


def _log10_alpha_bound(N: int, J: int) -> np.ndarray:
    """log10 of ``sum_l |term_l|`` for each alpha_j; bounds alpha_j and its rounding error."""
    logg = np.array([0.5 * (log(1 + l // N) - lgamma(l + 1) - lgamma(l + N + 1)) for l in range(J + 1)])
    out = np.empty(J + 1)
    for j in range(J + 1):
        t = logg[: j + 1] - np.array([lgamma(j - l + 1) for l in range(j + 1)])
        top = t.max()
        out[j] = (top + log(np.exp(t - top).sum())) / _LN10
    return out


def series_precision(N: int, D: int, J: int, guard: int = 25) -> int:
    """Decimal digits needed so that the series rounds correctly on ``D`` levels."""
    J = min(J, D - 1)
    a = _log10_alpha_bound(N, J)
    worst = 0.0
    for m in range(D - N):
        j = np.arange(min(m, J) + 1)
        lg = np.array([lgamma(m - jj + 1) for jj in j])
        terms = a[j] + (0.5 * (lgamma(m + N + 1) + lgamma(m + 1)) - lg) / _LN10
        worst = max(worst, float(terms.max()))
    return int(ceil(worst)) + guard


@lru_cache(maxsize=64)
def _alpha_mp(N: int, J: int, dps: int) -> tuple:
    with mpmath.workdps(dps):
        g = [mpmath.sqrt(mpmath.mpf(1 + l // N) / (mpmath.factorial(l) * mpmath.factorial(l + N)))
             for l in range(J + 1)]
        inv_fact = [1 / mpmath.factorial(i) for i in range(J + 1)]
        alpha = []
        for j in range(J + 1):
            alpha.append(mpmath.fsum((-1) ** (j - l) * inv_fact[j - l] * g[l] for l in range(j + 1)))
        return tuple(alpha)


def bg_alpha(N: int, J: int, dps: int | None = None) -> np.ndarray:
    """Normal-ordering coefficients ``alpha_j`` for ``j = 0..J`` as float64.

    ``alpha_j = sum_{l<=j} (-1)^(j-l)/(j-l)! sqrt((1 + floor(l/N)) / (l! (l+N)!))``.
    The values decay factorially and underflow float64 to
    zero from ``j = 203`` on for N = 2; the mpmath table used by
    :func:`bg_annihilator_series` keeps them all.
    """
    if dps is None:
        dps = int(ceil(-_log10_alpha_bound(N, J).min())) + 40
    return np.array([float(a) for a in _alpha_mp(N, J, dps)])


def bg_annihilator_series(N: int, D: int, J: int | None = None, dps: int | None = None) -> np.ndarray:
    """``sum_{j<=J} alpha_j a^dagger^j a^(j+N)`` on ``D`` levels.

    The monomial ``a^dagger^j a^(j+N)`` only has the entries
    ``<m|.|m+N> = sqrt(m! (m+N)!) / (m-j)!`` for ``m >= j``, so row ``m`` is
    complete once ``J >= m``.  A cutoff below ``D - N - 1`` leaves rows
    unconverged; this is reported with a warning and shows up in
    :func:`bg_form_deviations`.
    """
    if N < 1 or D < N + 1:
        raise DomainError(f"need N >= 1 and D >= N + 1, got N={N}, D={D}")
    J = D if J is None else J
    if J < D - N - 1:
        warnings.warn(f"series cutoff J={J} < D-N-1={D - N - 1}: upper rows are incomplete",
                      TruncationWarning, stacklevel=2)
    Jeff = min(J, D - 1)
    if dps is None:
        dps = series_precision(N, D, Jeff)
    alpha = _alpha_mp(N, Jeff, dps)
    out = np.zeros((D, D), dtype=complex)
    with mpmath.workdps(dps):
        fact = [mpmath.factorial(i) for i in range(D + N)]
        for m in range(D - N):
            scale = mpmath.sqrt(fact[m] * fact[m + N])
            s = mpmath.fsum(alpha[j] * scale / fact[m - j] for j in range(min(m, Jeff) + 1))
            out[m, m + N] = float(s)
    return out


def _interior(X: np.ndarray, margin: int) -> np.ndarray:
    cut = X.shape[0] - margin
    return X[:cut, :cut]


def bg_form_deviations(N: int, D: int, J: int | None = None) -> dict[str, float]:
    """Pairwise max deviations of the three builders on the interior block ``n < D - N``."""
    if D % N:
        raise DomainError(f"tensor form needs D divisible by N, got D={D}, N={N}")
    tensor = _interior(bg_annihilator_tensor(N, D // N), N)
    closed = _interior(bg_annihilator_closed(N, D), N)
    series = _interior(bg_annihilator_series(N, D, J), N)
    return {
        "tensor_closed": float(np.max(np.abs(tensor - closed))),
        "tensor_series": float(np.max(np.abs(tensor - series))),
        "closed_series": float(np.max(np.abs(closed - series))),
    }


def bg_compose_check(N: int, N2: int, K: int) -> float:
    """``max |A_{N N2} - A_N (x)_{N2} I|`` on ``D = N N2 K``; exactly zero when the law holds."""
    if K < 2:
        raise DomainError(f"need K >= 2, got {K}")
    D = N * N2 * K
    direct = bg_annihilator_closed(N * N2, D)
    composed = embed_left(bg_annihilator_closed(N, N * K), FactorSplit(N2, N * K))
    return float(np.max(np.abs(direct - composed)))


def bg_commutator_check(N: int, D: int) -> float:
    """``max |[A_N, A_N^dagger] - I|`` on the interior ``n < D - N``."""
    if D % N:
        raise DomainError(f"D must be a multiple of N, got D={D}, N={N}")
    A = bg_annihilator_closed(N, D)
    dev = commutator(A, adjoint(A)) - np.eye(D)
    return float(np.max(np.abs(_interior(dev, N))))


def bg_commutator_boundary(N: int, D: int) -> np.ndarray:
    """Diagonal of ``[A_N, A_N^dagger] - I`` on the top ``N`` levels (truncation artefact)."""
    A = bg_annihilator_closed(N, D)
    dev = commutator(A, adjoint(A)) - np.eye(D)
    return np.real(np.diag(dev)[D - N:])


class DisplacedState(NamedTuple):
    state: np.ndarray
    leakage: float


def bg_displace(z: complex, N: int, D: int, leak_tol: float = 1e-6) -> DisplacedState:
    """``exp(z A_N^dagger - conj(z) A_N)|0>`` on ``D`` levels.

    The truncated generator is anti-Hermitian, so the propagator is exactly
    unitary and the norm cannot signal truncation.  ``leakage`` is instead the
    weight left on the top ``N`` levels, where the truncated commutator is
    wrong; above ``leak_tol`` a :class:`TruncationWarning` is issued.
    """
    A = bg_annihilator_closed(N, D)
    G = z * adjoint(A) - np.conj(z) * A
    psi = expm(G) @ basis_state(0, D)
    leakage = float(np.sum(np.abs(psi[D - N:]) ** 2))
    if leakage > leak_tol:
        warnings.warn(f"displaced state leaks {leakage:.3e} onto the truncation boundary; raise D",
                      TruncationWarning, stacklevel=2)
    return DisplacedState(psi, leakage)


def quadrature_variance(psi, theta: float = 0.0) -> float:
    """Variance of ``X_theta = (a e^{-i theta} + a^dagger e^{i theta}) / sqrt(2)`` (vacuum: 1/2)."""
    psi = np.asarray(psi, dtype=complex)
    a = annihilator(psi.size)
    X = (a * np.exp(-1j * theta) + adjoint(a) * np.exp(1j * theta)) / np.sqrt(2)
    mean = np.vdot(psi, X @ psi).real
    second = np.vdot(psi, X @ (X @ psi)).real
    return float(second - mean**2)
