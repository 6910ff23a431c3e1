"""Truncated Fock-space containers and ladder operators.

States are 1-d complex arrays of length ``D``, operators are dense ``D x D``
complex arrays and density matrices are small Hermitian arrays.  The helpers
below build and validate them; nothing renormalises implicitly.
"""

from __future__ import annotations

from math import lgamma

import numpy as np

from .errors import DomainError

# normalisation tolerances: exact constructions vs. truncated analytic states
EXACT_TOL = 1e-12
TRUNCATED_TOL = 1e-8


def as_state(psi, dim: int | None = None) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    if psi.ndim != 1 or psi.size < 1:
        raise DomainError(f"a state must be a non-empty 1-d array, got shape {psi.shape}")
    if dim is not None and psi.size != dim:
        raise DomainError(f"state has dimension {psi.size}, expected {dim}")
    return psi


def norm(psi) -> float:
    return float(np.linalg.norm(as_state(psi)))


def is_normalized(psi, tol: float = EXACT_TOL) -> bool:
    return abs(norm(psi) - 1.0) < tol


def check_normalized(psi, tol: float = EXACT_TOL) -> np.ndarray:
    psi = as_state(psi)
    deviation = abs(np.linalg.norm(psi) - 1.0)
    if deviation >= tol:
        raise DomainError(f"state is not normalised: |norm - 1| = {deviation:.3e}")
    return psi


def basis_state(n: int, D: int) -> np.ndarray:
    if not 0 <= n < D:
        raise DomainError(f"basis index {n} outside [0, {D})")
    e = np.zeros(D, dtype=complex)
    e[n] = 1.0
    return e


def annihilator(D: int) -> np.ndarray:
    """Truncated ``a`` with ``<n|a|n+1> = sqrt(n+1)``."""
    if D < 2:
        raise DomainError(f"ladder operators need D >= 2, got {D}")
    return np.diag(np.sqrt(np.arange(1, D, dtype=float)), 1).astype(complex)


def creator(D: int) -> np.ndarray:
    return adjoint(annihilator(D))


def number_operator(D: int) -> np.ndarray:
    return np.diag(np.arange(D, dtype=float)).astype(complex)


def adjoint(X) -> np.ndarray:
    return np.conj(np.asarray(X)).T


def commutator(X, Y) -> np.ndarray:
    return X @ Y - Y @ X


def inner(u, v) -> complex:
    """``<u|v>``, conjugate-linear in ``u``."""
    u = as_state(u)
    v = as_state(v)
    if u.size != v.size:
        raise DomainError(f"dimension mismatch: {u.size} vs {v.size}")
    return complex(np.vdot(u, v))


def apply(op, psi) -> np.ndarray:
    op = np.asarray(op)
    psi = as_state(psi)
    if op.shape != (psi.size, psi.size):
        raise DomainError(f"operator of shape {op.shape} cannot act on dimension {psi.size}")
    return op @ psi


def expectation(op, psi) -> complex:
    return inner(psi, apply(op, psi))


def unitarity_defect(U) -> float:
    """``max |U^dagger U - I|``."""
    U = np.asarray(U)
    return float(np.max(np.abs(adjoint(U) @ U - np.eye(U.shape[0]))))


def density_defects(rho) -> dict[str, float]:
    """Hermiticity, positivity and trace defects of a candidate density matrix."""
    rho = np.asarray(rho)
    herm = float(np.max(np.abs(rho - adjoint(rho))))
    evals = np.linalg.eigvalsh((rho + adjoint(rho)) / 2)
    return {
        "hermiticity": herm,
        "min_eigenvalue": float(evals.min()),
        "trace_deviation": abs(complex(np.trace(rho)) - 1.0),
    }


def check_density(rho, trace_tol: float = 1e-10, herm_tol: float = EXACT_TOL,
                  eig_tol: float = 1e-10) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise DomainError(f"density matrix must be square, got shape {rho.shape}")
    d = density_defects(rho)
    if d["hermiticity"] >= herm_tol:
        raise DomainError(f"density matrix not Hermitian (defect {d['hermiticity']:.3e})")
    if d["min_eigenvalue"] < -eig_tol:
        raise DomainError(f"density matrix not positive (min eigenvalue {d['min_eigenvalue']:.3e})")
    if d["trace_deviation"] >= trace_tol:
        raise DomainError(f"density matrix trace off by {d['trace_deviation']:.3e}")
    return rho


def purity(rho) -> float:
    rho = np.asarray(rho)
    return float(np.real(np.trace(rho @ rho)))


def normal_monomial(p: int, q: int, D: int) -> np.ndarray:
    """Matrix of ``a^dagger^p a^q`` on the truncated space, built from elements.

    ``<m| a^dagger^p a^q |m - p + q> = sqrt(m! (m - p + q)!) / (m - p)!`` for
    ``m >= p``.  Built in log space so large powers do not overflow the way
    repeated products of ladder matrices would.
    """
    out = np.zeros((D, D), dtype=complex)
    for m in range(p, D):
        col = m - p + q
        if col >= D:
            break
        out[m, col] = np.exp(0.5 * (lgamma(m + 1) + lgamma(col + 1)) - lgamma(m - p + 1))
    return out
