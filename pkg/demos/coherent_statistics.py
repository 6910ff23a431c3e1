"""
What a coherent state looks like through a hidden factorization.

For |z> the outer label k of n = N k + l has probability
e^{-|z|^2} sum_{l<N} |z|^{2(Nk+l)}/(Nk+l)!, the chance that the photon number
falls in the block [Nk, Nk+N-1].  The inner label gives the photon number
modulo N.  Splitting once more (N = 2 twice) yields two hidden qubits whose
2x2 reduced matrices have closed forms; they are checked here against a
direct partial trace.
"""

import numpy as np

from hiddentensor import coherent
from hiddentensor.tensor import FactorSplit, reduce_at


def main():
    z = 1.0
    print("z = 1, N = 2")
    print("  outer pmf k=0..4:", np.round(coherent.hidden_outer_pmf(z, 2, np.arange(5)), 6))
    print("  2/e =", round(2 / np.e, 6))
    inner = coherent.hidden_inner_pmf(z, 2, [0, 1])
    print(f"  even/odd photon number: {inner[0]:.6f} {inner[1]:.6f}"
          f" (cosh(1)/e = {np.cosh(1) / np.e:.6f}, sinh(1)/e = {np.sinh(1) / np.e:.6f})")

    z = 1.3
    ks = np.arange(8)
    same = np.array_equal(coherent.three_subsystem_outer_pmf(z, ks), coherent.hidden_outer_pmf(z, 4, ks))
    print(f"\nz = {z}: outer pmf of n = 4k + 2 l1 + l0 equals the N=4 pmf: {same}")

    z, D = 0.8 + 0.6j, 64
    psi = coherent.coherent_state(z, D)
    split = FactorSplit.for_dim(D, 2, 2)
    for pos in (1, 0):
        rho = coherent.three_subsystem_qubit_rho(z, pos, D)
        err = np.max(np.abs(rho - reduce_at(psi, pos, split)))
        print(f"\nhidden bit {pos}, z = {z}: closed form vs partial trace {err:.1e}")
        print(np.round(rho, 5))


if __name__ == "__main__":
    main()
