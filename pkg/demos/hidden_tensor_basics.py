"""
A single oscillator already carries tensor-product structure.

Write every excitation number as n = N k + l with 0 <= l < N.  The pair
(k, l) labels the same basis vector |n>, so |n> = |k> (x) |l> without any
second particle.  Whether a state is "entangled" then depends on which N we
pick: (|17> + |18>)/sqrt(2) straddles a block boundary for N = 3 but sits
inside one block for N = 10.

The script prints the index maps, classifies a few states for several N and
shows the outer reduced density matrix of the entangled case.
"""

import numpy as np

from hiddentensor import index_codec
from hiddentensor.tensor import FactorSplit, pad_to_block, reduce_left, schmidt_classify


def state(indices):
    psi = np.zeros(max(indices) + 1, dtype=complex)
    psi[list(indices)] = 1.0
    return psi / np.linalg.norm(psi)


def main():
    for N in (3, 10):
        t = index_codec.encode(17, index_codec.RadixSpec.uniform(N))
        print(f"17 = {N}*{t.k} + {t.digits[0]}")
    print("binary digits of 17:", index_codec.fockian_digits(17, 2))
    t = index_codec.encode(22, index_codec.RadixSpec((5, 3)))
    print(f"22 with radices (5, 3): k={t.k}, digits={t.digits}")

    print()
    for indices in [(15, 16, 17), (17, 18)]:
        for N in (2, 3, 10):
            psi = pad_to_block(state(indices), N)
            r = schmidt_classify(psi, FactorSplit.for_dim(psi.size, N))
            sv = ", ".join(f"{s:.4f}" for s in r.singular_values[: r.rank])
            print(f"{indices} with N={N:2d}: {r.verdict:9s} singular values [{sv}]")

    psi = pad_to_block(state((17, 18)), 3)
    rho = reduce_left(psi, FactorSplit.for_dim(psi.size, 3))
    print("\nouter reduced matrix for N=3, non-zero block:")
    print(np.round(rho[5:7, 5:7].real, 6))
    print("purity:", round(float(np.trace(rho @ rho).real), 6))


if __name__ == "__main__":
    main()
