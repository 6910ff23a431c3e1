"""
Parity of a particle in a box as a hidden spin.

In the standing-wave basis on [-L/2, L/2] even indices are cosines (even
functions) and odd indices are sines (odd functions).  Splitting n = 2k + l
turns l into a spin-1/2 index, and its Bloch vector points to the north pole
for even wavefunctions and to the south pole for odd ones.  The position
density splits into a hidden part |psi_0|^2 + |psi_1|^2 and an interference
term that integrates to zero.
"""

import numpy as np

from hiddentensor import parity

L = 1.0


def describe(name, c):
    psi0, psi1 = parity.split_components(c, L)
    rho_hid, interference = parity.hidden_density(psi0, psi1)
    s = parity.bloch_vector(c)
    print(f"{name}: s = {np.round(s, 6)}, |s| = {np.linalg.norm(s):.6f}")
    print(f"  int rho_hid = {parity.integrate(rho_hid, psi0.x):.8f}, "
          f"int interference = {parity.integrate(interference, psi0.x):.1e}, "
          f"max |interference| = {np.max(np.abs(interference)):.4f}")


def main():
    rng = np.random.default_rng(1)
    even = np.zeros(8, dtype=complex)
    even[0::2] = rng.normal(size=4)
    describe("even state", even / np.linalg.norm(even))
    odd = np.zeros(8, dtype=complex)
    odd[1::2] = rng.normal(size=4)
    describe("odd state ", odd / np.linalg.norm(odd))
    describe("(|0> + |1>)/sqrt2", np.array([1, 1]) / np.sqrt(2))

    theta = np.pi / 3
    U = np.array([[np.cos(theta / 2), -np.sin(theta / 2)], [np.sin(theta / 2), np.cos(theta / 2)]])
    rotated = parity.spinor_rotate(even / np.linalg.norm(even), U)
    print("\nrotating the even state's spin by pi/3 about y:")
    print("  s =", np.round(parity.bloch_vector(rotated), 6))
    print("  R e_z =", np.round(parity.su2_to_so3(U) @ [0, 0, 1], 6))


if __name__ == "__main__":
    main()
