import math

import numpy as np
import pytest
from scipy.stats import unitary_group

from hiddentensor.errors import ConfigurationError, DimensionError
from hiddentensor.fock import basis_state, unitarity_defect
from hiddentensor.gates import (
    GateSpec,
    bell_correlation,
    build_gate,
    build_singlet,
    chsh,
    chsh_from_angles,
    direction,
    geometric_weights,
    hadamard_coherent_closed_form,
    hadamard_on_coherent,
)
from hiddentensor.parity import spinor_rotate, su2_to_so3
from hiddentensor.tensor import FactorSplit, embed_at, reduce_at

R2 = 1 / math.sqrt(2)


def random_unit(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def random_weights(rng, count):
    w = rng.normal(size=count) + 1j * rng.normal(size=count)
    return w / np.linalg.norm(w)


def test_h0_on_vacuum():
    H0 = build_gate(GateSpec("hadamard", 0), 8)
    assert np.allclose(H0 @ basis_state(0, 8), R2 * (basis_state(0, 8) + basis_state(1, 8)), atol=1e-16)


def test_h1_on_one():
    H1 = build_gate(GateSpec("hadamard", 1), 8)
    assert np.allclose(H1 @ basis_state(1, 8), R2 * (basis_state(1, 8) + basis_state(3, 8)), atol=1e-16)


def test_h1_on_even_block():
    # H1 |4 k1 + l0> = (|4k1 + l0> + |4k1 + 2 + l0>)/sqrt2
    H1 = build_gate(GateSpec("hadamard", 1), 16)
    for k1 in range(4):
        for l0 in range(2):
            n = 4 * k1 + l0
            assert np.allclose(H1 @ basis_state(n, 16), R2 * (basis_state(n, 16) + basis_state(n + 2, 16)))


@pytest.mark.parametrize("kind", ["hadamard", "pauli_x", "pauli_y", "pauli_z"])
@pytest.mark.parametrize("position", [0, 1, 2])
def test_qubit_gates_unitary_involution(kind, position):
    G = build_gate(GateSpec(kind, position), 32)
    assert unitarity_defect(G) < 1e-12
    assert np.max(np.abs(G @ G - np.eye(32))) < 1e-15


def test_gates_at_different_positions_commute():
    rng = np.random.default_rng(40)
    U = unitary_group.rvs(2, random_state=rng)
    A = build_gate(GateSpec("custom", 0, matrix=U), 16)
    B = build_gate(GateSpec("hadamard", 2), 16)
    C = build_gate(GateSpec("pauli_y", 1), 16)
    for X, Y in [(A, B), (A, C), (B, C)]:
        assert np.max(np.abs(X @ Y - Y @ X)) < 1e-14


def test_divisibility_enforced():
    with pytest.raises(DimensionError):
        build_gate(GateSpec("hadamard", 1), 6)
    with pytest.raises(DimensionError):
        build_gate(GateSpec("digit_multiplier", 0, N=5, multiplier=2), 12)


def test_spec_validation():
    with pytest.raises(ConfigurationError):
        GateSpec("digit_multiplier", N=6, multiplier=2)
    with pytest.raises(ConfigurationError):
        GateSpec("custom", matrix=np.array([[1, 1], [0, 1]]))
    with pytest.raises(ConfigurationError):
        GateSpec("toffoli")
    with pytest.raises(ConfigurationError):
        GateSpec("hadamard", N=3)


def test_digit_multiplier_identity():
    G = build_gate(GateSpec("digit_multiplier", N=5, multiplier=1), 20)
    assert np.array_equal(G, np.eye(20))


def test_digit_multiplier_permutation():
    N, a, D = 5, 2, 25
    G = build_gate(GateSpec("digit_multiplier", N=N, multiplier=a), D)
    expected = np.zeros((D, D))
    for n in range(D):
        k, l = divmod(n, N)
        expected[N * k + (a * l) % N, n] = 1
    assert np.array_equal(G, expected)
    assert np.array_equal(G.conj().T @ G, np.eye(D))


def test_hadamard_coherent_closed_form_at_zero():
    out = hadamard_coherent_closed_form(0, 0, 6)
    assert np.allclose(out, [R2, R2, 0, 0, 0, 0], atol=1e-16)


def test_hadamard_coherent_first_amplitude():
    out = hadamard_coherent_closed_form(1, 0, 8)
    assert out[0] == pytest.approx(math.sqrt(2) * math.exp(-0.5), rel=1e-15)


@pytest.mark.parametrize("position", [0, 1])
def test_hadamard_on_coherent_residual(position):
    res = hadamard_on_coherent(0.7 + 0.2j, position, 128)
    assert res.residual < 1e-12


def test_singlet_single_k():
    psi = build_singlet([1.0])
    assert np.allclose(psi, [0, R2, -R2, 0], atol=0)


def test_singlet_reductions_maximally_mixed():
    rng = np.random.default_rng(41)
    for w in (geometric_weights(6), random_weights(rng, 5)):
        psi = build_singlet(w)
        assert np.linalg.norm(psi) == pytest.approx(1.0, abs=1e-14)
        split = FactorSplit.for_dim(psi.size, 2, 2)
        for pos in (0, 1):
            assert np.allclose(reduce_at(psi, pos, split), np.eye(2) / 2, atol=1e-14)


def test_bell_simple_directions():
    psi = build_singlet(geometric_weights(4))
    z, x = np.array([0, 0, 1.0]), np.array([1.0, 0, 0])
    assert bell_correlation(psi, z, z) == pytest.approx(-1.0, abs=1e-14)
    assert abs(bell_correlation(psi, z, x)) < 1e-14


def test_bell_random_weights_and_directions():
    rng = np.random.default_rng(42)
    for _ in range(30):
        psi = build_singlet(random_weights(rng, int(rng.integers(1, 8))))
        a, b = random_unit(rng), random_unit(rng)
        assert abs(bell_correlation(psi, a, b) + a @ b) < 1e-12


def test_bell_bilinear():
    rng = np.random.default_rng(43)
    psi = build_singlet(geometric_weights(3))
    a1, a2, b = rng.normal(size=3), rng.normal(size=3), rng.normal(size=3)
    s, t = 0.3, -1.7
    lhs = bell_correlation(psi, s * a1 + t * a2, b)
    rhs = s * bell_correlation(psi, a1, b) + t * bell_correlation(psi, a2, b)
    assert lhs == pytest.approx(rhs, abs=1e-12)
    lhs = bell_correlation(psi, b, s * a1 + t * a2)
    rhs = s * bell_correlation(psi, b, a1) + t * bell_correlation(psi, b, a2)
    assert lhs == pytest.approx(rhs, abs=1e-12)


def test_singlet_rotation_invariance():
    rng = np.random.default_rng(44)
    psi = build_singlet(geometric_weights(4))
    split = FactorSplit.for_dim(psi.size, 2, 2)
    for seed in range(5):
        U = unitary_group.rvs(2, random_state=seed)
        rotated = embed_at(U, 1, split) @ embed_at(U, 0, split) @ psi
        R = su2_to_so3(U)
        a, b = random_unit(rng), random_unit(rng)
        assert bell_correlation(rotated, R @ a, R @ b) == pytest.approx(bell_correlation(psi, a, b), abs=1e-10)
        # the inner spinor rotation on bit 0 alone is the spinor_rotate map
        assert np.allclose(embed_at(U, 0, split) @ psi, spinor_rotate(psi, U), atol=1e-15)


def test_chsh_optimal():
    psi = build_singlet(geometric_weights(5))
    out = chsh_from_angles(psi, [0, 90, 45, 135])
    assert out["S"] == pytest.approx(2 * math.sqrt(2), abs=1e-9)
    assert out["S_signed"] == pytest.approx(-2 * math.sqrt(2), abs=1e-9)


def test_chsh_equal_settings():
    psi = build_singlet([1.0])
    v = direction(0.4, 1.1)
    assert abs(chsh(psi, v, v, v, v)) == pytest.approx(2.0, abs=1e-12)


def test_chsh_tsirelson_bound():
    rng = np.random.default_rng(45)
    psi = build_singlet(geometric_weights(3))
    for _ in range(50):
        S = chsh(psi, *(random_unit(rng) for _ in range(4)))
        assert abs(S) <= 2 * math.sqrt(2) + 1e-9
