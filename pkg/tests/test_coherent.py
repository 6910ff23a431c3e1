import math

import numpy as np
import pytest
from scipy.stats import poisson

from hiddentensor.coherent import (
    coherent_state,
    default_dim,
    hidden_inner_pmf,
    hidden_outer_pmf,
    three_subsystem_outer_pmf,
    three_subsystem_qubit_rho,
    truncation_deficit,
)
from hiddentensor.errors import DomainError, TruncationError
from hiddentensor.fock import annihilator, basis_state
from hiddentensor.tensor import FactorSplit, reduce_at, reduce_left, reduce_right


def test_vacuum():
    assert np.array_equal(coherent_state(0, 8), basis_state(0, 8))


def test_amplitudes_against_direct_formula():
    z = 0.8 - 0.3j
    psi = coherent_state(z, 40)
    direct = np.array([np.exp(-abs(z) ** 2 / 2) * z**n / math.sqrt(math.factorial(n)) for n in range(40)])
    assert np.max(np.abs(psi - direct)) < 1e-14


def test_eigenrelation():
    z, D = 1.0, 32
    psi = coherent_state(z, D)
    residual = annihilator(D) @ psi - z * psi
    assert np.max(np.abs(residual[: D - 1])) < 1e-10


def test_amplitude_ratio():
    z = 1.1 + 0.4j
    psi = coherent_state(z, 30)
    n = np.arange(29)
    assert np.allclose(psi[1:] / psi[:-1], z / np.sqrt(n + 1), rtol=1e-13)


def test_truncation_error_suggests_dim():
    with pytest.raises(TruncationError, match="use D >="):
        coherent_state(3.0, 10)
    assert truncation_deficit(2.0, default_dim(2.0)) < 1e-12


def test_outer_pmf_values():
    assert hidden_outer_pmf(1, 2, 0) == pytest.approx(2 * math.exp(-1), rel=1e-15)
    assert hidden_outer_pmf(0, 3, 0) == 1.0
    assert np.array_equal(hidden_outer_pmf(0, 3, [1, 2, 5]), [0, 0, 0])


def test_inner_pmf_values():
    p = hidden_inner_pmf(1, 2, [0, 1])
    assert p[0] == pytest.approx(math.exp(-1) * math.cosh(1), rel=1e-14)
    assert p[1] == pytest.approx(math.exp(-1) * math.sinh(1), rel=1e-14)
    assert hidden_inner_pmf(0, 4, 0) == 1.0
    assert hidden_inner_pmf(0, 4, 3) == 0.0
    with pytest.raises(DomainError):
        hidden_inner_pmf(1, 2, 2)


@pytest.mark.parametrize("z", [0.3, 1.0, 1.5 + 1.2j, 2.0j])
@pytest.mark.parametrize("N", [1, 2, 3, 5])
def test_marginals_sum_to_one(z, N):
    D = default_dim(z)
    outer = hidden_outer_pmf(z, N, np.arange(D // N + 2))
    inner = hidden_inner_pmf(z, N, np.arange(N))
    assert abs(outer.sum() - 1) < 1e-8
    assert abs(inner.sum() - 1) < 1e-8


def test_n1_is_poisson():
    z = 1.7
    k = np.arange(30)
    assert np.allclose(hidden_outer_pmf(z, 1, k), poisson.pmf(k, abs(z) ** 2), rtol=1e-12)


def test_outer_pmf_matches_partial_trace():
    z, N, D = 1.2 + 0.5j, 3, 48
    rho = reduce_left(coherent_state(z, D), FactorSplit.for_dim(D, N))
    assert np.max(np.abs(np.diag(rho).real - hidden_outer_pmf(z, N, np.arange(D // N)))) < 1e-12


def test_inner_pmf_matches_partial_trace():
    z, N, D = 0.9j, 4, 64
    rho = reduce_right(coherent_state(z, D), FactorSplit.for_dim(D, N))
    assert np.max(np.abs(np.diag(rho).real - hidden_inner_pmf(z, N, np.arange(N), D))) < 1e-12


def test_three_subsystem_equals_n4():
    k = np.arange(20)
    for z in (1.3, 0.4 - 1.1j):
        assert np.array_equal(three_subsystem_outer_pmf(z, k), hidden_outer_pmf(z, 4, k))
    assert three_subsystem_outer_pmf(0, 0) == 1.0
    assert abs(three_subsystem_outer_pmf(1.3, np.arange(40)).sum() - 1) < 1e-12


def test_qubit_rho_vacuum():
    for pos in (0, 1):
        assert np.allclose(three_subsystem_qubit_rho(0, pos, 8), np.diag([1, 0]), atol=0)


def test_qubit_rho_matches_partial_trace():
    rng = np.random.default_rng(20)
    zs = [1.0] + list(2 * rng.uniform(size=5) * np.exp(2j * np.pi * rng.uniform(size=5)))
    for z in zs:
        D = 64
        psi = coherent_state(z, D)
        split = FactorSplit.for_dim(D, 2, 2)
        for pos in (0, 1):
            rho = three_subsystem_qubit_rho(z, pos, D)
            assert np.max(np.abs(rho - reduce_at(psi, pos, split))) < 1e-10
            assert np.max(np.abs(rho - rho.conj().T)) < 1e-10
            assert abs(np.trace(rho) - 1) < 1e-10


def test_qubit_rho_needs_multiple_of_four():
    with pytest.raises(DomainError):
        three_subsystem_qubit_rho(1, 0, 30)
