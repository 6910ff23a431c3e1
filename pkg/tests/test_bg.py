import math
import warnings

import numpy as np
import pytest

from hiddentensor.bg import (
    bg_alpha,
    bg_annihilator_closed,
    bg_annihilator_series,
    bg_annihilator_tensor,
    bg_commutator_boundary,
    bg_commutator_check,
    bg_compose_check,
    bg_creator,
    bg_displace,
    bg_form_deviations,
    quadrature_variance,
)
from hiddentensor.coherent import coherent_state
from hiddentensor.errors import TruncationWarning
from hiddentensor.fock import adjoint, annihilator, basis_state


def test_tensor_form_n1_is_ordinary():
    assert np.array_equal(bg_annihilator_tensor(1, 7), annihilator(7))
    assert np.array_equal(bg_annihilator_closed(1, 7), annihilator(7))


def test_tensor_form_entries_n2_k3():
    A = bg_annihilator_tensor(2, 3)
    expected = np.zeros((6, 6))
    for n in range(4):
        expected[n, n + 2] = math.sqrt(n // 2 + 1)
    assert np.allclose(A, expected, atol=0)


def test_outer_vacuum():
    N, D = 3, 15
    A = bg_annihilator_closed(N, D)
    for l in range(N):
        assert not np.any(A @ basis_state(l, D))


def test_creator_elements():
    Ad = bg_creator(2, 10)
    assert Ad[3, 1] == 1.0
    assert Ad[5, 3] == pytest.approx(math.sqrt(2))
    assert np.array_equal(Ad, adjoint(bg_annihilator_closed(2, 10)))


def test_number_relation():
    for N in (1, 2, 3):
        D = 12 * N
        A = bg_annihilator_closed(N, D)
        n = np.arange(D)
        # A^dagger A = floor(n/N), up to rounding of sqrt(m)^2
        assert np.max(np.abs(adjoint(A) @ A - np.diag(n // N))) < 1e-14


def test_alpha_zero():
    for N in (1, 2, 3, 4):
        assert bg_alpha(N, 0)[0] == pytest.approx(math.sqrt(1 / math.factorial(N)), rel=1e-15)


def test_alpha_defining_sum():
    # small j are well conditioned in float64
    N = 2
    alpha = bg_alpha(N, 6)
    for j in range(7):
        ref = sum((-1) ** (j - l) / math.factorial(j - l)
                  * math.sqrt((1 + l // N) / (math.factorial(l) * math.factorial(l + N)))
                  for l in range(j + 1))
        assert alpha[j] == pytest.approx(ref, rel=1e-12, abs=1e-300)


def test_series_n1_is_ordinary():
    D = 30
    S = bg_annihilator_series(1, D)
    assert np.max(np.abs(S[: D - 1, : D - 1] - annihilator(D)[: D - 1, : D - 1])) < 1e-10


@pytest.mark.parametrize("N", [2, 3])
def test_three_forms_agree(N):
    dev = bg_form_deviations(N, 60)
    assert max(dev.values()) < 1e-10


def test_series_cutoff_warns_and_shows():
    with pytest.warns(TruncationWarning):
        dev = bg_form_deviations(2, 40, J=5)
    assert dev["closed_series"] > 1e-3


@pytest.mark.parametrize("N, N2, K", [(2, 3, 5), (1, 4, 3), (3, 2, 4)])
def test_composition(N, N2, K):
    assert bg_compose_check(N, N2, K) == 0.0


@pytest.mark.parametrize("N", [1, 2, 3])
def test_commutator_interior(N):
    assert bg_commutator_check(N, 40 * N if N > 1 else 40) < 1e-12


def test_commutator_boundary_artifact():
    boundary = bg_commutator_boundary(2, 40)
    # on the top N rows the [A, A^dagger] term loses A A^dagger: -floor(n/N) - 1
    n = np.arange(38, 40)
    assert np.allclose(boundary, -(n // 2) - 1)


def test_displace_vacuum():
    out = bg_displace(0, 2, 20)
    assert np.array_equal(out.state, basis_state(0, 20))
    assert out.leakage == 0.0


def test_displace_n1_matches_coherent():
    out = bg_displace(1.0, 1, 64)
    assert np.max(np.abs(out.state - coherent_state(1.0, 64))) < 1e-8
    assert out.leakage < 1e-6


def test_displace_n2_lives_on_outer_coherent_amplitudes():
    z, D = 0.5, 64
    psi = bg_displace(z, 2, D).state
    outer = coherent_state(z, D // 2)
    assert np.max(np.abs(psi[0::2] - outer)) < 1e-12
    assert np.max(np.abs(psi[1::2])) == 0.0


def test_displace_n2_variance_recorded():
    psi = bg_displace(0.5, 2, 64).state
    v = quadrature_variance(psi)
    # frozen from the computation: the pair structure broadens X well above
    # the vacuum value 1/2; the size of the effect is recorded, not compared
    assert v == pytest.approx(1.8317131222257865, rel=1e-9)


def test_displace_leakage_warning():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        bg_displace(0.5, 1, 32)
    with pytest.warns(TruncationWarning):
        bg_displace(3.0, 1, 12)


def test_vacuum_variance():
    assert quadrature_variance(basis_state(0, 10)) == pytest.approx(0.5)
