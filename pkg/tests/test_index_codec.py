import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hiddentensor.errors import ConfigurationError, DomainError
from hiddentensor.index_codec import (
    IndexTuple,
    RadixSpec,
    decode,
    decode_array,
    encode,
    encode_array,
    fockian_digits,
    group_left,
    group_right,
    nest,
    nested_spec,
)


def brute_force_tuple(n, radices):
    """Search all (k, digits) with k <= n for the one that decodes to n."""
    hits = []
    ranges = [range(N) for N in radices]
    for k in range(n + 1):
        for digits in itertools.product(*ranges):
            m = k
            for N, l in zip(radices, digits):
                m = m * N + l
            if m == n:
                hits.append((k, digits))
    return hits


def test_encode_examples():
    assert encode(17, RadixSpec.uniform(3)) == IndexTuple(17, 5, (2,))
    assert encode(17, RadixSpec.uniform(10)) == IndexTuple(17, 1, (7,))


@pytest.mark.parametrize("spec", [RadixSpec.uniform(2), RadixSpec.uniform(7, 3), RadixSpec((5, 3))])
def test_encode_zero(spec):
    t = encode(0, spec)
    assert t.k == 0 and set(t.digits) == {0}


def test_mixed_radix_against_brute_force():
    spec = RadixSpec((5, 3))
    for n in range(100):
        hits = brute_force_tuple(n, (5, 3))
        assert len(hits) == 1
        k, digits = hits[0]
        assert encode(n, spec) == IndexTuple(n, k, digits)
    assert encode(22, spec) == IndexTuple(22, 1, (2, 1))


def test_decode_examples():
    assert decode(IndexTuple(0, 5, (2,)), RadixSpec.uniform(3)) == 17
    assert decode(IndexTuple(0, 0, (0, 0, 0)), RadixSpec.uniform(4, 3)) == 0
    assert decode(IndexTuple(0, 1, (2, 1)), RadixSpec((5, 3))) == 22


def test_decode_rejects_out_of_range_digit():
    with pytest.raises(DomainError):
        decode(IndexTuple(0, 0, (3,)), RadixSpec.uniform(3))
    with pytest.raises(DomainError):
        decode(IndexTuple(0, 0, (1, 1)), RadixSpec.uniform(3))


def test_invalid_radix():
    with pytest.raises(ConfigurationError):
        RadixSpec((3, 1))
    with pytest.raises(ConfigurationError):
        RadixSpec.uniform(2, 0)
    with pytest.raises(ConfigurationError):
        fockian_digits(5, 1)


def test_negative_n_rejected():
    with pytest.raises(DomainError):
        encode(-1, RadixSpec.uniform(2))


def test_uniform_formula():
    N, M = 3, 4
    spec = RadixSpec.uniform(N, M)
    for n in [0, 1, 80, 81, 82, 1000, 123456]:
        t = encode(n, spec)
        assert t.k == n // N**M
        assert list(t.digits) == [(n % N**M) // N**j % N for j in range(M - 1, -1, -1)]


@pytest.mark.parametrize("n, N, expected", [(17, 2, [1, 0, 0, 0, 1]), (0, 7, [0]), (17, 3, [1, 2, 2])])
def test_fockian_digits(n, N, expected):
    assert fockian_digits(n, N) == expected
    assert int("".join(map(str, expected)), N) == n


def test_fockian_spec_without_leading_factor():
    spec = RadixSpec.uniform(2, 5, leading=False)
    t = encode(17, spec)
    assert t.k == 0 and t.digits == (1, 0, 0, 0, 1)
    with pytest.raises(DomainError):
        encode(32, spec)


def test_nest_examples():
    spec = RadixSpec.uniform(3)
    out = nest(IndexTuple(17, 5, (2,)), spec, 1)
    assert out.k == 1 and out.digits == (2, 2)
    assert decode(out, nested_spec(spec, 1)) == 17

    out = nest(IndexTuple(0, 0, (0,)), RadixSpec.uniform(4), 3)
    assert out.k == 0 and out.digits == (0, 0, 0, 0)

    out = nest(IndexTuple(12, 6, (0,)), RadixSpec.uniform(2), 1)
    assert out.k == 3 and out.digits == (0, 0)


@settings(max_examples=200)
@given(n=st.integers(0, 10**9), N=st.integers(2, 17), M=st.integers(1, 4), extra=st.integers(0, 5))
def test_nest_keeps_existing_digits(n, N, M, extra):
    spec = RadixSpec.uniform(N, M)
    t = encode(n, spec)
    out = nest(t, spec, extra)
    assert out.digits[len(out.digits) - M:] == t.digits
    assert decode(out, nested_spec(spec, extra)) == n


@settings(max_examples=300)
@given(n=st.integers(0, 2**62), radices=st.lists(st.integers(2, 40), min_size=1, max_size=6))
def test_round_trip_mixed(n, radices):
    spec = RadixSpec(tuple(radices))
    assert decode(encode(n, spec), spec) == n


def test_injective_on_random_mixed_specs():
    rng = np.random.default_rng(7)
    n = np.arange(10**5 + 1)
    for _ in range(5):
        radices = tuple(int(r) for r in rng.integers(2, 9, size=rng.integers(1, 5)))
        spec = RadixSpec(radices)
        k, d = encode_array(n, spec)
        labels = np.column_stack([k, d])
        assert np.unique(labels, axis=0).shape[0] == n.size
        assert np.array_equal(decode_array(k, d, spec), n)


def test_vector_matches_scalar():
    spec = RadixSpec((4, 7, 3))
    n = np.arange(2000)
    k, d = encode_array(n, spec)
    for m in range(0, 2000, 37):
        t = encode(m, spec)
        assert t.k == k[m] and t.digits == tuple(d[m])


def test_non_associativity_witness():
    N = 2
    witnesses = [(k, l1, l0) for k in range(4) for l1 in range(N) for l0 in range(N)
                 if group_left(k, l1, l0, N) != group_right(k, l1, l0, N)]
    assert witnesses
    # N(Nk + l1) + l0 != Nk + N l1 + l0, e.g. at k=1
    assert group_left(1, 0, 0, 2) == 4
    assert group_right(1, 0, 0, 2) == 2
    # only the left grouping reproduces the three-level encoding
    spec = RadixSpec.uniform(2, 2)
    for k, l1, l0 in itertools.product(range(4), range(2), range(2)):
        assert group_left(k, l1, l0, 2) == decode(IndexTuple(0, k, (l1, l0)), spec)
