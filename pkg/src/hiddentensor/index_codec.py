"""Bijections between linear Fock indices and hidden tensor multi-indices.

A :class:`RadixSpec` lists radices outermost-first, ``(N_{M-1}, ..., N_0)``.
With ``leading=True`` an unbounded integer ``k`` heads the tuple (modular form),

    n = k * prod(N_j) + sum_j l_j * prod(N_i for i < j),

and with ``leading=False`` the digits alone label ``n`` (fixed-width Fockian
form).  Digits are stored most-significant-first, so ``digits[0]`` is
``l_{M-1}`` and ``digits[-1]`` is ``l_0``.

Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

import numpy as np

from .errors import ConfigurationError, DomainError

__all__ = [
    "RadixSpec",
    "IndexTuple",
    "encode",
    "decode",
    "encode_array",
    "decode_array",
    "fockian_digits",
    "nest",
    "nested_spec",
    "group_left",
    "group_right",
]


@dataclass(frozen=True)
class RadixSpec:
    levels: tuple[int, ...]
    leading: bool = True

    def __post_init__(self):
        levels = tuple(int(N) for N in self.levels)
        if not levels:
            raise ConfigurationError("a radix spec needs at least one level")
        bad = [N for N in levels if N < 2]
        if bad:
            raise ConfigurationError(f"every radix must be >= 2, got {bad}")
        object.__setattr__(self, "levels", levels)

    @classmethod
    def uniform(cls, N: int, M: int = 1, leading: bool = True) -> "RadixSpec":
        if M < 1:
            raise ConfigurationError(f"number of levels must be >= 1, got {M}")
        return cls((N,) * M, leading)

    @property
    def M(self) -> int:
        return len(self.levels)

    @property
    def block(self) -> int:
        """Product of all radices, i.e. the period of the outer index ``k``."""
        return prod(self.levels)

    @property
    def is_uniform(self) -> bool:
        return len(set(self.levels)) == 1

    def place_values(self) -> tuple[int, ...]:
        """Weight of each digit, outermost first (``l_0`` has weight 1)."""
        weights = []
        w = 1
        for N in reversed(self.levels):
            weights.append(w)
            w *= N
        return tuple(reversed(weights))


@dataclass(frozen=True)
class IndexTuple:
    n: int
    k: int
    digits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(int(d) for d in self.digits))


def encode(n: int, spec: RadixSpec) -> IndexTuple:
    """Split ``n`` into ``(k, l_{M-1}, ..., l_0)``.

    >>> encode(17, RadixSpec.uniform(3))
    IndexTuple(n=17, k=5, digits=(2,))
    """
    n = int(n)
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    rest = n
    digits = []
    for N in reversed(spec.levels):
        rest, l = divmod(rest, N)
        digits.append(l)
    if not spec.leading and rest:
        raise DomainError(f"n={n} needs more than {spec.M} digits for radices {spec.levels}")
    return IndexTuple(n, rest, tuple(reversed(digits)))


def decode(t: IndexTuple, spec: RadixSpec) -> int:
    """Inverse of :func:`encode`; ignores ``t.n`` and rebuilds it from ``k`` and the digits."""
    if len(t.digits) != spec.M:
        raise DomainError(f"expected {spec.M} digits, got {len(t.digits)}")
    if t.k < 0:
        raise DomainError(f"outer index must be non-negative, got {t.k}")
    if not spec.leading and t.k:
        raise DomainError("a Fockian (no leading factor) tuple cannot carry k != 0")
    n = t.k
    for N, l in zip(spec.levels, t.digits):
        if not 0 <= l < N:
            raise DomainError(f"digit {l} out of range for radix {N}")
        n = n * N + l
    return n


def encode_array(n: np.ndarray, spec: RadixSpec) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised :func:`encode` over an int64 array.

    Returns ``(k, digits)`` with ``digits`` of shape ``n.shape + (M,)``,
    most-significant digit first.
    """
    n = np.asarray(n, dtype=np.int64)
    if np.any(n < 0):
        raise DomainError("n must be non-negative")
    rest = n
    cols = []
    for N in reversed(spec.levels):
        q = rest // N
        cols.append(rest - q * N)
        rest = q
    digits = np.stack(cols[::-1], axis=-1)
    if not spec.leading and np.any(rest):
        raise DomainError(f"some n need more than {spec.M} digits")
    return rest, digits


def decode_array(k: np.ndarray, digits: np.ndarray, spec: RadixSpec) -> np.ndarray:
    k = np.asarray(k, dtype=np.int64)
    digits = np.asarray(digits, dtype=np.int64)
    if digits.shape[-1] != spec.M:
        raise DomainError(f"expected {spec.M} digits, got {digits.shape[-1]}")
    if np.any(digits < 0) or np.any(digits >= np.asarray(spec.levels)):
        raise DomainError(f"digit out of range for radices {spec.levels}")
    cols = np.moveaxis(digits, -1, 0).copy()
    n = k
    for N, d in zip(spec.levels, cols):
        n = n * N + d
    return n


def fockian_digits(n: int, N: int) -> list[int]:
    """Minimal base-``N`` representation of ``n``, most significant first.

    ``fockian_digits(0, N)`` is ``[0]`` so that the vacuum keeps a label.
    """
    if N < 2:
        raise ConfigurationError(f"radix must be >= 2, got {N}")
    n = int(n)
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if n == 0:
        return [0]
    out = []
    while n:
        n, l = divmod(n, N)
        out.append(l)
    return out[::-1]


def nest(t: IndexTuple, spec: RadixSpec, extra_levels: int, radix: int | None = None) -> IndexTuple:
    """Re-expand the outer index ``k`` into ``extra_levels`` further digits.

    The new digits are prepended with radix ``radix`` (default: the current
    outermost radix); the existing digits are left untouched, so
    ``decode(nest(t), nested_spec(...)) == decode(t, spec)``.
    """
    if not spec.leading:
        raise DomainError("nesting needs a leading outer index")
    if extra_levels < 0:
        raise DomainError(f"extra_levels must be >= 0, got {extra_levels}")
    N = spec.levels[0] if radix is None else radix
    if N < 2:
        raise ConfigurationError(f"radix must be >= 2, got {N}")
    k = t.k
    new = []
    for _ in range(extra_levels):
        k, l = divmod(k, N)
        new.append(l)
    return IndexTuple(t.n, k, tuple(reversed(new)) + t.digits)


def nested_spec(spec: RadixSpec, extra_levels: int, radix: int | None = None) -> RadixSpec:
    """The radix spec that matches the output of :func:`nest`."""
    N = spec.levels[0] if radix is None else radix
    return RadixSpec((N,) * extra_levels + spec.levels, spec.leading)


def group_left(k: int, l1: int, l0: int, N: int) -> int:
    """``(|k> (x) |l1>) (x) |l0>`` as a single index: ``N(Nk + l1) + l0``."""
    return N * (N * k + l1) + l0


def group_right(k: int, l1: int, l0: int, N: int) -> int:
    """``|k> (x) (|l1> (x) |l0>)`` read naively as ``Nk + (N l1 + l0)``.

    The inner index ``N l1 + l0`` is not bounded by ``N - 1``, which is why this
    grouping disagrees with :func:`group_left`.
    """
    return N * k + (N * l1 + l0)
