"""Hidden tensor-product structures of a single truncated Fock space."""

__version__ = "0.1.0"

from .errors import (
    ConfigurationError,
    DimensionError,
    DomainError,
    HiddenTensorError,
    ProjectionError,
    ResolutionError,
    SignalSpecError,
    TruncationError,
    TruncationWarning,
)
from .index_codec import IndexTuple, RadixSpec, decode, encode, fockian_digits, nest
from .fock import annihilator, basis_state, creator, inner
from .tensor import (
    FactorSplit,
    compose_identity_check,
    embed_at,
    embed_left,
    embed_right,
    hidden_kron,
    reduce_at,
    reduce_left,
    reduce_right,
    schmidt_classify,
)
from .bg import (
    bg_annihilator_closed,
    bg_annihilator_series,
    bg_annihilator_tensor,
    bg_commutator_check,
    bg_compose_check,
    bg_displace,
)
from .coherent import coherent_state, hidden_inner_pmf, hidden_outer_pmf
from .gates import GateSpec, bell_correlation, build_gate, build_singlet, chsh
from .signals import SignalSpec, decode_signal, encode_signal, gate_on_signal
