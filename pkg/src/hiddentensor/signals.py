"""Classical emulation of hidden-qubit states by frequency-multiplexed signals.

A ``K``-qubit state ``psi`` (dimension ``2^K``) becomes the analytic signal

    x(t) = sum_n psi_n exp(i (omega_b + n delta_omega) t),

so the binary digits of ``n`` say which octave carriers ``2^j delta_omega``
are present above the baseband ``omega_b``.  Decoding projects onto each tone
over a whole number of ``2 pi / delta_omega`` periods, where the discrete
tones are exactly orthogonal.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import NamedTuple

import numpy as np

from .errors import DomainError, ProjectionError, SignalSpecError
from .fock import as_state
from .gates import GateSpec, build_gate
from .tensor import hidden_kron

__all__ = [
    "SignalSpec",
    "SignalFrame",
    "encode_signal",
    "decode_signal",
    "gate_on_signal",
    "carrier_frequencies",
    "NoncommutativityReport",
    "tensor_noncommutativity_demo",
    "write_frame",
    "read_frame",
    "spec_to_header",
    "spec_from_header",
]

_PERIOD_TOL = 1e-9


@dataclass(frozen=True)
class SignalSpec:
    omega_b: float
    delta_omega: float
    K: int
    sample_rate: float
    duration: float

    @classmethod
    def default(cls, K: int, periods: int = 1, oversample: float = 8.0) -> "SignalSpec":
        """``omega_b = 2 pi 1 kHz``, ``delta_omega = 2 pi 100 Hz``, ``oversample`` x Nyquist."""
        omega_b = 2 * np.pi * 1000.0
        delta_omega = 2 * np.pi * 100.0
        nyquist = 2 * (omega_b + 2**K * delta_omega) / (2 * np.pi)
        return cls(omega_b, delta_omega, K, oversample * nyquist, periods * 2 * np.pi / delta_omega)

    @property
    def dim(self) -> int:
        return 2**self.K

    @property
    def n_samples(self) -> int:
        return int(round(self.sample_rate * self.duration))

    @property
    def periods(self) -> float:
        return self.duration * self.delta_omega / (2 * np.pi)

    def times(self) -> np.ndarray:
        S = self.n_samples
        return np.arange(S) * (self.duration / S)

    def check_sampling(self) -> None:
        if self.K < 1:
            raise SignalSpecError(f"need at least one qubit, got K={self.K}")
        if self.delta_omega <= 0 or self.duration <= 0:
            raise SignalSpecError("delta_omega and duration must be positive")
        nyquist = 2 * (self.omega_b + 2**self.K * self.delta_omega) / (2 * np.pi)
        if not self.sample_rate > nyquist:
            raise SignalSpecError(f"sample rate {self.sample_rate:g} Hz must exceed {nyquist:g} Hz")

    def check_periodic(self) -> None:
        p = self.periods
        if p < 1 - _PERIOD_TOL or abs(p - round(p)) > _PERIOD_TOL:
            raise ProjectionError(
                f"duration holds {p:.6g} periods of 2 pi / delta_omega; projection needs an integer"
            )


@dataclass(frozen=True)
class SignalFrame:
    samples: np.ndarray
    spec: SignalSpec

    def energy(self) -> float:
        """Mean power ``(1/T) int |x|^2 dt``; equals ``||psi||^2`` for an encoded state."""
        return float(np.mean(np.abs(self.samples) ** 2))


def carrier_frequencies(spec: SignalSpec) -> np.ndarray:
    """Angular frequency ``omega_b + n delta_omega`` of every basis tone."""
    return spec.omega_b + spec.delta_omega * np.arange(spec.dim)


def _tones(spec: SignalSpec) -> np.ndarray:
    return np.exp(1j * np.outer(spec.times(), carrier_frequencies(spec)))


def encode_signal(psi, spec: SignalSpec) -> SignalFrame:
    spec.check_sampling()
    psi = as_state(psi, spec.dim)
    return SignalFrame(_tones(spec) @ psi, spec)


def decode_signal(frame: SignalFrame, spec: SignalSpec | None = None) -> np.ndarray:
    """``psi_n = (1/T) int x(t) exp(-i (omega_b + n delta_omega) t) dt`` as a Riemann sum."""
    spec = frame.spec if spec is None else spec
    spec.check_periodic()
    x = np.asarray(frame.samples, dtype=complex)
    if x.size != spec.n_samples:
        raise ProjectionError(f"frame has {x.size} samples, spec expects {spec.n_samples}")
    return np.conj(_tones(spec)).T @ x / x.size


def gate_on_signal(frame: SignalFrame, g: GateSpec, spec: SignalSpec | None = None) -> SignalFrame:
    """Decode, apply the hidden-digit gate, re-encode."""
    spec = frame.spec if spec is None else spec
    psi = decode_signal(frame, spec)
    return encode_signal(build_gate(g, spec.dim) @ psi, spec)


class NoncommutativityReport(NamedTuple):
    fidelity: float
    f_then_g: np.ndarray
    g_then_f: np.ndarray


def tensor_noncommutativity_demo(f, g, spec: SignalSpec | None = None) -> NoncommutativityReport:
    """Compare ``|f (x) g>`` with ``|g (x) f>``.

    Both live in dimension ``len(f) len(g)``.  With a ``spec`` of matching
    dimension the overlap is measured on the encoded signals,
    ``|(1/T) int conj(x_fg) x_gf dt|``; otherwise on the amplitudes.
    """
    f = as_state(f)
    g = as_state(g)
    fg = hidden_kron(f, g)
    gf = hidden_kron(g, f)
    if spec is not None:
        if spec.dim != fg.size:
            raise DomainError(f"spec carries {spec.dim} tones, product has dimension {fg.size}")
        x1 = encode_signal(fg, spec).samples
        x2 = encode_signal(gf, spec).samples
        overlap = np.vdot(x1, x2) / x1.size
        scale = np.sqrt(np.mean(np.abs(x1) ** 2) * np.mean(np.abs(x2) ** 2))
    else:
        overlap = np.vdot(fg, gf)
        scale = np.linalg.norm(fg) * np.linalg.norm(gf)
    return NoncommutativityReport(float(abs(overlap) / scale), fg, gf)


def write_frame(frame: SignalFrame, path: str | Path) -> tuple[Path, Path]:
    """Write interleaved little-endian float64 re/im samples plus a JSON header sidecar."""
    path = Path(path)
    np.column_stack([frame.samples.real, frame.samples.imag]).astype("<f8").tofile(path)
    header = spec_to_header(frame.spec)
    sidecar = path.with_name(path.name + ".json")
    sidecar.write_text(json.dumps(header, sort_keys=True) + "\n")
    return path, sidecar


def spec_from_header(header: dict) -> SignalSpec:
    return SignalSpec(float(header["omega_b"]), float(header["delta_omega"]), int(header["K"]),
                      float(header["sample_rate"]), float(header["T"]))


def spec_to_header(spec: SignalSpec) -> dict:
    d = asdict(spec)
    d["T"] = d.pop("duration")
    return d


def read_frame(path: str | Path) -> SignalFrame:
    path = Path(path)
    header = json.loads(path.with_name(path.name + ".json").read_text())
    spec = spec_from_header(header)
    raw = np.fromfile(path, dtype="<f8").reshape(-1, 2)
    return SignalFrame(raw[:, 0] + 1j * raw[:, 1], spec)
