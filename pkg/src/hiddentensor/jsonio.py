"""Deterministic JSON for states, density matrices and reports.

Keys are sorted and floats are written with 17 significant digits, so equal
inputs give byte-identical output.  Complex arrays are stored as interleaved
``[re, im, re, im, ...]`` lists.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .errors import DomainError

__all__ = [
    "dumps",
    "interleave",
    "deinterleave",
    "state_to_json",
    "state_from_json",
    "density_to_json",
    "density_from_json",
    "load_state",
]


def _format_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"cannot serialise non-finite float {x!r}")
    return format(x, ".17g")


def _encode(obj) -> str:
    if obj is None or isinstance(obj, (bool, np.bool_)):
        return json.dumps(None if obj is None else bool(obj))
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _format_float(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        items = sorted((str(k), v) for k, v in obj.items())
        return "{" + ", ".join(f"{json.dumps(k)}: {_encode(v)}" for k, v in items) + "}"
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_encode(v) for v in obj) + "]"
    if isinstance(obj, (complex, np.complexfloating)):
        return _encode([obj.real, obj.imag])
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj) -> str:
    return _encode(obj)


def interleave(z) -> list[float]:
    z = np.asarray(z, dtype=complex).ravel()
    out = np.empty(2 * z.size)
    out[0::2] = z.real
    out[1::2] = z.imag
    return out.tolist()


def deinterleave(values) -> np.ndarray:
    v = np.asarray(values, dtype=float)
    if v.ndim != 1 or v.size % 2:
        raise DomainError("interleaved complex data needs an even-length flat list")
    return v[0::2] + 1j * v[1::2]


def state_to_json(psi) -> dict:
    psi = np.asarray(psi, dtype=complex)
    return {"amplitudes": interleave(psi), "dim": int(psi.size)}


def state_from_json(obj) -> np.ndarray:
    """Parse a state.

    Accepts the canonical ``{"dim": D, "amplitudes": [re, im, ...]}`` or a
    sparse map ``{"17": 0.7071, "18": [0.7071, 0.0]}`` from basis index to a
    real amplitude or ``[re, im]`` pair (dimension = largest index + 1, or an
    explicit ``"dim"`` entry).
    """
    if isinstance(obj, list):
        return np.asarray(obj, dtype=float).astype(complex)
    if not isinstance(obj, dict):
        raise DomainError("state JSON must be an object or a list")
    if "amplitudes" in obj:
        psi = deinterleave(obj["amplitudes"])
        if "dim" in obj and int(obj["dim"]) != psi.size:
            raise DomainError(f"dim {obj['dim']} does not match {psi.size} amplitudes")
        return psi
    entries = {int(k): v for k, v in obj.items() if k != "dim"}
    if any(n < 0 for n in entries):
        raise DomainError("basis indices must be non-negative")
    D = int(obj.get("dim", max(entries, default=-1) + 1))
    psi = np.zeros(D, dtype=complex)
    for n, v in entries.items():
        if n >= D:
            raise DomainError(f"index {n} outside dim {D}")
        psi[n] = complex(v[0], v[1]) if isinstance(v, (list, tuple)) else complex(v)
    return psi


def density_to_json(rho) -> dict:
    rho = np.asarray(rho, dtype=complex)
    return {"dim": int(rho.shape[0]), "matrix": [interleave(row) for row in rho]}


def density_from_json(obj) -> np.ndarray:
    return np.array([deinterleave(row) for row in obj["matrix"]])


def load_state(text_or_path: str) -> np.ndarray:
    """Read a state from inline JSON or from a file path."""
    text = text_or_path.strip()
    if not text.startswith(("{", "[")):
        text = Path(text_or_path).read_text()
    return state_from_json(json.loads(text))
