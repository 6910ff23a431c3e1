"""Acceptance checks, shared by ``hiddentensor verify-all`` and the test suite.

Each check returns a :class:`CheckResult` holding the measured quantities, the
tolerance it was judged against and its wall-clock time.  A check passes only
if every measured quantity is within tolerance *and* it finishes inside its
time budget.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import bg, coherent, gates, index_codec, parity, signals
from .tensor import FactorSplit, compose_identity_check, pad_to_block, reduce_at, schmidt_classify

DEFAULT_SEED = 20240917


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    seconds: float
    time_limit: float
    tolerances: dict
    measured: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({'; '.join(self.failures)})" if self.failures else ""
        return f"[{status}] {self.number:2d}. {self.name}: {self.seconds:.2f}s / {self.time_limit:g}s{extra}"


class _Recorder:
    def __init__(self):
        self.measured: dict = {}
        self.failures: list = []

    def expect(self, label: str, ok: bool, value=None):
        if value is not None:
            self.measured[label] = value
        if not ok:
            self.failures.append(label if value is None else f"{label}={value!r}")


def _run(number: int, name: str, limit: float, tolerances: dict, body: Callable[[_Recorder], None]) -> CheckResult:
    rec = _Recorder()
    t0 = time.perf_counter()
    body(rec)
    seconds = time.perf_counter() - t0
    if seconds >= limit:
        rec.failures.append(f"took {seconds:.2f}s >= {limit}s")
    return CheckResult(number, name, not rec.failures, seconds, limit, tolerances, rec.measured, rec.failures)


def check_index_bijection(seed: int = DEFAULT_SEED) -> CheckResult:
    def body(rec):
        n = np.arange(10**6, dtype=np.int64)
        rng = np.random.default_rng(seed)
        sample = rng.integers(0, 10**6, size=200)
        bad = 0
        scalar_bad = 0
        for N in range(2, 18):
            for M in range(1, 7):
                spec = index_codec.RadixSpec.uniform(N, M)
                k, d = index_codec.encode_array(n, spec)
                bad += int(np.count_nonzero(index_codec.decode_array(k, d, spec) != n))
                for m in sample:
                    t = index_codec.encode(int(m), spec)
                    scalar_bad += index_codec.decode(t, spec) != m or t.digits != tuple(d[m])
        rec.expect("vector_mismatches", bad == 0, bad)
        rec.expect("scalar_mismatches", scalar_bad == 0, scalar_bad)

    return _run(1, "index bijection n < 1e6, N in [2,17], M in [1,6]", 10.0, {"exact": True}, body)


def check_classification_examples() -> CheckResult:
    tol = 1e-10

    def verdict(amps: dict, N: int) -> str:
        psi = np.zeros(max(amps) + 1, dtype=complex)
        for n, a in amps.items():
            psi[n] = a
        psi = pad_to_block(psi, N)
        return schmidt_classify(psi, FactorSplit.for_dim(psi.size, N), tol).verdict

    def body(rec):
        r3 = 1 / np.sqrt(3)
        r2 = 1 / np.sqrt(2)
        v = verdict({15: r3, 16: r3, 17: r3}, 3)
        rec.expect("(15+16+17)/sqrt3 @N=3", v == "product", v)
        v = verdict({17: r2, 18: r2}, 3)
        rec.expect("(17+18)/sqrt2 @N=3", v == "entangled", v)
        v = verdict({17: r2, 18: r2}, 10)
        rec.expect("(17+18)/sqrt2 @N=10", v == "product", v)

    return _run(2, "product/entangled classification examples", 1.0, {"schmidt_tol": tol}, body)


def check_bg_three_forms() -> CheckResult:
    tol = 1e-10

    def body(rec):
        for N in (2, 3, 4):
            dev = bg.bg_form_deviations(N, 240, J=240)
            worst = max(dev.values())
            rec.expect(f"N={N}", worst < tol, worst)

    return _run(3, "BG tensor/closed/series forms agree (D=240, J=D)", 30.0, {"elementwise": tol}, body)


def check_bg_composition() -> CheckResult:
    def body(rec):
        dev = bg.bg_compose_check(2, 3, 5)
        rec.expect("A2 (x) I3 vs A6", dev == 0.0, dev)

    return _run(4, "BG composition A_2 (x) I_3 = A_6 (K=5)", 1.0, {"exact": True}, body)


def check_bg_commutator() -> CheckResult:
    tol = 1e-12

    def body(rec):
        for N in (1, 2, 3):
            dev = bg.bg_commutator_check(N, 120)
            rec.expect(f"N={N}", dev < tol, dev)

    return _run(5, "BG commutator [A_N, A_N^dagger] = I on interior (D=120)", 1.0, {"max": tol}, body)


def check_coherent_statistics(seed: int = DEFAULT_SEED) -> CheckResult:
    sum_tol = 1e-8
    rho_tol = 1e-10

    def body(rec):
        rng = np.random.default_rng(seed)
        radii = np.concatenate([[0.0, 2.0], 2 * np.sqrt(rng.random(10))])
        zs = radii * np.exp(2j * np.pi * rng.random(radii.size))
        worst_sum = 0.0
        pmf_equal = True
        worst_rho = 0.0
        for z in zs:
            D = max(4, coherent.default_dim(z))
            for N in (1, 2, 3, 4):
                kmax = D // N + 1
                outer = np.sum(coherent.hidden_outer_pmf(z, N, np.arange(kmax)))
                inner = np.sum(coherent.hidden_inner_pmf(z, N, np.arange(N)))
                worst_sum = max(worst_sum, abs(outer - 1), abs(inner - 1))
            ks = np.arange(D // 4 + 1)
            pmf_equal &= bool(np.array_equal(coherent.three_subsystem_outer_pmf(z, ks),
                                             coherent.hidden_outer_pmf(z, 4, ks)))
            psi = coherent.coherent_state(z, D)
            split = FactorSplit.for_dim(D, 2, 2)
            for pos in (1, 0):
                closed = coherent.three_subsystem_qubit_rho(z, pos, D)
                worst_rho = max(worst_rho, float(np.max(np.abs(closed - reduce_at(psi, pos, split)))))
        rec.expect("max |sum pmf - 1|", worst_sum < sum_tol, worst_sum)
        rec.expect("three-subsystem pmf == N=4 pmf", pmf_equal, pmf_equal)
        rec.expect("max |closed rho - partial trace|", worst_rho < rho_tol, worst_rho)

    return _run(6, "coherent hidden statistics (|z| <= 2)", 5.0,
                {"pmf_sum": sum_tol, "rho": rho_tol, "pmf_equivalence": "exact"}, body)


def check_parity(seed: int = DEFAULT_SEED) -> CheckResult:
    bloch_tol = 1e-12
    density_tol = 1e-10
    interference_tol = 1e-8
    L = 1.0

    def body(rec):
        rng = np.random.default_rng(seed)
        worst_s = 0.0
        worst_rho = 0.0
        for parity_bit, target in ((0, 1.0), (1, -1.0)):
            for _ in range(5):
                c = np.zeros(16, dtype=complex)
                c[parity_bit::2] = rng.normal(size=8) + 1j * rng.normal(size=8)
                c /= np.linalg.norm(c)
                s = parity.bloch_vector(c)
                worst_s = max(worst_s, float(np.max(np.abs(s - [0, 0, target]))))
                p0, p1 = parity.split_components(c, L)
                rho_hid, _ = parity.hidden_density(p0, p1)
                rho = np.abs(parity.synthesize(c, L).samples) ** 2
                worst_rho = max(worst_rho, float(np.max(np.abs(rho - rho_hid))))
        worst_int = 0.0
        for _ in range(10):
            c = rng.normal(size=16) + 1j * rng.normal(size=16)
            c /= np.linalg.norm(c)
            p0, p1 = parity.split_components(c, L)
            _, interference = parity.hidden_density(p0, p1)
            worst_int = max(worst_int, abs(parity.integrate(interference, p0.x)))
        rec.expect("max |s - (0,0,+-1)|", worst_s < bloch_tol, worst_s)
        rec.expect("max |rho - rho_hid| (pure parity)", worst_rho < density_tol, worst_rho)
        rec.expect("max |int interference|", worst_int < interference_tol, worst_int)

    return _run(7, "parity as hidden spin", 5.0,
                {"bloch": bloch_tol, "density": density_tol, "interference": interference_tol}, body)


def check_hadamard() -> CheckResult:
    tol = 1e-12
    z = 0.7 + 0.2j
    D = 128

    def body(rec):
        for j in (0, 1):
            H = gates.build_gate(gates.GateSpec("hadamard", j), D)
            inv = float(np.max(np.abs(H @ H - np.eye(D))))
            rec.expect(f"|H{j}^2 - I|", inv < tol, inv)
            uni = float(np.max(np.abs(H.conj().T @ H - np.eye(D))))
            rec.expect(f"|H{j}^dag H{j} - I|", uni < tol, uni)
            res = gates.hadamard_on_coherent(z, j, D).residual
            rec.expect(f"<n|H{j}|z> residual", res < tol, res)

    return _run(8, "hidden Hadamard gates (z=0.7+0.2i, D=128)", 2.0, {"max": tol}, body)


def _random_unit(rng) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def _random_weights(rng, count: int) -> np.ndarray:
    w = rng.normal(size=count) + 1j * rng.normal(size=count)
    return w / np.linalg.norm(w)


def check_bell(seed: int = DEFAULT_SEED) -> CheckResult:
    tol = 1e-12
    chsh_tol = 1e-9

    def body(rec):
        rng = np.random.default_rng(seed)
        worst = 0.0
        for _ in range(100):
            psi = gates.build_singlet(_random_weights(rng, int(rng.integers(1, 9))))
            a, b = _random_unit(rng), _random_unit(rng)
            worst = max(worst, abs(gates.bell_correlation(psi, a, b) + a @ b))
        rec.expect("max |E(a,b) + a.b|", worst < tol, worst)
        psi = gates.build_singlet(gates.geometric_weights(4))
        S = gates.chsh_from_angles(psi, (0, 90, 45, 135))["S"]
        dev = abs(S - 2 * np.sqrt(2))
        rec.expect("| |S| - 2 sqrt 2 |", dev < chsh_tol, dev)

    return _run(9, "hidden singlet Bell correlation and CHSH", 2.0, {"E": tol, "S": chsh_tol}, body)


def check_signal_emulation(seed: int = DEFAULT_SEED) -> CheckResult:
    tol = 1e-9
    bell_tol = 1e-6

    def body(rec):
        rng = np.random.default_rng(seed)
        spec = signals.SignalSpec.default(6)
        worst_rt = 0.0
        worst_gate = 0.0
        gate_specs = [gates.GateSpec("hadamard", j) for j in range(6)]
        gate_specs += [gates.GateSpec("pauli_x", 2), gates.GateSpec("pauli_y", 4), gates.GateSpec("pauli_z", 5)]
        for i in range(50):
            psi = _random_weights(rng, spec.dim)
            frame = signals.encode_signal(psi, spec)
            worst_rt = max(worst_rt, float(np.max(np.abs(signals.decode_signal(frame) - psi))))
            g = gate_specs[i % len(gate_specs)]
            via_signal = signals.decode_signal(signals.gate_on_signal(frame, g))
            via_state = gates.build_gate(g, spec.dim) @ signals.decode_signal(frame)
            worst_gate = max(worst_gate, float(np.max(np.abs(via_signal - via_state))))
        rec.expect("round trip", worst_rt < tol, worst_rt)
        rec.expect("gate on signal vs state", worst_gate < tol, worst_gate)

        spec3 = signals.SignalSpec.default(3)
        worst_bell = 0.0
        for _ in range(10):
            psi = gates.build_singlet(_random_weights(rng, 2), D=spec3.dim)
            decoded = signals.decode_signal(signals.encode_signal(psi, spec3))
            a, b = _random_unit(rng), _random_unit(rng)
            worst_bell = max(worst_bell, abs(gates.bell_correlation(decoded, a, b) + a @ b))
        rec.expect("signal-domain Bell", worst_bell < bell_tol, worst_bell)

    return _run(10, "signal emulation (K=6 round trip, gates, Bell)", 60.0,
                {"round_trip": tol, "gate": tol, "bell": bell_tol}, body)


def check_operator_composition(seed: int = DEFAULT_SEED) -> CheckResult:
    def body(rec):
        rng = np.random.default_rng(seed)
        worst = 0.0
        for _ in range(20):
            K = int(rng.integers(2, 7))
            A = rng.normal(size=(K, K)) + 1j * rng.normal(size=(K, K))
            for N1 in (2, 3):
                for N0 in (2, 3):
                    worst = max(worst, compose_identity_check(A, N1, N0))
        rec.expect("max deviation", worst == 0.0, worst)

    return _run(11, "operator composition identity, 20 random A", 5.0, {"exact": True}, body)


CHECKS = (
    check_index_bijection,
    check_classification_examples,
    check_bg_three_forms,
    check_bg_composition,
    check_bg_commutator,
    check_coherent_statistics,
    check_parity,
    check_hadamard,
    check_bell,
    check_signal_emulation,
    check_operator_composition,
)

_SEEDED = {check_index_bijection, check_coherent_statistics, check_parity, check_bell,
           check_signal_emulation, check_operator_composition}


def run_check(fn, seed: int = DEFAULT_SEED) -> CheckResult:
    return fn(seed) if fn in _SEEDED else fn()


def run_all(seed: int = DEFAULT_SEED, echo: Callable[[str], None] | None = None) -> list[CheckResult]:
    results = []
    for fn in CHECKS:
        r = run_check(fn, seed)
        if echo is not None:
            echo(r.line())
        results.append(r)
    return results
