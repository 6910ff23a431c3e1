"""Command-line entry point: ``hiddentensor <subcommand> ...``.

Every subcommand prints deterministic JSON (sorted keys, 17 significant
digits) unless ``--format csv`` is requested.  Complex numbers are given as
``re,im``; use ``--z=-1,0`` for a leading minus sign.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__, bg, coherent, gates, index_codec, jsonio, parity, signals, verify
from .errors import HiddenTensorError
from .tensor import FactorSplit, pad_to_block, reduce_at, reduce_left, reduce_right, schmidt_classify

SEED_ENV = "HIDDEN_TENSOR_SEED"


def _complex(text: str) -> complex:
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise argparse.ArgumentTypeError(f"expected 're' or 're,im', got {text!r}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _float_list(text: str) -> list[float]:
    try:
        return [float(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _json_arg(text: str):
    t = text.strip()
    if not t.startswith(("{", "[")):
        t = Path(text).read_text()
    return json.loads(t)


def _radix_spec(args) -> index_codec.RadixSpec:
    radices = args.radix
    if len(radices) == 1 and args.levels:
        radices = radices * args.levels
    return index_codec.RadixSpec(tuple(radices), leading=not args.fockian)


def _tuple_json(t: index_codec.IndexTuple, spec: index_codec.RadixSpec) -> dict:
    return {"digits": list(t.digits), "k": t.k if spec.leading else None, "n": t.n,
            "radices": list(spec.levels)}


def cmd_encode(args):
    spec = _radix_spec(args)
    return _tuple_json(index_codec.encode(args.n, spec), spec)


def cmd_decode(args):
    spec = _radix_spec(args)
    t = index_codec.IndexTuple(-1, args.k, tuple(args.digits))
    n = index_codec.decode(t, spec)
    return _tuple_json(index_codec.IndexTuple(n, args.k, t.digits), spec)


def cmd_digits(args):
    return {"digits": index_codec.fockian_digits(args.n, args.radix), "n": args.n, "radix": args.radix}


def _state_split(psi, N: int, levels: int):
    psi = pad_to_block(psi, N**levels)
    return psi, FactorSplit.for_dim(psi.size, N, levels)


def cmd_reduce(args):
    psi, split = _state_split(jsonio.load_state(args.state), args.radix, args.levels)
    if args.side == "left":
        rho = reduce_left(psi, split)
    elif args.side == "right":
        rho = reduce_right(psi, split)
    elif args.side.startswith("at:"):
        rho = reduce_at(psi, int(args.side[3:]), split)
    else:
        raise HiddenTensorError(f"--side must be left, right or at:<j>, got {args.side!r}")
    return jsonio.density_to_json(rho)


def cmd_classify(args):
    psi, split = _state_split(jsonio.load_state(args.state), args.radix, 1)
    r = schmidt_classify(psi, split, args.tol)
    return {"rank": r.rank, "singular_values": r.singular_values, "verdict": r.verdict}


def cmd_bg(args):
    N, D = args.order, args.dim
    if args.check_all:
        out = {"deviations": bg.bg_form_deviations(N, D, args.cutoff), "interior_margin": N,
               "commutator_interior": bg.bg_commutator_check(N, D)}
        return out
    if args.form == "tensor":
        if D % N:
            raise HiddenTensorError(f"tensor form needs --dim divisible by --order, got {D}, {N}")
        A = bg.bg_annihilator_tensor(N, D // N)
    elif args.form == "closed":
        A = bg.bg_annihilator_closed(N, D)
    else:
        A = bg.bg_annihilator_series(N, D, args.cutoff)
    return {"form": args.form, "operator": jsonio.density_to_json(A), "order": N}


def cmd_bg_displace(args):
    res = bg.bg_displace(args.z, args.order, args.dim)
    return {"leakage": res.leakage, "norm_deficit": 1.0 - float(np.vdot(res.state, res.state).real),
            "state": jsonio.state_to_json(res.state),
            "x_variance": bg.quadrature_variance(res.state)}


def cmd_coherent_stats(args):
    z = args.z
    D = args.dim or max(4, coherent.default_dim(z))
    N = args.radix
    if args.levels == 3:
        if N != 2:
            raise HiddenTensorError("the three-subsystem split is implemented for --radix 2")
        if D % 4:
            D += (-D) % 4
        ks = np.arange(D // 4)
        outer = coherent.three_subsystem_outer_pmf(z, ks)
        if args.format == "csv":
            return _csv([("k", "probability")] + list(zip(ks.tolist(), outer.tolist())))
        return {"dim": D, "outer_pmf": outer,
                "rho_bit0": jsonio.density_to_json(coherent.three_subsystem_qubit_rho(z, 0, D)),
                "rho_bit1": jsonio.density_to_json(coherent.three_subsystem_qubit_rho(z, 1, D))}
    ks = np.arange(-(-D // N))
    outer = coherent.hidden_outer_pmf(z, N, ks)
    if args.format == "csv":
        return _csv([("k", "probability")] + list(zip(ks.tolist(), outer.tolist())))
    return {"dim": D, "inner_pmf": coherent.hidden_inner_pmf(z, N, np.arange(N), D), "outer_pmf": outer}


def _csv(rows) -> "CsvText":
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in rows:
        w.writerow([format(v, ".17g") if isinstance(v, float) else v for v in row])
    return CsvText(buf.getvalue())


class CsvText(str):
    pass


def cmd_parity(args):
    c = jsonio.state_from_json(_json_arg(args.coeffs))
    s = parity.bloch_vector(c)
    p0, p1 = parity.split_components(c, args.L, args.grid)
    rho_hid, interference = parity.hidden_density(p0, p1)
    rho = rho_hid + interference
    if args.format == "csv":
        if not args.out:
            raise HiddenTensorError("--format csv needs --out for the density table")
        rows = [("x", "rho", "rho_hid", "interference")]
        rows += [tuple(map(float, r)) for r in zip(p0.x, rho, rho_hid, interference)]
        Path(args.out).write_text(_csv(rows))
        path, args.out = args.out, None
        return {"bloch": s, "csv": path}
    return {"bloch": s, "interference": interference, "rho": rho, "rho_hid": rho_hid,
            "spin_probabilities": list(parity.spin_probabilities(c)), "x": p0.x}


def _gate_spec(obj: dict) -> gates.GateSpec:
    matrix = obj.get("matrix")
    if matrix is not None:
        matrix = np.array([jsonio.deinterleave(row) for row in matrix])
    return gates.GateSpec(obj["kind"], int(obj.get("position", 0)), int(obj.get("N", 2)), matrix,
                          obj.get("multiplier"))


def cmd_gate(args):
    g = _gate_spec(_json_arg(args.spec))
    psi = jsonio.load_state(args.state)
    return jsonio.state_to_json(gates.build_gate(g, psi.size) @ psi)


def cmd_bell(args):
    if args.weights:
        w = jsonio.state_from_json(_json_arg(args.weights))
    else:
        w = gates.geometric_weights(4)
    psi = gates.build_singlet(w)
    return gates.chsh_from_angles(psi, args.angles)


def _signal_spec(args, dim: int | None) -> signals.SignalSpec:
    if args.spec_file:
        return signals.spec_from_header(_json_arg(args.spec_file))
    if dim is None:
        raise HiddenTensorError("--spec-file is required here")
    K = int(round(np.log2(dim)))
    if 2**K != dim:
        raise HiddenTensorError(f"state dimension {dim} is not a power of two")
    return signals.SignalSpec.default(K)


def cmd_signal(args):
    if args.action == "encode":
        psi = jsonio.load_state(args.state)
        spec = _signal_spec(args, psi.size)
        frame = signals.encode_signal(psi, spec)
    else:
        if not args.input:
            raise HiddenTensorError(f"signal {args.action} needs --in <frame file>")
        frame = signals.read_frame(args.input)
        spec = signals.spec_from_header(_json_arg(args.spec_file)) if args.spec_file else frame.spec
        if args.action == "decode":
            return jsonio.state_to_json(signals.decode_signal(frame, spec))
        frame = signals.gate_on_signal(frame, _gate_spec(_json_arg(args.gate)), spec)
    if not args.out:
        raise HiddenTensorError(f"signal {args.action} needs --out <frame file>")
    path, sidecar = signals.write_frame(frame, args.out)
    args.out = None
    return {"header": signals.spec_to_header(frame.spec), "samples": int(frame.samples.size),
            "sidecar": str(sidecar), "frame": str(path)}


def cmd_verify_all(args):
    t0 = time.perf_counter()
    results = verify.run_all(args.seed, echo=lambda line: print(line, file=sys.stderr))
    manifest = {
        "argv": list(args.argv),
        "checks": [{"failures": r.failures, "measured": r.measured, "name": r.name, "number": r.number,
                    "passed": r.passed, "seconds": r.seconds, "time_limit": r.time_limit}
                   for r in results],
        "parameters": {"seed": args.seed},
        "passed": all(r.passed for r in results),
        "tolerances": {str(r.number): r.tolerances for r in results},
        "version": __version__,
        "wall_clock_seconds": time.perf_counter() - t0,
    }
    Path(args.manifest).write_text(jsonio.dumps(manifest) + "\n")
    failed = [r for r in results if not r.passed]
    if failed:
        for r in failed:
            print(f"check {r.number} failed: {r.name}: {'; '.join(r.failures)}", file=sys.stderr)
        return ExitWith(1, {"manifest": args.manifest, "passed": False,
                            "failed": [r.number for r in failed]})
    return {"manifest": args.manifest, "passed": True}


class ExitWith:
    def __init__(self, code: int, payload):
        self.code = code
        self.payload = payload


EXAMPLES = {
    "encode": "hiddentensor encode --n 22 --radix 5,3          # k=1, digits [2, 1]",
    "decode": "hiddentensor decode --k 5 --digits 2 --radix 3  # n=17",
    "digits": "hiddentensor digits --n 17 --radix 2             # [1, 0, 0, 0, 1]",
    "reduce": "hiddentensor reduce --state '{\"17\": 0.7071067811865476, \"18\": 0.7071067811865476}' --radix 3 --side left",
    "classify": "hiddentensor classify --state '{\"17\": 0.7071067811865476, \"18\": 0.7071067811865476}' --radix 3   # entangled",
    "bg": "hiddentensor bg --order 2 --dim 40 --check-all",
    "bg-displace": "hiddentensor bg-displace --z 0.5,0 --order 2 --dim 64",
    "coherent-stats": "hiddentensor coherent-stats --z 1,0 --radix 2 --format csv",
    "parity": "hiddentensor parity --coeffs '[0.6, 0.8]' --L 1 --grid 1025",
    "gate": "hiddentensor gate --spec '{\"kind\": \"hadamard\", \"position\": 0}' --state '{\"0\": 1, \"dim\": 4}'",
    "bell": "hiddentensor bell --angles 0,90,45,135           # S = 2.828427...",
    "signal": "hiddentensor signal encode --state '{\"0\": 1, \"dim\": 8}' --out frame.bin",
    "verify-all": "hiddentensor verify-all --manifest manifest.json",
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the output here instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--seed", type=int, default=verify.DEFAULT_SEED,
                        help=f"RNG seed (overridden by ${SEED_ENV})")

    p = argparse.ArgumentParser(prog="hiddentensor", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_, epilog="example:\n  " + EXAMPLES[name],
                            formatter_class=argparse.RawDescriptionHelpFormatter)
        sp.set_defaults(func=func)
        return sp

    def radix_args(sp, multi=True):
        sp.add_argument("--radix", type=_int_list if multi else int, required=True,
                        help="radix N, or outermost-first list N1,N0 for mixed radices" if multi else "radix N")
        sp.add_argument("--levels", type=int, default=None, help="repeat a single radix this many times")

    sp = add("encode", cmd_encode, "split n into (k, digits)")
    sp.add_argument("--n", type=int, required=True)
    radix_args(sp)
    sp.add_argument("--fockian", action="store_true", help="no leading outer index")

    sp = add("decode", cmd_decode, "rebuild n from (k, digits)")
    sp.add_argument("--k", type=int, default=0)
    sp.add_argument("--digits", type=_int_list, required=True, help="most significant first")
    radix_args(sp)
    sp.add_argument("--fockian", action="store_true")

    sp = add("digits", cmd_digits, "minimal base-N digits of n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--radix", type=int, required=True)

    sp = add("reduce", cmd_reduce, "reduced density matrix of a hidden subsystem")
    sp.add_argument("--state", required=True, help="state JSON (inline or file)")
    sp.add_argument("--radix", type=int, required=True)
    sp.add_argument("--levels", type=int, default=1)
    sp.add_argument("--side", default="left", help="left | right | at:<j>")

    sp = add("classify", cmd_classify, "Schmidt product/entangled verdict")
    sp.add_argument("--state", required=True)
    sp.add_argument("--radix", type=int, required=True)
    sp.add_argument("--tol", type=float, default=1e-10)

    sp = add("bg", cmd_bg, "Brandt-Greenberg annihilator in one of three forms")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--form", choices=("tensor", "closed", "series"), default="closed")
    sp.add_argument("--cutoff", type=int, default=None, help="series cutoff J (default: dim)")
    sp.add_argument("--check-all", action="store_true", help="report pairwise deviations instead")

    sp = add("bg-displace", cmd_bg_displace, "BG displaced vacuum exp(z A^dag - z* A)|0>")
    sp.add_argument("--z", type=_complex, required=True)
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--dim", type=int, required=True)

    sp = add("coherent-stats", cmd_coherent_stats, "hidden statistics of a coherent state")
    sp.add_argument("--z", type=_complex, required=True)
    sp.add_argument("--radix", type=int, required=True)
    sp.add_argument("--levels", type=int, choices=(2, 3), default=2, help="number of hidden subsystems")
    sp.add_argument("--dim", type=int, default=None)

    sp = add("parity", cmd_parity, "hidden spin / parity of standing-wave coefficients")
    sp.add_argument("--coeffs", required=True, help="coefficient JSON (inline or file)")
    sp.add_argument("--L", type=float, default=1.0)
    sp.add_argument("--grid", type=int, default=parity.DEFAULT_POINTS)

    sp = add("gate", cmd_gate, "apply a hidden-digit gate to a state")
    sp.add_argument("--spec", required=True, help='gate JSON, e.g. {"kind": "hadamard", "position": 1}')
    sp.add_argument("--state", required=True)

    sp = add("bell", cmd_bell, "singlet correlations and CHSH value")
    sp.add_argument("--angles", type=_float_list, required=True, help="a,a',b,b' in degrees (x-z plane)")
    sp.add_argument("--weights", help="outer weights psi_k as state JSON")

    sp = add("signal", cmd_signal, "encode/decode/gate octave-spaced signal frames")
    sp.add_argument("action", choices=("encode", "decode", "gate"))
    sp.add_argument("--spec-file", help="JSON header {K, omega_b, delta_omega, sample_rate, T}")
    sp.add_argument("--state")
    sp.add_argument("--in", dest="input", help="input frame file (decode, gate)")
    sp.add_argument("--gate", help="gate JSON (gate action)")

    sp = add("verify-all", cmd_verify_all, "run the acceptance checks and write a manifest")
    sp.add_argument("--manifest", default="hiddentensor-manifest.json")
    return p


def run(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    if os.environ.get(SEED_ENV):
        args.seed = int(os.environ[SEED_ENV])
    args.argv = ["hiddentensor"] + argv
    try:
        result = args.func(args)
    except (HiddenTensorError, ValueError, KeyError, OSError) as exc:
        print(f"hiddentensor {args.command}: error: {exc}", file=sys.stderr)
        return 2
    code = 0
    if isinstance(result, ExitWith):
        code, result = result.code, result.payload
    text = result if isinstance(result, CsvText) else jsonio.dumps(result) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())
