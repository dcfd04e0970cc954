"""`spectra` command line: spectrum sweeps, dimension tables, reproductions,
rendering and binomial growth checks, emitting bit-stable CSV/SVG/PPM.

Exit codes: 0 success, 2 invalid input, 3 solver failure, 4 I/O failure.
Errors print a machine-parsable `error_code=` line to stderr.  The env var
SPECTRA_THREADS caps grid parallelism; outputs are assembled in q-order so
results are byte-identical for any thread count.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from importlib import resources

from . import __version__
from .csvio import write_csv
from .gendim import gendim_point
from .lq_spectrum import (
    classify_and_bound,
    gamma_closed_forms,
    gamma_k,
    gamma_k_sweep,
    lower_bounds,
    swap_family_upper,
)
from .manifest import RunManifest
from .measure_lab import (
    MODE_CHAOS,
    MODE_DETERMINISTIC,
    RenderConfig,
    empirical_tau,
    render,
    sample_depth_range,
)
from .projections import ProjectionOverlapError, tau_pair
from .solvers import SolverError
from .split_binomial import growth_limit, split_ratio
from .system import (
    DiagonalSystem,
    SystemDefinitionError,
    load_system,
    swap_family,
    system_from_document,
    system_to_document,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_SOLVER = 3
EXIT_IO = 4

Q1_GUARD = 1e-6

REPRODUCE_NAMES = ("figure1", "example-fraser", "example-miao", "phase-transition", "binomial")


class CliError(Exception):
    def __init__(self, code: int, stage: str, message: str):
        super().__init__(message)
        self.code = code
        self.stage = stage


def _emit_error(code: int, stage: str, message: str) -> None:
    print(f"error_code={code} stage={stage} detail={message}", file=sys.stderr)


def _threads() -> int:
    raw = os.environ.get("SPECTRA_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise CliError(EXIT_INPUT, "env", f"SPECTRA_THREADS={raw!r} is not an integer")
    return max(1, n)


def _map_ordered(fn, items):
    n = _threads()
    if n <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as ex:
        return list(ex.map(fn, items))


def _grid(q_min: float, q_max: float, q_step: float) -> list[float]:
    if q_step <= 0 or q_max < q_min:
        raise CliError(EXIT_INPUT, "grid", "need q_step > 0 and q_max >= q_min")
    count = int(round((q_max - q_min) / q_step))
    qs = [q_min + i * q_step for i in range(count + 1)]
    return [q for q in qs if q <= q_max + 1e-12]


def _load_system_arg(path: str) -> DiagonalSystem:
    try:
        return load_system(path)
    except SystemDefinitionError as exc:
        raise CliError(EXIT_INPUT, "input", str(exc))
    except OSError as exc:
        raise CliError(EXIT_IO, "input", str(exc))


def _data_manifest(name: str) -> dict:
    fname = "reproduce_" + name.replace("-", "_") + ".json"
    ref = resources.files("affine_spectra.data").joinpath(fname)
    return json.loads(ref.read_text(encoding="utf-8"))


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------

def _spectrum_rows(sys_obj: DiagonalSystem, qs, ks, extrapolate: bool, k_cap: int):
    ks = sorted(set(ks))

    def row(q: float):
        try:
            pt = classify_and_bound(sys_obj, q, ks=ks)
            extra = []
            if extrapolate:
                extra.append(gamma_k_sweep(sys_obj, q, k_cap=k_cap).aitken)
        except SolverError as exc:
            raise CliError(EXIT_SOLVER, f"spectrum q={q:.6g}", str(exc))
        return [
            q, pt.tau1, pt.tau2, pt.gamma_a, pt.gamma_b,
            pt.lower, pt.upper, pt.exact, pt.case,
            *[pt.gamma_ks[k] for k in ks],
            *extra,
        ]

    header = ["q", "tau1", "tau2", "gammaA", "gammaB", "lower", "upper", "exact", "case"]
    header += [f"gamma_k{k}" for k in ks]
    if extrapolate:
        header.append("gamma_aitken_nonrigorous")
    return header, _map_ordered(row, qs)


def cmd_spectrum(args) -> int:
    sys_obj = _load_system_arg(args.system)
    qs = _grid(args.q_min, args.q_max, args.q_step)
    ks = args.k or []
    started = time.monotonic()
    header, rows = _spectrum_rows(sys_obj, qs, ks, args.extrapolate, args.k_cap)
    _write_csv_io(args.out, header, rows)
    manifest = RunManifest(
        command="spectrum",
        input_path=args.system,
        system=system_to_document(sys_obj),
        q_min=args.q_min, q_max=args.q_max, q_step=args.q_step,
        ks=sorted(set(ks)),
        outputs=[args.out],
        options={"extrapolate": args.extrapolate, "k_cap": args.k_cap},
        tool_version=__version__,
        wall_time_s=time.monotonic() - started,
    )
    _write_manifest(manifest, args.manifest or args.out + ".manifest.json")
    return EXIT_OK


# ---------------------------------------------------------------------------
# gendim
# ---------------------------------------------------------------------------

def _gendim_rows(sys_obj: DiagonalSystem, qs, ks):
    ks = sorted(set(ks))

    def row(q: float):
        try:
            pt = gendim_point(sys_obj, q, ks=ks)
        except SolverError as exc:
            raise CliError(EXIT_SOLVER, f"gendim q={q:.6g}", str(exc))
        return [
            q, pt.t1, pt.t2, pt.s1, pt.s2, pt.u0, pt.u,
            pt.lower, pt.upper, pt.exact, pt.case,
            *[pt.dq_ks[k] for k in ks],
            pt.cond1, pt.cond2,
        ]

    header = ["q", "t1", "t2", "s1", "s2", "u0", "u", "lower", "upper", "exact", "case"]
    header += [f"dq_k{k}" for k in ks]
    header += ["cond1", "cond2"]
    return header, _map_ordered(row, qs)


def cmd_gendim(args) -> int:
    sys_obj = _load_system_arg(args.system)
    qs = [q for q in _grid(args.q_min, args.q_max, args.q_step) if abs(q - 1.0) > Q1_GUARD]
    ks = args.k or []
    started = time.monotonic()
    header, rows = _gendim_rows(sys_obj, qs, ks)
    _write_csv_io(args.out, header, rows)
    manifest = RunManifest(
        command="gendim",
        input_path=args.system,
        system=system_to_document(sys_obj),
        q_min=args.q_min, q_max=args.q_max, q_step=args.q_step,
        ks=sorted(set(ks)),
        outputs=[args.out],
        tool_version=__version__,
        wall_time_s=time.monotonic() - started,
    )
    _write_manifest(manifest, args.manifest or args.out + ".manifest.json")
    return EXIT_OK


# ---------------------------------------------------------------------------
# reproduce
# ---------------------------------------------------------------------------

def _reproduce_figure1(doc: dict, outdir: str) -> list[str]:
    c, d = doc["c"], doc["d"]
    sys_obj = swap_family(c, d)
    qs = _grid(doc["q_min"], doc["q_max"], doc["q_step"])

    def row(q: float):
        try:
            tau1, tau2 = tau_pair(sys_obj, q)
            lbs = lower_bounds(sys_obj, q, tau1, tau2)
            ga, gb = gamma_closed_forms(sys_obj, q, tau1, tau2)
            quant = swap_family_upper(c, d, q).value if q > 1.0 else None
        except SolverError as exc:
            raise CliError(EXIT_SOLVER, f"figure1 q={q:.6g}", str(exc))
        return [q, max(lbs.la, lbs.lb), quant, min(ga, gb), tau1 + tau2, 1.0 - q]

    header = ["q", "lower_LAB", "upper_quantitative", "min_gammaAB", "tau_sum", "one_minus_q"]
    out = os.path.join(outdir, doc["outputs"][0])
    _write_csv_io(out, header, _map_ordered(row, qs))
    return [out]


def _reproduce_example_fraser(doc: dict, outdir: str) -> list[str]:
    sys_obj = system_from_document(doc["system"])
    qs = _grid(doc["q_min"], doc["q_max"], doc["q_step"])
    header, rows = _spectrum_rows(sys_obj, qs, doc.get("ks", []), False, 0)
    csv_out = os.path.join(outdir, doc["outputs"][0])
    _write_csv_io(csv_out, header, rows)
    svg_out = os.path.join(outdir, doc["outputs"][1])
    render(sys_obj, RenderConfig(mode=MODE_DETERMINISTIC, depth=1, overlay=True), svg_out)
    ppm_out = os.path.join(outdir, doc["outputs"][2])
    render(
        sys_obj,
        RenderConfig(
            width=512, height=512,
            iterations=doc.get("render_iterations", 200000),
            seed=doc.get("render_seed", 0),
            mode=MODE_CHAOS,
        ),
        ppm_out,
    )
    return [csv_out, svg_out, ppm_out]


def _reproduce_example_miao(doc: dict, outdir: str) -> list[str]:
    sys_obj = system_from_document(doc["system"])
    qs = [q for q in _grid(doc["q_min"], doc["q_max"], doc["q_step"]) if abs(q - 1.0) > Q1_GUARD]
    header, rows = _gendim_rows(sys_obj, qs, doc.get("ks", []))
    out = os.path.join(outdir, doc["outputs"][0])
    _write_csv_io(out, header, rows)
    return [out]


def _reproduce_phase_transition(doc: dict, outdir: str) -> list[str]:
    sys_obj = system_from_document(doc["system"])
    qs = _grid(doc["q_min"], doc["q_max"], doc["q_step"])
    k = doc["k"]
    h = doc["q_step"]

    def value(q: float):
        try:
            return gamma_k(sys_obj, k, q)
        except SolverError as exc:
            raise CliError(EXIT_SOLVER, f"phase-transition q={q:.6g}", str(exc))

    vals = _map_ordered(value, qs)
    rows = []
    for i, q in enumerate(qs):
        d1 = (vals[i + 1] - vals[i]) / h if i + 1 < len(vals) else None
        d2 = (
            (vals[i + 1] - 2.0 * vals[i] + vals[i - 1]) / h ** 2
            if 0 < i < len(vals) - 1
            else None
        )
        rows.append([q, vals[i], d1, d2])
    out = os.path.join(outdir, doc["outputs"][0])
    _write_csv_io(out, [f"q", f"gamma_k{k}", "forward_diff1", "central_diff2"], rows)
    return [out]


def _binomial_rows(xs: list[Fraction], k_list: list[int]):
    rows = []
    for x in xs:
        limit = growth_limit(float(x))
        for k in k_list:
            sr = split_ratio(k, x)
            log_ratio = sr.log_ratio
            ratio = math.exp(log_ratio) if log_ratio < 700.0 else math.inf
            rows.append(
                [str(x), k, ratio, log_ratio, sr.root, limit, abs(sr.root - limit)]
            )
    return ["x", "k", "ratio", "log_ratio", "root", "limit", "abs_deviation"], rows


def _reproduce_binomial(doc: dict, outdir: str) -> list[str]:
    xs = [Fraction(s) for s in doc["xs"]]
    header, rows = _binomial_rows(xs, [int(k) for k in doc["k_list"]])
    out = os.path.join(outdir, doc["outputs"][0])
    _write_csv_io(out, header, rows)
    return [out]


_REPRODUCERS = {
    "figure1": _reproduce_figure1,
    "example-fraser": _reproduce_example_fraser,
    "example-miao": _reproduce_example_miao,
    "phase-transition": _reproduce_phase_transition,
    "binomial": _reproduce_binomial,
}


def cmd_reproduce(args) -> int:
    name = args.name
    if name not in _REPRODUCERS:
        raise CliError(
            EXIT_INPUT, "reproduce",
            f"unknown name {name!r}; valid names: {', '.join(REPRODUCE_NAMES)}",
        )
    started = time.monotonic()
    doc = _data_manifest(name)
    os.makedirs(args.outdir, exist_ok=True)
    try:
        outputs = _REPRODUCERS[name](doc, args.outdir)
    except OSError as exc:
        raise CliError(EXIT_IO, "reproduce", str(exc))
    manifest = RunManifest(
        command="reproduce",
        options={"name": name, "outdir": args.outdir},
        outputs=outputs,
        tool_version=__version__,
        wall_time_s=time.monotonic() - started,
    )
    _write_manifest(manifest, os.path.join(args.outdir, name + ".manifest.json"))
    return EXIT_OK


# ---------------------------------------------------------------------------
# render
# ---------------------------------------------------------------------------

def cmd_render(args) -> int:
    sys_obj = _load_system_arg(args.system)
    started = time.monotonic()
    try:
        cfg = RenderConfig(
            width=args.width,
            height=args.height,
            iterations=args.iterations,
            seed=args.seed,
            mode=args.mode,
            depth=args.depth,
            overlay=args.overlay,
            randomize_translations=args.random_translations,
        )
    except ValueError as exc:
        raise CliError(EXIT_INPUT, "render", str(exc))
    try:
        render(sys_obj, cfg, args.out)
    except ValueError as exc:
        raise CliError(EXIT_INPUT, "render", str(exc))
    except OSError as exc:
        raise CliError(EXIT_IO, "render", str(exc))
    manifest = RunManifest(
        command="render",
        input_path=args.system,
        system=system_to_document(sys_obj),
        seeds={"render": args.seed, "random_translations": args.random_translations},
        outputs=[args.out],
        options={
            "width": args.width, "height": args.height,
            "iterations": args.iterations, "mode": args.mode,
            "depth": args.depth, "overlay": args.overlay,
        },
        tool_version=__version__,
        wall_time_s=time.monotonic() - started,
    )
    _write_manifest(manifest, args.manifest or args.out + ".manifest.json")
    return EXIT_OK


# ---------------------------------------------------------------------------
# boxcount
# ---------------------------------------------------------------------------

def _boxcount_rows(sys_obj: DiagonalSystem, n: int, seed: int, depths, qs, orbits: int):
    gms = sample_depth_range(sys_obj, n, seed, depths, orbits=orbits)
    rows = [[gm.depth, q, gm.moment(q)] for q in qs for gm in gms]
    return ["m", "q", "M_m"], rows, gms


def cmd_boxcount(args) -> int:
    sys_obj = _load_system_arg(args.system)
    if args.depth_min < 0 or args.depth_max > 24 or args.depth_min > args.depth_max:
        raise CliError(EXIT_INPUT, "boxcount", "need 0 <= depth-min <= depth-max <= 24")
    if args.n <= 0 or args.orbits <= 0:
        raise CliError(EXIT_INPUT, "boxcount", "n and orbits must be positive")
    qs = sorted(set(args.q or [0.0, 2.0]))
    depths = range(args.depth_min, args.depth_max + 1)
    started = time.monotonic()
    header, rows, gms = _boxcount_rows(sys_obj, args.n, args.seed, depths, qs, args.orbits)
    _write_csv_io(args.out, header, rows)
    if len(gms) >= 3:
        for q in qs:
            tau_hat, stderr = empirical_tau(gms, q)
            print(f"q={q:.6g} tau_hat={tau_hat:.6f} stderr={stderr:.6f}")
    manifest = RunManifest(
        command="boxcount",
        input_path=args.system,
        system=system_to_document(sys_obj),
        seeds={"sample": args.seed},
        outputs=[args.out],
        options={
            "n": args.n, "orbits": args.orbits, "qs": qs,
            "depth_min": args.depth_min, "depth_max": args.depth_max,
        },
        tool_version=__version__,
        wall_time_s=time.monotonic() - started,
    )
    _write_manifest(manifest, args.manifest or args.out + ".manifest.json")
    return EXIT_OK


# ---------------------------------------------------------------------------
# binomial
# ---------------------------------------------------------------------------

def cmd_binomial(args) -> int:
    try:
        xs = [Fraction(s) for s in (args.x or ["3/2", "2", "4"])]
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(EXIT_INPUT, "binomial", f"bad x value: {exc}")
    if any(x <= 1 for x in xs):
        raise CliError(EXIT_INPUT, "binomial", "every x must exceed 1")
    ks = sorted({2 ** j - 1 for j in range(1, 40) if 2 ** j - 1 <= args.k_max})
    km = args.k_max if args.k_max % 2 == 1 else args.k_max - 1
    ks = sorted(set(ks) | {km})
    started = time.monotonic()
    header, rows = _binomial_rows(xs, ks)
    _write_csv_io(args.out, header, rows)
    manifest = RunManifest(
        command="binomial",
        outputs=[args.out],
        options={"xs": [str(x) for x in xs], "k_max": args.k_max},
        tool_version=__version__,
        wall_time_s=time.monotonic() - started,
    )
    _write_manifest(manifest, args.manifest or args.out + ".manifest.json")
    return EXIT_OK


# ---------------------------------------------------------------------------
# replay
# ---------------------------------------------------------------------------

def cmd_replay(args) -> int:
    try:
        m = RunManifest.load(args.manifest)
    except OSError as exc:
        raise CliError(EXIT_IO, "replay", str(exc))
    except (json.JSONDecodeError, TypeError) as exc:
        raise CliError(EXIT_INPUT, "replay", f"bad manifest: {exc}")

    if m.command == "spectrum":
        sys_obj = system_from_document(m.system) if m.system else _load_system_arg(m.input_path)
        qs = _grid(m.q_min, m.q_max, m.q_step)
        header, rows = _spectrum_rows(
            sys_obj, qs, m.ks, m.options.get("extrapolate", False), m.options.get("k_cap", 512)
        )
        _write_csv_io(m.outputs[0], header, rows)
    elif m.command == "gendim":
        sys_obj = system_from_document(m.system) if m.system else _load_system_arg(m.input_path)
        qs = [q for q in _grid(m.q_min, m.q_max, m.q_step) if abs(q - 1.0) > Q1_GUARD]
        header, rows = _gendim_rows(sys_obj, qs, m.ks)
        _write_csv_io(m.outputs[0], header, rows)
    elif m.command == "binomial":
        header, rows = _binomial_rows(
            [Fraction(s) for s in m.options["xs"]],
            sorted({2 ** j - 1 for j in range(1, 40) if 2 ** j - 1 <= m.options["k_max"]}
                   | {m.options["k_max"] if m.options["k_max"] % 2 == 1 else m.options["k_max"] - 1}),
        )
        _write_csv_io(m.outputs[0], header, rows)
    elif m.command == "boxcount":
        sys_obj = system_from_document(m.system) if m.system else _load_system_arg(m.input_path)
        o = m.options
        header, rows, _ = _boxcount_rows(
            sys_obj, o["n"], m.seeds.get("sample", 0),
            range(o["depth_min"], o["depth_max"] + 1), o["qs"], o["orbits"],
        )
        _write_csv_io(m.outputs[0], header, rows)
    elif m.command == "render":
        sys_obj = system_from_document(m.system) if m.system else _load_system_arg(m.input_path)
        cfg = RenderConfig(
            width=m.options["width"], height=m.options["height"],
            iterations=m.options["iterations"], seed=m.seeds.get("render", 0),
            mode=m.options["mode"], depth=m.options["depth"],
            overlay=m.options["overlay"],
            randomize_translations=m.seeds.get("random_translations"),
        )
        render(sys_obj, cfg, m.outputs[0])
    elif m.command == "reproduce":
        doc = _data_manifest(m.options["name"])
        os.makedirs(m.options["outdir"], exist_ok=True)
        _REPRODUCERS[m.options["name"]](doc, m.options["outdir"])
    else:
        raise CliError(EXIT_INPUT, "replay", f"unknown command {m.command!r} in manifest")
    return EXIT_OK


# ---------------------------------------------------------------------------
# plumbing
# ---------------------------------------------------------------------------

def _write_csv_io(path, header, rows) -> None:
    try:
        write_csv(path, header, rows)
    except OSError as exc:
        raise CliError(EXIT_IO, "output", str(exc))


def _write_manifest(manifest: RunManifest, path) -> None:
    try:
        manifest.write(path)
    except OSError as exc:
        raise CliError(EXIT_IO, "output", str(exc))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _emit_error(EXIT_INPUT, "args", message)
        self.exit(EXIT_INPUT)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="spectra", description=__doc__)
    p.add_argument("--version", action="version", version=f"spectra {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="moment scaling sweep over a q-grid")
    sp.add_argument("--system", required=True, help="system definition JSON")
    sp.add_argument("--q-min", type=float, default=0.0)
    sp.add_argument("--q-max", type=float, default=20.0)
    sp.add_argument("--q-step", type=float, default=0.05)
    sp.add_argument("--k", type=int, action="append", help="level-k column (repeatable)")
    sp.add_argument("--extrapolate", action="store_true",
                    help="add a non-rigorous accelerated limit column")
    sp.add_argument("--k-cap", type=int, default=512, help="doubling-sweep cap for --extrapolate")
    sp.add_argument("--out", required=True)
    sp.add_argument("--manifest", default=None)
    sp.set_defaults(func=cmd_spectrum)

    gd = sub.add_parser("gendim", help="generalised-dimension sweep over a q-grid")
    gd.add_argument("--system", required=True)
    gd.add_argument("--q-min", type=float, default=0.0)
    gd.add_argument("--q-max", type=float, default=5.0)
    gd.add_argument("--q-step", type=float, default=0.05)
    gd.add_argument("--k", type=int, action="append")
    gd.add_argument("--out", required=True)
    gd.add_argument("--manifest", default=None)
    gd.set_defaults(func=cmd_gendim)

    rp = sub.add_parser("reproduce", help="write a named canonical artifact")
    rp.add_argument("name", help="one of: " + ", ".join(REPRODUCE_NAMES))
    rp.add_argument("--outdir", default=".")
    rp.set_defaults(func=cmd_reproduce)

    rd = sub.add_parser("render", help="render the attractor or a rectangle cover")
    rd.add_argument("--system", required=True)
    rd.add_argument("--out", required=True, help=".ppm (density) or .svg (rectangles)")
    rd.add_argument("--width", type=int, default=800)
    rd.add_argument("--height", type=int, default=800)
    rd.add_argument("--iterations", type=int, default=200000)
    rd.add_argument("--seed", type=int, default=0)
    rd.add_argument("--mode", choices=[MODE_CHAOS, MODE_DETERMINISTIC], default=MODE_CHAOS)
    rd.add_argument("--depth", type=int, default=1)
    rd.add_argument("--overlay", action="store_true")
    rd.add_argument("--random-translations", type=int, default=None, metavar="SEED")
    rd.add_argument("--manifest", default=None)
    rd.set_defaults(func=cmd_render)

    bc = sub.add_parser("boxcount", help="grid moments of sampled mass per depth")
    bc.add_argument("--system", required=True)
    bc.add_argument("--n", type=int, default=10**6, help="number of binned samples")
    bc.add_argument("--seed", type=int, default=0)
    bc.add_argument("--depth-min", type=int, default=4)
    bc.add_argument("--depth-max", type=int, default=9)
    bc.add_argument("--q", type=float, action="append")
    bc.add_argument("--orbits", type=int, default=1, help="independent sub-orbits")
    bc.add_argument("--out", required=True)
    bc.add_argument("--manifest", default=None)
    bc.set_defaults(func=cmd_boxcount)

    bn = sub.add_parser("binomial", help="split binomial growth table")
    bn.add_argument("--x", action="append", help="x > 1, float or fraction like 7/2 (repeatable)")
    bn.add_argument("--k-max", type=int, default=2001)
    bn.add_argument("--out", required=True)
    bn.add_argument("--manifest", default=None)
    bn.set_defaults(func=cmd_binomial)

    rl = sub.add_parser("replay", help="re-run a recorded manifest")
    rl.add_argument("manifest")
    rl.set_defaults(func=cmd_replay)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        _emit_error(exc.code, exc.stage, str(exc))
        return exc.code
    except SystemDefinitionError as exc:
        _emit_error(EXIT_INPUT, "input", str(exc))
        return EXIT_INPUT
    except (SolverError, ProjectionOverlapError) as exc:
        _emit_error(EXIT_SOLVER, "solver", str(exc))
        return EXIT_SOLVER
    except OSError as exc:
        _emit_error(EXIT_IO, "io", str(exc))
        return EXIT_IO
    except ValueError as exc:
        _emit_error(EXIT_INPUT, "input", str(exc))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
