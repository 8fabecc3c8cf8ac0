"""Command-line front end.

Complex values are written ``re,im`` (``--alpha 15,-88``); a bare number
is real.  Every option can also come from a ``--config`` file of
``key = value`` lines whose keys are the long option names; options given on
the command line win.  Exit status is 0 on success, 1 on a usage error and
2 when the computation itself fails (a guard fired, degenerate parameters,
unreadable input).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from pathlib import Path

import numpy as np

from . import audit as audit_mod
from .cases import PRINTED_STABILITY_ROWS, LagOrder, effective_spec
from .chaos import DEFAULT_STEPS, DEFAULT_TRANSIENT, OrbitTerminated, box_dimension, lyapunov_max
from .classify import (DEFAULT_BUDGET, DEFAULT_LYAPUNOV_STEPS, SWEEP_BUDGET, SWEEP_CELL_CAP,
                       SWEEP_LYAPUNOV_STEPS, Axis, SweepGrid, VerdictKind, classify_orbit, sweep)
from .cycles import DEFAULT_STARTS, CycleSystem, InsufficientLength, detect_period, newton_multistart
from .export import atomic_write, export_orbit, orbit_to_csv, orbit_to_json, read_points
from .maps import ForbiddenStep, MapKind, MapSpec, State, iterate
from .stability import (DegenerateParameters, audit_tables, charpoly, lemma_predicates, report,
                        solve_quadratic)
from .svg import PlotKind, PlotSpec, render_plot

SEED_ENV = "HOLOMAP_SEED"
STATE_SPACE_BUDGET = 50_000
ORBIT_BUDGET = 10_000

_NEGATIVE_VALUE = re.compile(r"^-(\d|\.\d)")


class UsageError(Exception):
    def __init__(self, message: str, parser: argparse.ArgumentParser | None = None):
        super().__init__(message)
        self.parser = parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message, self)


# ---------------------------------------------------------------------------
# argument types

def parse_complex(text: str) -> complex:
    """``"re,im"`` or ``"re"`` to a finite complex number."""
    s = text.strip().strip("()").replace(" ", "")
    parts = s.split(",")
    if len(parts) > 2 or not all(parts):
        raise argparse.ArgumentTypeError(f"expected re,im but got {text!r}")
    try:
        vals = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected re,im but got {text!r}") from None
    if not all(math.isfinite(v) for v in vals):
        raise argparse.ArgumentTypeError(f"non-finite value in {text!r}")
    return complex(vals[0], vals[1] if len(vals) == 2 else 0.0)


def parse_range(text: str) -> tuple[float, float]:
    z = parse_complex(text)
    if not z.imag > z.real:
        raise argparse.ArgumentTypeError(f"range {text!r} needs lo,hi with hi > lo")
    return z.real, z.imag


def parse_axis(text: str) -> Axis:
    """``name:lo:hi:resolution``, e.g. ``z0.re:-1:1:11``."""
    parts = text.split(":")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"axis {text!r} is not name:lo:hi:resolution")
    try:
        return Axis(parts[0], float(parts[1]), float(parts[2]), int(parts[3]))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _map_kind(text: str) -> MapKind:
    try:
        return MapKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# ---------------------------------------------------------------------------
# parser

def _common() -> argparse.ArgumentParser:
    p = _Parser(add_help=False)
    p.add_argument("--config", metavar="FILE", help="key = value file; command-line options override it")
    p.add_argument("--seed", type=int, help=f"random seed (default: ${SEED_ENV} or 0)")
    p.add_argument("--out", metavar="PATH", help="output file (default: standard output)")
    return p


def _spec_opts() -> argparse.ArgumentParser:
    p = _Parser(add_help=False)
    p.add_argument("--map", type=_map_kind, help="e1, e8 or e9")
    p.add_argument("--alpha", type=parse_complex, metavar="RE,IM")
    p.add_argument("--beta", type=parse_complex, metavar="RE,IM")
    p.add_argument("--lag-order", choices=[o.value for o in LagOrder], default=LagOrder.STANDARD.value,
                   help="'reversed' swaps z_n and z_(n-1) on the right-hand side (default: standard)")
    return p


def _state_opts() -> argparse.ArgumentParser:
    p = _Parser(add_help=False)
    p.add_argument("--z0", type=parse_complex, metavar="RE,IM", help="first initial value")
    p.add_argument("--z1", type=parse_complex, metavar="RE,IM", help="second initial value")
    return p


def build_parser() -> argparse.ArgumentParser:
    common, spec, state = _common(), _spec_opts(), _state_opts()
    parser = _Parser(prog="holomap", description="Complex dynamics of three rational second-order recurrences.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("orbit", parents=[common, spec, state], help="iterate and export an orbit")
    p.add_argument("--n", type=_positive_int, default=ORBIT_BUDGET, help="number of iterates")
    p.add_argument("--format", choices=["csv", "json"], help="default: from --out suffix, else csv")

    p = sub.add_parser("equilibria", parents=[common, spec], help="equilibria and local stability")
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("audit", parents=[common], help="recompute printed claims and list discrepancies")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--no-orbits", action="store_true", help="skip the orbit experiments (seconds faster)")

    p = sub.add_parser("cycles", parents=[common, spec], help="find cycles of a given period by Newton multistart")
    p.add_argument("--period", type=_positive_int, required=False)
    p.add_argument("--starts", type=_positive_int, default=DEFAULT_STARTS)
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("detect-period", parents=[common, spec, state], help="period of the tail of an orbit")
    p.add_argument("--input", metavar="FILE", help="orbit CSV/JSON instead of an inline run")
    p.add_argument("--n", type=_positive_int, default=ORBIT_BUDGET)
    p.add_argument("--p-max", type=_positive_int, default=64)
    p.add_argument("--window", type=_positive_int, default=200)
    p.add_argument("--tol", type=float)
    p.add_argument("--transient", type=_nonneg_int)

    p = sub.add_parser("lyapunov", parents=[common, spec, state], help="largest Lyapunov exponent")
    p.add_argument("--transient", type=_nonneg_int, default=DEFAULT_TRANSIENT)
    p.add_argument("--steps", type=_positive_int, default=DEFAULT_STEPS)

    p = sub.add_parser("boxdim", parents=[common, spec, state], help="box-counting dimension of an orbit")
    p.add_argument("--input", metavar="FILE", help="orbit CSV/JSON instead of an inline run")
    p.add_argument("--n", type=_positive_int, default=STATE_SPACE_BUDGET)
    p.add_argument("--skip", type=_nonneg_int, default=0, help="drop this many leading points")
    p.add_argument("--k-min", type=_positive_int, default=4)
    p.add_argument("--k-max", type=_positive_int, default=10)

    p = sub.add_parser("classify", parents=[common, spec, state], help="verdict for one orbit")
    p.add_argument("--budget", type=_positive_int, default=DEFAULT_BUDGET)
    p.add_argument("--lyapunov-steps", type=_positive_int, default=DEFAULT_LYAPUNOV_STEPS)

    p = sub.add_parser("sweep", parents=[common, spec, state], help="verdict raster over a grid")
    p.add_argument("--axis", type=parse_axis, action="append", metavar="NAME:LO:HI:RES",
                   help="varying axis, repeatable; NAME is one of z0.re z0.im z1.re z1.im alpha.re ...")
    p.add_argument("--budget", type=_positive_int, default=SWEEP_BUDGET)
    p.add_argument("--lyapunov-steps", type=_positive_int, default=SWEEP_LYAPUNOV_STEPS)
    p.add_argument("--cap", type=_positive_int, default=SWEEP_CELL_CAP)
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--format", choices=["json", "csv"], default="json")

    sub.add_parser("tables", parents=[common], help="characteristic-polynomial tables with recomputed moduli")

    p = sub.add_parser("plot", parents=[common, spec, state], help="SVG plot of an orbit")
    p.add_argument("--input", metavar="FILE", help="orbit CSV/JSON instead of an inline run")
    p.add_argument("--kind", choices=[k.value for k in PlotKind], default=PlotKind.SERIES.value)
    p.add_argument("--n", type=_positive_int, help=f"iterates (default {ORBIT_BUDGET} series, "
                                                     f"{STATE_SPACE_BUDGET} scatter)")
    p.add_argument("--skip", type=_nonneg_int, default=0, help="drop this many leading points")
    p.add_argument("--width", type=_positive_int, default=800)
    p.add_argument("--height", type=_positive_int, default=500)
    p.add_argument("--radius", type=float, default=0.5, help="scatter marker radius in px")
    p.add_argument("--x-range", type=parse_range, metavar="LO,HI")
    p.add_argument("--y-range", type=parse_range, metavar="LO,HI")
    p.add_argument("--title")
    return parser


# ---------------------------------------------------------------------------
# argv preprocessing

def _merge_negative_values(argv: list[str]) -> list[str]:
    """Join ``--opt -1,2`` into ``--opt=-1,2`` so argparse does not take the value for a flag."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if (tok.startswith("--") and "=" not in tok and i + 1 < len(argv)
                and _NEGATIVE_VALUE.match(argv[i + 1])):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def read_config(path) -> list[tuple[str, str]]:
    """``key = value`` pairs from a config file; ``#`` starts a comment line."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc.strerror or exc}") from None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep or not key.strip():
            raise UsageError(f"{path}:{lineno}: expected key = value")
        pairs.append((key.strip().lstrip("-").replace("_", "-"), value.strip()))
    return pairs


def _find_config(argv: list[str]) -> str | None:
    path = None
    for i, tok in enumerate(argv):
        if tok == "--config":
            if i + 1 >= len(argv):
                raise UsageError("--config needs a file")
            path = argv[i + 1]
        elif tok.startswith("--config="):
            path = tok.split("=", 1)[1]
    return path


def _subparsers(parser: argparse.ArgumentParser) -> dict[str, argparse.ArgumentParser]:
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            return dict(action.choices)
    return {}


def _config_tokens(pairs, command: str, subs: dict[str, argparse.ArgumentParser]) -> list[str]:
    """Command-line tokens for the config entries that ``command`` accepts.

    Keys valid for some other subcommand are skipped so one file can serve
    several commands; keys valid for none are an error.
    """
    mine = subs[command]._option_string_actions
    known = set().union(*(p._option_string_actions for p in subs.values()))
    tokens = []
    for key, value in pairs:
        opt = f"--{key}"
        if opt == "--config":
            raise UsageError("config files cannot include other config files")
        if opt not in known:
            raise UsageError(f"unknown config key {key!r}")
        if opt not in mine:
            continue
        action = mine[opt]
        if action.nargs == 0:
            if value.lower() in ("1", "true", "yes", "on"):
                tokens.append(opt)
            elif value.lower() not in ("0", "false", "no", "off"):
                raise UsageError(f"config key {key!r} takes true or false")
        else:
            tokens.append(f"{opt}={value}")
    return tokens


def parse_args(argv: list[str]) -> argparse.Namespace:
    parser = build_parser()
    argv = _merge_negative_values(list(argv))
    config = _find_config(argv)
    if config is not None:
        subs = _subparsers(parser)
        if not argv or argv[0] not in subs:
            parser.parse_args(argv)  # reports the missing or unknown command
        argv = [argv[0]] + _config_tokens(read_config(config), argv[0], subs) + argv[1:]
    args = parser.parse_args(argv)
    args._parser = _subparsers(parser)[args.command]
    return args


# ---------------------------------------------------------------------------
# helpers

def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV)
    if env is None or env.strip() == "":
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"${SEED_ENV} must be an integer, got {env!r}") from None


def _require(args, *names):
    missing = [n for n in names if getattr(args, n.replace("-", "_")) is None]
    if missing:
        raise UsageError("missing " + ", ".join(f"--{m}" for m in missing), args._parser)


def _spec(args) -> MapSpec:
    _require(args, "map", "alpha", "beta")
    return effective_spec(MapSpec(args.map, args.alpha, args.beta), args.lag_order)


def _state(args) -> State:
    _require(args, "z0", "z1")
    return State(args.z0, args.z1)


def _pair(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _finite_or_none(x: float):
    return x if math.isfinite(x) else None


def _spec_dict(spec: MapSpec, args) -> dict:
    return {"map": spec.kind.value, "alpha": _pair(spec.alpha), "beta": _pair(spec.beta),
            "lag_order": args.lag_order, "as_given": {"map": args.map.value, "alpha": _pair(args.alpha),
                                                       "beta": _pair(args.beta)}}


def _emit(args, text: str) -> None:
    if args.out:
        try:
            atomic_write(args.out, text)
        except OSError as exc:
            raise OSError(f"cannot write {args.out}: {exc.strerror or exc}") from exc
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _points(args, default_n: int) -> np.ndarray:
    """Points from ``--input`` or from an inline run; guard hits are reported on stderr."""
    if args.input:
        pts = read_points(args.input)
    else:
        o = iterate(_spec(args), _state(args), args.n or default_n)
        if not o.status.completed:
            if len(o) == 0:
                raise RuntimeError(f"orbit stopped before the first iterate: {o.status}")
            args._warning = f"orbit stopped early: {o.status}; using {len(o)} iterates"
        pts = o.points
    return pts[getattr(args, "skip", 0):]


def _fmt_c(z: complex) -> str:
    re_, im = z.real + 0.0, z.imag + 0.0
    return f"{re_:+.6f}{im:+.6f}i"


def render_tables() -> str:
    """Characteristic-polynomial tables with recomputed roots, as fixed-width text."""
    audit = audit_tables()
    lines = []
    current = None
    header = (f"{'case':<18} {'printed polynomial':<26} {'a1':<21} {'a0':<21} "
              f"{'|l+|':>8} {'|l-|':>8}  {'class':<16} {'printed':<22} flag")
    for printed, row in zip(PRINTED_STABILITY_ROWS, audit.rows):
        if row.table != current:
            if current is not None:
                lines.append("")
            current = row.table
            lines.append(f"{row.kind.value}: l^2 + a1 l + a0 at the equilibrium")
            lines.append(header)
            lines.append("-" * len(header))
        p = charpoly(MapSpec(row.kind, printed.case.alpha, printed.case.beta))
        m1, m2 = row.moduli
        claim = f"{row.printed_claim} {row.printed_inference}"
        flag = "agree" if row.agrees else "DISAGREE"
        lines.append(f"{row.case:<18} {row.printed_polynomial:<26} {_fmt_c(p.a1):<21} {_fmt_c(p.a0):<21} "
                     f"{m1:8.6f} {m2:8.6f}  {row.stability.value:<16} {claim:<22} {flag}")
    lines.append("")
    lines.append(f"{len(audit.disagreements)} of {len(audit.rows)} rows disagree with the recomputed roots")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# commands

def cmd_orbit(args) -> int:
    o = iterate(_spec(args), _state(args), args.n)
    if len(o) == 0:
        raise RuntimeError(f"orbit stopped before the first iterate: {o.status}")
    fmt = args.format or (Path(args.out).suffix.lstrip(".").lower() if args.out else "csv")
    if fmt not in ("csv", "json"):
        fmt = "csv"
    if args.out:
        export_orbit(o, args.out, fmt)
    else:
        sys.stdout.write(orbit_to_csv(o) if fmt == "csv" else orbit_to_json(o))
    if not o.status.completed:
        print(f"holomap: orbit stopped early: {o.status}; {len(o)} iterates written", file=sys.stderr)
        return 2
    return 0


def cmd_equilibria(args) -> int:
    spec = _spec(args)
    reps = report(spec)
    lemma = lemma_predicates(spec)
    p = charpoly(spec)
    if args.format == "csv":
        rows = ["z_re,z_im,root1_re,root1_im,root2_re,root2_im,modulus1,modulus2,class,residual"]
        for r in reps:
            l1, l2 = r.roots.lambda_plus, r.roots.lambda_minus
            m1, m2 = r.roots.moduli
            rows.append(",".join(repr(float(v)) for v in (*_pair(r.equilibrium), *_pair(l1), *_pair(l2), m1, m2))
                        + f",{r.stability.value},{r.residual!r}")
        _emit(args, "\n".join(rows) + "\n")
        return 0
    out = {
        "spec": _spec_dict(spec, args),
        "charpoly": {"a1": _pair(p.a1), "a0": _pair(p.a0)},
        "equilibria": [{
            "z": _pair(r.equilibrium),
            "roots": [_pair(r.roots.lambda_plus), _pair(r.roots.lambda_minus)],
            "moduli": list(r.roots.moduli),
            "class": r.stability.value,
            "labels": list(r.stability.legacy_labels),
            "residual": r.residual,
        } for r in reps],
        "chain_conditions": {
            "stable_condition": lemma.stable_condition,
            "outside_condition": lemma.outside_condition,
            "hyperbolic": lemma.hyperbolic,
            "chain_sup": _finite_or_none(lemma.chain_sup),
        },
    }
    _emit(args, _json(out))
    return 0


def cmd_audit(args) -> int:
    findings = audit_mod.discrepancy_log(orbits=not args.no_orbits)
    if args.format == "json":
        _emit(args, _json([f.to_dict() for f in findings]))
    else:
        bad = sum(not f.agrees for f in findings)
        _emit(args, "\n".join(f.line() for f in findings) + f"\n{bad} of {len(findings)} checks disagree\n")
    return 0


def cmd_cycles(args) -> int:
    _require(args, "period")
    spec = _spec(args)
    res = newton_multistart(CycleSystem(spec, args.period), args.starts, _seed(args))
    if args.format == "csv":
        rows = ["cycle,index,re,im,stability"]
        for i, cyc in enumerate(res.cycles):
            for j, z in enumerate(cyc.points):
                rows.append(f"{i},{j},{z.real!r},{z.imag!r},{cyc.stability.value}")
        _emit(args, "\n".join(rows) + "\n")
        return 0
    out = {
        "spec": _spec_dict(spec, args),
        "period": args.period,
        "starts": args.starts,
        "seed": res.seed,
        "converged": res.converged,
        "lower_period_hits": {str(k): v for k, v in sorted(res.lower_period.items())},
        "cycles": [{
            "points": [_pair(z) for z in c.points],
            "residual": c.residual,
            "multiplier_moduli": list(c.multiplier_moduli),
            "stability": c.stability.value,
        } for c in res.cycles],
    }
    _emit(args, _json(out))
    return 0


def cmd_detect_period(args) -> int:
    pts = _points(args, ORBIT_BUDGET)
    det = detect_period(pts, p_max=args.p_max, window=args.window, tol=args.tol, transient=args.transient)
    out = {
        "detected_period": det.detected_period,
        "max_deviation": det.max_deviation,
        "tol": det.tol,
        "limit_cycle": None if det.limit_cycle is None else [_pair(z) for z in det.limit_cycle],
    }
    _emit(args, _json(out))
    return 0


def cmd_lyapunov(args) -> int:
    spec = _spec(args)
    est = lyapunov_max(spec, _state(args), transient=args.transient, steps=args.steps)
    _emit(args, _json({"spec": _spec_dict(spec, args), "lambda_max": est.lambda_max,
                       "steps": est.steps_used, "transient": est.transient_skipped}))
    return 0


def cmd_boxdim(args) -> int:
    pts = _points(args, STATE_SPACE_BUDGET)
    est = box_dimension(pts, k_min=args.k_min, k_max=args.k_max)
    _emit(args, _json({"points": int(len(pts)), "dimension": est.dimension, "fit_r2": est.fit_r2,
                       "scales": [[s, n] for s, n in est.scales]}))
    return 0


def cmd_classify(args) -> int:
    r = classify_orbit(_spec(args), _state(args), args.budget, lyapunov_steps=args.lyapunov_steps)
    d = r.to_dict()
    d["spec"] = _spec_dict(r.spec, args)
    _emit(args, _json(d))
    return 0


def cmd_sweep(args) -> int:
    if not args.axis:
        raise UsageError("sweep needs at least one --axis", args._parser)
    names = [a.name for a in args.axis]
    if len(set(names)) != len(names):
        raise UsageError("an axis may appear only once", args._parser)
    spec, state = _spec(args), _state(args)
    grid = sweep(SweepGrid(spec, state, tuple(args.axis)), budget=args.budget, seed=_seed(args),
                 lyapunov_steps=args.lyapunov_steps, cap=args.cap, workers=args.workers)
    if args.format == "csv":
        rows = [",".join(names + ["verdict", "code"])]
        values = [a.values for a in grid.axes]
        for idx in np.ndindex(*grid.shape):
            code = int(grid.raster[idx])
            coords = [repr(float(values[k][i])) for k, i in enumerate(idx)]
            rows.append(",".join(coords + [VerdictKind(code).name.lower(), str(code)]))
        _emit(args, "\n".join(rows) + "\n")
        return 0
    out = {
        "spec": _spec_dict(spec, args),
        "initial": {"z0": _pair(state.z_prev), "z1": _pair(state.z_curr)},
        "axes": [{"name": a.name, "lo": a.lo, "hi": a.hi, "resolution": a.resolution} for a in grid.axes],
        "budget": args.budget,
        "lyapunov_steps": args.lyapunov_steps,
        "seed": _seed(args),
        "legend": {str(int(v)): v.name.lower() for v in VerdictKind},
        "raster": grid.raster.tolist(),
    }
    _emit(args, _json(out))
    return 0


def cmd_tables(args) -> int:
    _emit(args, render_tables())
    return 0


def cmd_plot(args) -> int:
    kind = PlotKind(args.kind)
    default_n = STATE_SPACE_BUDGET if kind is PlotKind.SCATTER else ORBIT_BUDGET
    pts = _points(args, default_n)
    if len(pts) == 0:
        raise RuntimeError("nothing to plot after --skip")
    spec = PlotSpec(kind, args.width, args.height, marker_radius=args.radius,
                    x_range=args.x_range, y_range=args.y_range, title=args.title)
    _emit(args, render_plot(pts, spec))
    return 0


COMMANDS = {
    "orbit": cmd_orbit,
    "equilibria": cmd_equilibria,
    "audit": cmd_audit,
    "cycles": cmd_cycles,
    "detect-period": cmd_detect_period,
    "lyapunov": cmd_lyapunov,
    "boxdim": cmd_boxdim,
    "classify": cmd_classify,
    "sweep": cmd_sweep,
    "tables": cmd_tables,
    "plot": cmd_plot,
}

RUNTIME_ERRORS = (ForbiddenStep, OrbitTerminated, DegenerateParameters, InsufficientLength,
                  ArithmeticError, RuntimeError, ValueError, OSError)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = parse_args(argv)
        args._warning = None
        code = COMMANDS[args.command](args)
    except UsageError as exc:
        (exc.parser or build_parser()).print_usage(sys.stderr)
        print(f"holomap: error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else 0
    except RUNTIME_ERRORS as exc:
        print(f"holomap: {exc}", file=sys.stderr)
        return 2
    if args._warning:
        print(f"holomap: {args._warning}", file=sys.stderr)
        return max(code, 2)
    return code
