"""Command-line front end.

Subcommands: ``solve``, ``table``, ``scan``, ``wavefunction`` and ``validate``.
Exit codes: 0 success, 1 usage error, 2 no root or singular guard,
3 validation failure. Flags override the config file, which overrides the
built-in defaults.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

import numpy as np

from .errors import (
    ComplexBranch,
    DivergentLimit,
    ExponentSingular,
    InvalidKappa,
    InvalidParams,
    PoleOnContour,
    PTDiracError,
)
from .model import PotentialParams, QuantumNumbers, Symmetry, SymmetryChoice
from .oracle import GridSpec
from .pspin import pspin_lower_component, pspin_upper_component
from .reference import CPS_CANDIDATES, CS_CANDIDATES, reference_rows
from .roots import SolverOptions
from .spin import spin_lower_component, spin_upper_component
from .validation import TableEntry, reproduce_table, run_validation, select_root, solve_state

EXIT_OK, EXIT_USAGE, EXIT_NOROOT, EXIT_VALIDATION = 0, 1, 2, 3

DEFAULTS = {
    "symmetry": "spin",
    "alpha": 0.35,
    "A": 8.0,
    "B": 2.0,
    "M": 5.0,
    "Cs": 0.35,
    "Cps": -15.0,
    "x0": 0.1,
    "sigma": 1,
    "tau": -1,
    "tol": 1e-12,
    "format": "csv",
    "x_from": 0.1,
    "samples": 200,
}

_TYPES = {
    "symmetry": str, "alpha": float, "A": float, "B": float, "M": float, "Cs": float,
    "Cps": float, "x0": float, "n": int, "kappa": int, "sigma": int, "tau": int, "tol": float,
    "grid_points": int, "out": str, "format": str, "vary": str, "from_": float, "to": float,
    "steps": int, "x_from": float, "x_to": float, "samples": int,
}

_PARAM_FLAGS = {"alpha": "--alpha", "A": "--A", "B": "--B", "M": "--M", "x0": "--x0"}


class UsageError(Exception):
    def __init__(self, flag: str | None, message: str):
        super().__init__(f"{flag}: {message}" if flag else message)
        self.flag = flag


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 rather than argparse's 2
        raise UsageError(None, message)


@dataclass(frozen=True)
class RunConfig:
    params: PotentialParams
    symmetry: SymmetryChoice
    states: list[QuantumNumbers]
    opts: SolverOptions
    out: str | None
    fmt: str

    def __post_init__(self):
        if not self.states:
            raise UsageError("--n/--kappa", "no states selected")
        if not self.opts.xtol > 0:
            raise UsageError("--tol", "tolerance must be positive")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--symmetry", choices=["spin", "pspin"])
    for name in ("alpha", "A", "B", "M", "Cs", "Cps"):
        p.add_argument(f"--{name}", type=float)
    p.add_argument("--x0", type=float, help="imaginary shift in fm (default 0.1)")
    p.add_argument("--n", type=int)
    p.add_argument("--kappa", type=int)
    p.add_argument("--sigma", type=int, choices=[-1, 1])
    p.add_argument("--tau", type=int, choices=[-1, 1])
    p.add_argument("--tol", type=float, help="root tolerance (default 1e-12)")
    p.add_argument("--grid-points", dest="grid_points", type=int,
                   help="root-scan points (oracle grid points for validate)")
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--format", choices=["csv", "markdown"])
    p.add_argument("--config", help="flat key=value file")
    p.add_argument("--quick", action="store_true", help="lowest-n states only")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ptdirac", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, text in (("solve", "solve one state"), ("table", "reproduce a reference table"),
                       ("scan", "sweep one parameter"), ("wavefunction", "sample F and G"),
                       ("validate", "run the acceptance checks")):
        p = sub.add_parser(name, help=text)
        _common(p)
        if name == "scan":
            p.add_argument("--vary", choices=["alpha", "A", "B", "M", "Cs", "Cps"])
            p.add_argument("--from", dest="from_", type=float)
            p.add_argument("--to", type=float)
            p.add_argument("--steps", type=int)
        if name == "wavefunction":
            p.add_argument("--x-from", dest="x_from", type=float)
            p.add_argument("--x-to", dest="x_to", type=float)
            p.add_argument("--samples", type=int)
    return parser


def read_config(path: str) -> dict:
    """Parse a flat key=value file; keys are flag names without leading dashes."""
    out = {}
    try:
        text = open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError("--config", f"cannot read {path}: {exc.strerror}") from None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError("--config", f"line {lineno} is not key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.lstrip("-").replace("-", "_")
        key = "from_" if key == "from" else key
        if key not in _TYPES:
            raise UsageError("--config", f"unknown key '{key}' on line {lineno}")
        try:
            out[key] = _TYPES[key](value)
        except ValueError:
            raise UsageError("--config", f"bad value for '{key}' on line {lineno}") from None
    return out


def _symmetry(v: dict) -> Symmetry:
    try:
        return Symmetry(v["symmetry"])
    except ValueError:
        raise UsageError("--symmetry", "must be spin or pspin") from None


def resolve(args: argparse.Namespace) -> dict:
    """Merge flags over the config file over the defaults."""
    config = read_config(args.config) if args.config else {}
    merged = dict(DEFAULTS)
    merged.update(config)
    merged["_explicit"] = set(config)
    for key, value in vars(args).items():
        if value is not None and key not in ("config", "command"):
            merged[key] = value
            merged["_explicit"].add(key)
    if merged["format"] not in ("csv", "markdown"):
        raise UsageError("--format", "must be csv or markdown")
    return merged


def make_params(v: dict) -> PotentialParams:
    """Potential from the merged values; A > alpha and B > alpha are required here."""
    try:
        params = PotentialParams(alpha=v["alpha"], A=v["A"], B=v["B"], M=v["M"], x0=v["x0"])
    except InvalidParams as exc:
        msg = str(exc)
        name = "x0" if "x0" in msg else msg.split()[0]
        raise UsageError(_PARAM_FLAGS.get(name, "--alpha"), msg) from None
    bad = _unphysical(params)
    if bad:
        raise UsageError(f"--{bad}", f"{bad} must exceed alpha")
    return params


def _unphysical(params: PotentialParams) -> str | None:
    for name in ("A", "B"):
        if not getattr(params, name) > params.alpha:
            return name
    return None


def make_opts(v: dict) -> SolverOptions:
    if not v["tol"] > 0:
        raise UsageError("--tol", "tolerance must be positive")
    kw = dict(xtol=v["tol"], sigma=v["sigma"], tau=v["tau"])
    if v.get("grid_points") is not None:
        if v["grid_points"] < 100:
            raise UsageError("--grid-points", "must be at least 100")
        kw["points"] = v["grid_points"]
    return SolverOptions(**kw)


def symmetry_choice(v: dict) -> SymmetryChoice:
    kind = _symmetry(v)
    return SymmetryChoice(kind, v["Cs"] if kind is Symmetry.SPIN else v["Cps"])


def single_state(v: dict) -> QuantumNumbers:
    for key in ("n", "kappa"):
        if v.get(key) is None:
            raise UsageError(f"--{key}", "required")
    if v["n"] < 0:
        raise UsageError("--n", "n must be nonnegative")
    try:
        return QuantumNumbers(v["n"], v["kappa"])
    except InvalidKappa as exc:
        raise UsageError("--kappa", str(exc)) from None


def run_config(v: dict, states: list[QuantumNumbers]) -> RunConfig:
    return RunConfig(params=make_params(v), symmetry=symmetry_choice(v), states=states,
                     opts=make_opts(v), out=v.get("out"), fmt=v["format"])


# --- output helpers -----------------------------------------------------

def _num(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if v is None:
        return "-"
    return f"{float(v):.12g}"


def render(header: list[str], rows: list[list], form: str) -> str:
    cells = [[c if isinstance(c, str) else _num(c) for c in r] for r in rows]
    if form == "markdown":
        lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
        lines += ["| " + " | ".join(r) + " |" for r in cells]
    else:
        lines = [",".join(header)] + [",".join(r) for r in cells]
    return "\n".join(lines) + "\n"


def emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


# --- commands -----------------------------------------------------------

def cmd_solve(v: dict) -> int:
    cfg = run_config(v, [single_state(v)])
    qn = cfg.states[0]
    sols = solve_state(cfg.symmetry.kind, qn.n, qn.kappa, cfg.params, cfg.symmetry.constant, cfg.opts)
    if not sols:
        print(f"no root for n={qn.n}, kappa={qn.kappa}", file=sys.stderr)
        return EXIT_NOROOT
    best = select_root(sols, cfg.symmetry.kind) or sols[0]
    names = ("lambda", "eta") if cfg.symmetry.kind is Symmetry.SPIN else ("nu", "delta")
    rows = [
        ["symmetry", cfg.symmetry.kind.value], ["constant", best.constant],
        ["n", qn.n], ["kappa", qn.kappa], ["energy", best.energy], ["residual", best.residual],
        [names[0], best.exponents.lam], [names[1], best.exponents.eta],
        ["n_max", best.n_max], ["exponent_sum", best.exponent_sum],
        ["physical", best.physical], ["notes", ";".join(best.notes) or "-"],
        ["other_roots", " ".join(_num(s.energy) for s in sols if s is not best) or "-"],
    ]
    emit(render(["field", "value"], rows, cfg.fmt), cfg.out)
    return EXIT_OK if best.physical else EXIT_NOROOT


def _table_rows(v: dict):
    sym = _symmetry(v)
    rows = reference_rows(sym)
    if v.get("quick"):
        lowest = min(r.n for r in rows)
        rows = [r for r in rows if r.n == lowest]
    if v.get("n") is not None:
        rows = [r for r in rows if r.n == v["n"]]
    if v.get("kappa") is not None:
        rows = [r for r in rows if v["kappa"] in r.kappas]
    return sym, rows


def cmd_table(v: dict) -> int:
    sym, rows = _table_rows(v)
    key = "Cs" if sym is Symmetry.SPIN else "Cps"
    if key in v["_explicit"]:
        constants = [v[key]]
    else:
        constants = list(CS_CANDIDATES if sym is Symmetry.SPIN else CPS_CANDIDATES)
    states = [QuantumNumbers(r.n, r.kappa_a) for r in rows]
    cfg = run_config(v, states)
    out = []
    for c in constants:
        entries: list[TableEntry] = reproduce_table(sym, c, cfg.params, cfg.opts, rows)
        for e in entries:
            r = e.row
            if e.solution is None:
                warn(f"no root for n={r.n}, kappa={r.kappa_a} at {key}={c}")
            out.append([c, r.l, r.n, r.kappa_a, r.kappa_b, r.label_a, r.label_b,
                        e.energy, r.energy, e.delta,
                        e.solution.physical if e.solution else "-"])
    header = [key, "l", "n", "kappa_a", "kappa_b", "label_a", "label_b", "energy", "reference",
              "delta", "physical"]
    emit(render(header, out, cfg.fmt), cfg.out)
    return EXIT_OK


def cmd_scan(v: dict) -> int:
    for key, flag in (("vary", "--vary"), ("from_", "--from"), ("to", "--to"), ("steps", "--steps")):
        if v.get(key) is None:
            raise UsageError(flag, "required")
    steps = v["steps"]
    if steps < 1:
        raise UsageError("--steps", "range is empty")
    if steps > 1 and not v["to"] > v["from_"]:
        raise UsageError("--to", "range must increase from --from to --to")
    sym = _symmetry(v)
    if v.get("n") is not None or v.get("kappa") is not None:
        states = [single_state(v)]
    else:
        _, rows = _table_rows(v)
        states = [QuantumNumbers(r.n, r.kappa_a) for r in rows]
    cfg = run_config(v, states)
    values = np.linspace(v["from_"], v["to"], steps) if steps > 1 else np.array([v["from_"]])
    name = v["vary"]
    out = []
    for value in values:
        const = cfg.symmetry.constant
        params = cfg.params
        try:
            if name in ("Cs", "Cps"):
                const = float(value)
            else:
                params = params.replace(**{name: float(value)})
                if _unphysical(params):
                    params = None
        except InvalidParams:
            params = None
        for qn in states:
            sol = None
            if params is not None:
                try:
                    sol = select_root(solve_state(sym, qn.n, qn.kappa, params, const, cfg.opts), sym)
                except ComplexBranch:
                    sol = None
            ok = sol is not None and sol.physical
            out.append([float(value), qn.n, qn.kappa, sol.energy if ok else math.nan, ok])
    emit(render(["param", "n", "kappa", "energy", "converged"], out, "csv"), cfg.out)
    return EXIT_OK


def _components(sym: Symmetry, sol, params, x):
    if sym is Symmetry.SPIN:
        return spin_upper_component(sol, params, x), spin_lower_component(sol, params, x)
    return pspin_upper_component(sol, params, x), pspin_lower_component(sol, params, x)


def cmd_wavefunction(v: dict) -> int:
    if v["samples"] < 1:
        raise UsageError("--samples", "must be at least 1")
    cfg = run_config(v, [single_state(v)])
    sym = cfg.symmetry.kind
    qn = cfg.states[0]
    x_to = v.get("x_to") if v.get("x_to") is not None else 30.0 / cfg.params.alpha
    if v["samples"] > 1 and not x_to > v["x_from"]:
        raise UsageError("--x-to", "must exceed --x-from")
    sol = select_root(solve_state(sym, qn.n, qn.kappa, cfg.params, cfg.symmetry.constant, cfg.opts), sym)
    if sol is None or not sol.physical:
        print(f"no physical root for n={qn.n}, kappa={qn.kappa}", file=sys.stderr)
        return EXIT_NOROOT
    x = np.linspace(v["x_from"], x_to, v["samples"])
    try:
        F, G = _components(sym, sol, cfg.params, x)
    except PoleOnContour:
        F = np.full(x.shape, complex(math.nan, math.nan))
        G = F.copy()
        poles = []
        for i, xi in enumerate(x):
            try:
                F[i], G[i] = _components(sym, sol, cfg.params, xi)
            except PoleOnContour:
                poles.append(xi)
        warn("pole on the contour at x = " + " ".join(_num(p) for p in poles))
    except (DivergentLimit, ExponentSingular) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NOROOT
    rows = [[xi, f.real, f.imag, g.real, g.imag] for xi, f, g in zip(x, F, G)]
    emit(render(["x", "F_re", "F_im", "G_re", "G_im"], rows, "csv"), cfg.out)
    return EXIT_OK


def cmd_validate(v: dict) -> int:
    grid = None
    if v.get("grid_points") is not None:
        if v["grid_points"] < 100:
            raise UsageError("--grid-points", "must be at least 100")
        grid = GridSpec(points=v["grid_points"])
    report = run_validation(quick=bool(v.get("quick")), grid=grid)
    emit(report.to_markdown() + "\n", v.get("out"))
    if report.passed:
        return EXIT_OK
    for c in report.failing:
        print(f"FAILED check {c.number}: {c.title}", file=sys.stderr)
    return EXIT_VALIDATION


COMMANDS = {"solve": cmd_solve, "table": cmd_table, "scan": cmd_scan,
            "wavefunction": cmd_wavefunction, "validate": cmd_validate}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](resolve(args))
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DivergentLimit, ExponentSingular) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NOROOT
    except PTDiracError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOROOT


if __name__ == "__main__":
    sys.exit(main())
