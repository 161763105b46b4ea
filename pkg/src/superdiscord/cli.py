"""Command line front end.

Subcommands::

    compute       discord report for one state at one strength (JSON)
    sweep-x       rows x,z_hat,f_min,sqd,case over a strength range
    sweep-gamma   rows gamma,z_hat,sqd,sqd_undamped,delta over damping rates
    validate      check a state document and print its Bloch data
    oracle-check  brute-force conditional entropy against 1 + min F
    example       print a builtin state as xstate-v1 JSON

Exit codes: 0 success, 1 oracle-check failure, 2 invalid input, 3 I/O error.
Errors are reported on stderr as ``{"error": code, "message": text}``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

from . import __version__
from .channel import damping_sweep
from .errors import DomainError, SQDError
from .oracle import brute_force_min_conditional_entropy
from .sqd import SqdReport, super_quantum_discord
from .weakmeas import FContext
from .xstate import (
    bell_diagonal,
    bloch_from_density,
    example2,
    example3,
    maximally_mixed,
    spectrum,
    state_from_json,
    state_to_json,
    werner,
)

REPORT_FORMAT = "sqd-v1"
EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_IO = 0, 1, 2, 3
EXAMPLE_NAMES = ("ex2", "ex3", "werner:a", "bell-diag:c1,c2,c3", "mixed")
SWEEP_X_HEADER = ("x", "z_hat", "f_min", "sqd", "case")
SWEEP_GAMMA_HEADER = ("gamma", "z_hat", "sqd", "sqd_undamped", "delta")


class UsageError(SQDError, ValueError):
    code = "usage_error"


class _IOFailure(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    state: str | None = None
    example: str | None = None
    x: float | None = None
    x_range: tuple | None = None
    gamma_range: tuple | None = None
    fmt: str = "json"
    out: str | None = None
    resolution: int = 200


# -- parsing helpers ------------------------------------------------------

def parse_range(text: str, name: str) -> list[float]:
    """``A:B:S`` -> ``[A, A+S, ...]``, inclusive of ``B``.

    The last point is the grid point nearest ``B``, so rounding in ``(B-A)/S``
    cannot drop or add a row; an exact half step rounds down.
    """
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"{name} must look like START:STOP:STEP, got {text!r}")
    try:
        a, b, s = (float(p) for p in parts)
    except ValueError as exc:
        raise UsageError(f"{name}: {exc}") from exc
    if not all(map(math.isfinite, (a, b, s))):
        raise UsageError(f"{name} must be finite")
    if s <= 0:
        raise UsageError(f"{name} step must be positive, got {s!r}")
    if b < a:
        raise UsageError(f"{name} is empty ({a!r} > {b!r})")
    n = math.ceil((b - a) / s - 0.5)
    return [a + k * s for k in range(n + 1)]


def builtin_state(name: str):
    """Resolve a builtin example name to an ``XDensityMatrix``."""
    if name == "ex2":
        return example2()
    if name == "ex3":
        return example3()
    if name == "mixed":
        return maximally_mixed()
    try:
        if name.startswith("werner:"):
            return werner(float(name.split(":", 1)[1]))
        if name.startswith("bell-diag:"):
            vals = [float(v) for v in name.split(":", 1)[1].split(",")]
            if len(vals) == 3:
                return bell_diagonal(*vals)
    except ValueError as exc:
        if isinstance(exc, SQDError):
            raise
        raise UsageError(f"bad parameters in example {name!r}: {exc}") from exc
    raise UsageError(f"unknown example {name!r}; valid names: {', '.join(EXAMPLE_NAMES)}")


def load_state(cfg: RunConfig):
    if cfg.example is not None:
        return builtin_state(cfg.example)
    if cfg.state is None:
        raise UsageError("one of --state or --example is required")
    try:
        with open(cfg.state, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _IOFailure(f"cannot read {cfg.state}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{cfg.state} is not valid JSON: {exc}") from exc
    return state_from_json(doc)


def _check_x(x: float) -> float:
    if not (math.isfinite(x) and x >= 0):
        raise DomainError(f"measurement strength must be finite and >= 0, got {x!r}")
    return x


def _single_x(cfg: RunConfig) -> float:
    if cfg.x is None:
        raise UsageError(f"{cfg.command} needs --x")
    return _check_x(cfg.x)


def _x_values(cfg: RunConfig) -> list[float]:
    if cfg.x_range is not None:
        return [_check_x(v) for v in parse_range(cfg.x_range, "--x-range")]
    return [_single_x(cfg)]


# -- serialisation --------------------------------------------------------

def _cnum(z: complex):
    return [z.real, z.imag]


def report_to_json(rep: SqdReport) -> dict:
    p = rep.bloch
    return {
        "report": REPORT_FORMAT,
        "x": rep.x,
        "sqd": rep.sqd,
        "I": rep.mutual.I,
        "J": rep.classical_corr,
        "S_A": rep.mutual.S_A,
        "S_B": rep.mutual.S_B,
        "S_AB": rep.mutual.S_AB,
        "cond_entropy_min": rep.cond_entropy_min,
        "z_hat": rep.z_hat,
        "f_min": rep.f_min,
        "case": rep.opt.case.case.value,
        "case_predicates": rep.opt.case.predicates,
        "method": rep.opt.method.value,
        "spectrum": list(map(float, rep.spectrum.as_array())),
        "bloch": {"r": p.r, "s": p.s, "c3": p.c3, "c1": _cnum(p.c1), "c2": _cnum(p.c2), "b": p.b},
        "iterations": [{"z": z, "F": f, "dF": d} for z, f, d in rep.opt.iterations],
    }


def _csv_num(v: float) -> str:
    return format(float(v), ".10g")


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([c if isinstance(c, str) else _csv_num(c) for c in row])
    return buf.getvalue()


def _json_text(obj) -> str:
    # json writes floats with repr(), the shortest string that round-trips
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def _emit(cfg: RunConfig, text: str):
    if cfg.out is None:
        sys.stdout.write(text)
        return
    try:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise _IOFailure(f"cannot write {cfg.out}: {exc}") from exc


# -- commands -------------------------------------------------------------

def _report(dm, x: float) -> SqdReport:
    return super_quantum_discord(FContext(bloch_from_density(dm), x))


def cmd_compute(cfg: RunConfig) -> int:
    rep = _report(load_state(cfg), _single_x(cfg))
    _emit(cfg, _json_text(report_to_json(rep)))
    return EXIT_OK


def cmd_sweep_x(cfg: RunConfig) -> int:
    dm = load_state(cfg)
    reps = [_report(dm, x) for x in _x_values(cfg)]
    if cfg.fmt == "csv":
        rows = [(r.x, r.z_hat, r.f_min, r.sqd, r.opt.case.case.value) for r in reps]
        _emit(cfg, _csv_text(SWEEP_X_HEADER, rows))
    else:
        _emit(cfg, _json_text({"report": REPORT_FORMAT, "rows": [report_to_json(r) for r in reps]}))
    return EXIT_OK


def sweep_gamma_rows(dm, x: float, gammas) -> list[tuple]:
    p = bloch_from_density(dm)
    base = super_quantum_discord(FContext(p, x)).sqd
    return [(g, r.z_hat, r.sqd, base, r.sqd - base) for g, r in damping_sweep(p, x, gammas)]


def cmd_sweep_gamma(cfg: RunConfig) -> int:
    if cfg.gamma_range is None:
        raise UsageError("sweep-gamma needs --gamma-range")
    gammas = parse_range(cfg.gamma_range, "--gamma-range")
    rows = sweep_gamma_rows(load_state(cfg), _single_x(cfg), gammas)
    if cfg.fmt == "csv":
        _emit(cfg, _csv_text(SWEEP_GAMMA_HEADER, rows))
    else:
        body = [dict(zip(SWEEP_GAMMA_HEADER, row)) for row in rows]
        _emit(cfg, _json_text({"report": REPORT_FORMAT, "x": cfg.x, "rows": body}))
    return EXIT_OK


def cmd_validate(cfg: RunConfig) -> int:
    dm = load_state(cfg)
    p = bloch_from_density(dm)
    out = {
        "valid": True,
        "state": state_to_json(dm),
        "bloch": {"r": p.r, "s": p.s, "c3": p.c3, "c1": _cnum(p.c1), "c2": _cnum(p.c2), "b": p.b},
        "spectrum": list(map(float, spectrum(p).as_array())),
    }
    _emit(cfg, _json_text(out))
    return EXIT_OK


def oracle_bound(resolution: int) -> float:
    return 5.0 / resolution


def cmd_oracle_check(cfg: RunConfig) -> int:
    dm = load_state(cfg)
    x = _single_x(cfg)
    rep = _report(dm, x)
    brute, v = brute_force_min_conditional_entropy(dm, x, cfg.resolution)
    analytic = 1.0 + rep.f_min
    gap = abs(brute - analytic)
    ok = gap <= oracle_bound(cfg.resolution)
    out = {
        "x": x,
        "resolution": cfg.resolution,
        "brute_force": brute,
        "analytic": analytic,
        "gap": gap,
        "bound": oracle_bound(cfg.resolution),
        "best_direction": list(v.direction),
        "pass": ok,
    }
    _emit(cfg, _json_text(out))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_example(cfg: RunConfig) -> int:
    if cfg.example is None:
        raise UsageError(f"example needs a name; valid names: {', '.join(EXAMPLE_NAMES)}")
    _emit(cfg, _json_text(state_to_json(builtin_state(cfg.example))))
    return EXIT_OK


COMMANDS = {
    "compute": cmd_compute,
    "sweep-x": cmd_sweep_x,
    "sweep-gamma": cmd_sweep_gamma,
    "validate": cmd_validate,
    "oracle-check": cmd_oracle_check,
    "example": cmd_example,
}


# -- entry point ----------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="superdiscord", description="Super quantum discord of two-qubit X states.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        if name == "example":
            p.add_argument("name", nargs="?", help=f"one of {', '.join(EXAMPLE_NAMES)}")
            p.add_argument("--example", dest="example_flag", help="same as the positional name")
            p.add_argument("--out")
            continue
        src = p.add_mutually_exclusive_group()
        src.add_argument("--state", help="path to an xstate-v1 JSON document")
        src.add_argument("--example", help=f"builtin state: {', '.join(EXAMPLE_NAMES)}")
        xs = p.add_mutually_exclusive_group()
        xs.add_argument("--x", type=float, help="measurement strength")
        if name == "sweep-x":
            xs.add_argument("--x-range", help="START:STOP:STEP, inclusive")
        if name == "sweep-gamma":
            p.add_argument("--gamma-range", help="START:STOP:STEP, inclusive")
        if name in ("sweep-x", "sweep-gamma"):
            p.add_argument("--format", choices=("json", "csv"), default="csv")
        if name == "oracle-check":
            p.add_argument("--resolution", type=int, default=200)
        p.add_argument("--out")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    if ns.command == "example":
        example = ns.name if ns.name is not None else ns.example_flag
    else:
        example = ns.example
    return RunConfig(
        command=ns.command,
        state=getattr(ns, "state", None),
        example=example,
        x=getattr(ns, "x", None),
        x_range=getattr(ns, "x_range", None),
        gamma_range=getattr(ns, "gamma_range", None),
        fmt=getattr(ns, "format", "json"),
        out=ns.out,
        resolution=getattr(ns, "resolution", 200),
    )


def _fail(code: str, message: str, status: int) -> int:
    sys.stderr.write(json.dumps({"error": code, "message": message}) + "\n")
    return status


def main(argv=None) -> int:
    try:
        cfg = config_from_args(build_parser().parse_args(argv))
        return COMMANDS[cfg.command](cfg)
    except _IOFailure as exc:
        return _fail("io_error", str(exc), EXIT_IO)
    except SQDError as exc:
        return _fail(exc.code, str(exc), EXIT_INPUT)
    except ValueError as exc:
        return _fail("invalid_input", str(exc), EXIT_INPUT)


if __name__ == "__main__":
    sys.exit(main())
