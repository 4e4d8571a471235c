"""Command-line entry point.

    gibbsmix run CONFIG [--format csv|json] [--out PATH] [--seed N] [--bits]
    gibbsmix search gap [--seed N] [--trials N]
    gibbsmix search violation [--seed N] [--trials N] [--pure]
    gibbsmix fidelity --bloch X Y Z --bloch X Y Z
    gibbsmix ergotropy --bloch X Y Z [--epsilon E]

Exit status is 0 on success, 2 for invalid configs or arguments and 3 when
a computation fails.
"""

import argparse
import csv
import io
import json
import sys

import numpy as np

from gibbsmix.errors import GibbsMixError
from gibbsmix.states import distinguishability, hilbert_schmidt_distance
from gibbsmix.scenarios import (
    SWEEP_KINDS,
    ConfigError,
    ScenarioResult,
    _run_ergotropy,
    load_config,
    parse_hamiltonian,
    parse_state,
    run_scenario,
    search_instrument_gap,
    search_monotonicity_violation,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3


def _plain(value):
    """Convert numpy scalars and arrays to JSON-friendly Python objects."""
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_plain(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return None if not np.isfinite(value) else value
    return value


def format_float(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    return format(float(value), ".17g")


def dumps_json(payload) -> str:
    return json.dumps(_plain(payload), indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def dumps_csv(result: ScenarioResult) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if result.is_sweep:
        writer.writerow(result.columns)
        for row in result.rows:
            writer.writerow([format_float(v) for v in row])
    else:
        scalars = {k: v for k, v in _plain(result.report).items() if not isinstance(v, list)}
        writer.writerow(list(scalars))
        writer.writerow([format_float(v) for v in scalars.values()])
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _cmd_run(args) -> int:
    config = load_config(args.config)
    if args.seed is not None:
        config["seed"] = args.seed
    if args.bits:
        config["entropy_units"] = "bits"
    result = run_scenario(config)
    fmt = args.format or config.get("format") or ("csv" if result.kind in SWEEP_KINDS else "json")
    if fmt not in ("csv", "json"):
        raise ConfigError("format", f"must be csv or json, got {fmt!r}")
    out = args.out or config.get("output")
    _emit(dumps_csv(result) if fmt == "csv" else dumps_json(result.to_json()), out)
    return EXIT_OK


def _cmd_search(args) -> int:
    seed = 0 if args.seed is None else args.seed
    if args.trials < 1:
        raise ConfigError("--trials", "must be >= 1")
    if args.target == "gap":
        report = search_instrument_gap(seed, args.trials, args.epsilon)
    else:
        report = search_monotonicity_violation(seed, args.trials, args.pure, args.epsilon)
    _emit(dumps_json(report), args.out)
    return EXIT_OK


def _parse_json_matrix(text: str, name: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(name, f"not valid JSON: {exc}") from exc


def _states_from_args(args, h=None):
    states = [parse_state({"bloch": list(b)}, f"--bloch[{i}]") for i, b in enumerate(args.bloch or [])]
    for i, text in enumerate(args.rho or []):
        states.append(parse_state({"matrix": _parse_json_matrix(text, f"--rho[{i}]")}, f"--rho[{i}]", h))
    return states


def _cmd_fidelity(args) -> int:
    states = _states_from_args(args)
    if len(states) != 2:
        raise ConfigError("--bloch/--rho", f"need exactly two states, got {len(states)}")
    if states[0].shape != states[1].shape:
        raise ConfigError("--bloch/--rho", "states have different dimensions")
    report = {"d": distinguishability(*states), "hs_distance": hilbert_schmidt_distance(*states)}
    _emit(dumps_json({"kind": "fidelity", "parameters": {}, "result": report}), args.out)
    return EXIT_OK


def _cmd_ergotropy(args) -> int:
    if args.hamiltonian is not None:
        h = parse_hamiltonian({"matrix": _parse_json_matrix(args.hamiltonian, "--hamiltonian")}, "--hamiltonian")
    else:
        h = parse_hamiltonian({"epsilon": args.epsilon})
    states = _states_from_args(args, h)
    if len(states) != 1:
        raise ConfigError("--bloch/--rho", f"need exactly one state, got {len(states)}")
    # reuse the scenario runner so the report layout is shared
    matrix = [[[z.real, z.imag] for z in row] for row in states[0]]
    h_matrix = [[[z.real, z.imag] for z in row] for row in h]
    result = _run_ergotropy({"state": {"matrix": matrix}, "hamiltonian": {"matrix": h_matrix}})
    fmt = args.format or "json"
    _emit(dumps_csv(result) if fmt == "csv" else dumps_json(result.to_json()), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gibbsmix", description="Ergotropy and mixing-work calculator.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--format", choices=("csv", "json"), default=None)
    common.add_argument("--out", default=None, help="output file (default: stdout)")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", parents=[common], help="evaluate a scenario config file")
    run.add_argument("config")
    run.add_argument("--bits", action="store_true", help="report entropies in bits instead of nats")
    run.set_defaults(func=_cmd_run)

    search = sub.add_parser("search", parents=[common], help="randomized counterexample search")
    search.add_argument("target", choices=("gap", "violation"))
    search.add_argument("--trials", type=int, default=10_000)
    search.add_argument("--epsilon", type=float, default=1.0)
    search.add_argument("--pure", action="store_true", help="violation search over pure states only")
    search.set_defaults(func=_cmd_search)

    state_args = argparse.ArgumentParser(add_help=False)
    state_args.add_argument("--bloch", nargs=3, type=float, action="append", metavar=("X", "Y", "Z"))
    state_args.add_argument("--rho", action="append", help="density matrix as JSON [[re, im], ...] rows")

    fid = sub.add_parser("fidelity", parents=[common, state_args], help="distinguishability of two states")
    fid.set_defaults(func=_cmd_fidelity)

    erg = sub.add_parser("ergotropy", parents=[common, state_args], help="ergotropy of one state")
    erg.add_argument("--epsilon", type=float, default=1.0, help="two-level splitting if no --hamiltonian")
    erg.add_argument("--hamiltonian", default=None, help="Hamiltonian as JSON [[re, im], ...] rows")
    erg.set_defaults(func=_cmd_ergotropy)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ConfigError, OSError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (GibbsMixError, ArithmeticError, ValueError) as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
