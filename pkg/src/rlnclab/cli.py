"""Command-line interface.

Subcommands: validate, check, simulate, sweep, oracle, region.  Exit codes
are part of the contract so shell scripts can branch on them:

* 0 -- success (for ``check``: every sink satisfies the criterion)
* 1 -- ``check`` ran fine but some sink fails the criterion
* 2 -- invalid input (file, rate, field descriptor, trial count, ...)
* 3 -- request refused because it exceeds a desk-scale enumeration guard

Output is a table or CSV (see --format where applicable); CSV bytes are
identical across reruns and across --jobs settings for fixed seeds.
"""
from __future__ import annotations

import argparse
import itertools
import sys
from pathlib import Path

from . import achieve, experiment
from .errors import GuardExceeded
from .gf import FieldError, parse_field
from .network import (
    NetworkError,
    NetworkFormatError,
    NetworkSpec,
    load_network,
    parse_rate,
    validate,
)


def _write(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _table(header: list[str], rows: list[list[object]]) -> str:
    cells = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def _load(path: str) -> NetworkSpec:
    spec = load_network(path)
    problems = validate(spec)
    if problems:
        raise NetworkError(problems)
    return spec


def cmd_validate(args: argparse.Namespace) -> int:
    spec = load_network(args.network)
    problems = validate(spec)
    if problems:
        for p in problems:
            print(f"invalid: {p}", file=sys.stderr)
        return 2
    print(f"ok: {spec.name} ({len(spec.nodes)} nodes, {len(spec.edges)} edges, "
          f"{len(spec.sources)} sources, {len(spec.sinks)} sinks)")
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    spec = _load(args.network)
    rate = parse_rate(args.rate)
    conditions, overall = achieve.check_rate(spec, rate)
    rows = [[c.sink, c.d1, c.d2, c.total, "yes" if c.holds else "no"] for c in conditions]
    header = ["sink", "d1", "d2", "total", "holds"]
    if args.format == "csv":
        out = experiment.emit_csv(header, rows)
    else:
        verdict = "ACHIEVABLE" if overall else "NOT ACHIEVABLE"
        out = _table(header, rows) + f"rate ({args.rate}): {verdict}\n"
    _write(out, args.output)
    return 0 if overall else 1


def cmd_simulate(args: argparse.Namespace) -> int:
    spec = _load(args.network)
    rate = parse_rate(args.rate)
    field = parse_field(args.field)
    report = experiment.monte_carlo(
        spec, rate, field, args.trials, args.seed, workers=args.jobs
    )
    if args.format == "table":
        rows = experiment.report_rows(report)
        out = _table(experiment.CSV_HEADER, rows)
    else:
        out = experiment.report_csv(report)
    _write(out, args.output)
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    spec = _load(args.network)
    rate = parse_rate(args.rate)
    fields = [parse_field(tok) for tok in args.fields.split(",") if tok.strip()]
    table = experiment.field_sweep(
        spec, rate, fields, args.trials, args.seed, workers=args.jobs
    )
    _write(experiment.sweep_csv(table), args.output)
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    spec = _load(args.network)
    rate = parse_rate(args.rate)
    field = parse_field(args.field)
    exact = experiment.brute_force(spec, rate, field)
    _write(experiment.oracle_csv(exact), args.output)
    return 0


def cmd_region(args: argparse.Namespace) -> int:
    spec = _load(args.network)
    report = achieve.enumerate_region(spec, args.bound)
    header = ["rate", "achievable", "frontier"]
    rows = [
        [
            ",".join(str(x) for x in rate),
            int(rate in report.achievable),
            int(rate in report.frontier),
        ]
        for rate in itertools.product(range(args.bound + 1), repeat=report.num_sources)
    ]
    if args.format == "table":
        out = _table(header, rows)
        out += f"achievable: {len(report.achievable)} of {len(rows)} rate vectors\n"
    else:
        out = experiment.emit_csv(header, rows)
    _write(out, args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rlnclab",
        description="Random linear network coding on multi-source multi-sink DAGs: "
        "achievability checks, seeded simulation, and exact oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("network", help="network JSON file")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check a network file against the model invariants")

    p = add("check", cmd_check, "evaluate the per-sink achievability criterion for a rate")
    p.add_argument("--rate", required=True, help="comma-separated rate vector, e.g. 1,1")
    p.add_argument("--format", choices=["table", "csv"], default="table")
    p.add_argument("--output", help="write to file instead of stdout")

    p = add("simulate", cmd_simulate, "seeded Monte Carlo of random coding success")
    p.add_argument("--rate", required=True)
    p.add_argument("--field", required=True, help='field descriptor: "p:<q>" or "2^<k>[:hex]"')
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", required=True, help="master seed; fixes the whole run")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (same output)")
    p.add_argument("--format", choices=["table", "csv"], default="csv")
    p.add_argument("--output")

    p = add("sweep", cmd_sweep, "Monte Carlo across a list of fields of increasing size")
    p.add_argument("--rate", required=True)
    p.add_argument("--fields", required=True, help='comma-separated, e.g. "p:2,2^4,2^16"')
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output")

    p = add("oracle", cmd_oracle, "exact success probability by full enumeration")
    p.add_argument("--rate", required=True)
    p.add_argument("--field", required=True)
    p.add_argument("--output")

    p = add("region", cmd_region, "enumerate the achievable rate region in a box")
    p.add_argument("--bound", type=int, required=True, help="per-coordinate bound B")
    p.add_argument("--format", choices=["table", "csv"], default="csv")
    p.add_argument("--output")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GuardExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except (NetworkFormatError, NetworkError, FieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
