"""Command-line interface: solve, case-study, sweep, bench.

Exit codes: 0 on success, 1 when a game is degenerate beyond repair,
2 on configuration or argument errors. Terminal tables round
probabilities to two decimals; CSV output carries six decimals for
payoffs and four for probabilities.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from pathlib import Path

from .bimatrix import BimatrixGame, DegenerateResult, build_game
from .configfile import (
    ConfigError,
    FileConfig,
    builtin_config,
    experiment_config,
    fixed_graph,
    load_config,
    sweep_spec,
)
from .equilibrium import DegenerateGameError, solve_supports
from .experiments import benchmark_scaling, run_sweep
from .simulation import RunReport, run_case_study
from . import presets

PAY = "{:.6f}".format
PROB = "{:.4f}".format
TABLE_NUM = "{:.2f}".format


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DegenerateGameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="honeygame",
        description="Defender-attacker security game solver and experiment harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve one explicitly-configured game")
    solve.add_argument("config", help="YAML config with per-node exploit lists")
    _common_flags(solve, workers=False)
    solve.set_defaults(handler=cmd_solve)

    case = sub.add_parser("case-study", help="run the Monte Carlo case study")
    _config_source(case)
    _common_flags(case)
    case.add_argument("--iterations", type=int, metavar="N")
    case.set_defaults(handler=cmd_case_study)

    sweep = sub.add_parser("sweep", help="sweep one parameter across node layouts")
    _config_source(sweep, required=False)
    _common_flags(sweep)
    sweep.add_argument("--iterations", type=int, metavar="N")
    sweep.add_argument(
        "--parameter", choices=("probability", "honeypot-cost", "exploit-cost")
    )
    sweep.add_argument("--exploit", help="exploit name for probability sweeps")
    sweep.add_argument("--values", help="comma-separated sweep values")
    sweep.set_defaults(handler=cmd_sweep)

    bench = sub.add_parser("bench", help="time exhaustive vs heuristic solving")
    bench.add_argument("--nodes", default="2..8", help="node counts, e.g. 2..8 or 5")
    bench.add_argument("--trials", type=int, default=20)
    bench.add_argument("--seed", type=_seed, default=presets.DEFAULT_SEED)
    bench.add_argument("--out", metavar="DIR")
    bench.set_defaults(handler=cmd_bench)
    return parser


def _config_source(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("config", nargs="?", help="YAML configuration file")
    parser.add_argument(
        "--builtin",
        choices=sorted(presets.NODE_LAYOUTS),
        help="use the bundled case-study setup instead of a config file",
    )
    parser.set_defaults(config_required=required)


def _common_flags(parser: argparse.ArgumentParser, workers: bool = True) -> None:
    parser.add_argument("--mode", choices=("exhaustive", "heuristic"))
    parser.add_argument("--seed", type=_seed)
    parser.add_argument("--format", choices=("table", "csv"), default="table")
    parser.add_argument("--out", metavar="DIR")
    if workers:
        parser.add_argument(
            "--workers", type=int, default=os.cpu_count() or 1, metavar="N"
        )


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed {value} not a 64-bit unsigned integer")
    return value


def _load(args: argparse.Namespace) -> FileConfig:
    if args.config and args.builtin:
        raise ConfigError("give either a config file or --builtin, not both")
    if args.config:
        return load_config(args.config)
    if args.builtin:
        return builtin_config(args.builtin)
    if args.config_required:
        raise ConfigError("a config file or --builtin is required")
    return builtin_config("2nodes")


def cmd_solve(args: argparse.Namespace) -> int:
    config = load_config(args.config)
    graph, game_config = fixed_graph(config)
    game = build_game(graph, game_config)
    if isinstance(game, DegenerateResult):
        print(
            "no viable target: the attacker abstains "
            f"(defender payoff {TABLE_NUM(game.defender_payoff)})"
        )
        return 0
    report = solve_supports(game, args.mode or "exhaustive")
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(
            ["equilibrium", "node", "defender_prob", "attacker_prob", "eu_d", "eu_a"]
        )
        for index, eq in enumerate(report.equilibria):
            for node, xp, yp in zip(
                game.labels,
                eq.defender_strategy.probabilities,
                eq.attacker_strategy.probabilities,
            ):
                writer.writerow(
                    [index, node, PROB(xp), PROB(yp),
                     PAY(eq.defender_value), PAY(eq.attacker_value)]
                )
    else:
        _print_bimatrix(game)
        print()
        for index, eq in enumerate(report.equilibria):
            xs = ", ".join(TABLE_NUM(p) for p in eq.defender_strategy.probabilities)
            ys = ", ".join(TABLE_NUM(p) for p in eq.attacker_strategy.probabilities)
            print(f"equilibrium {index + 1}: X* = [{xs}]  Y* = [{ys}]")
            print(
                f"  EU_d* = {TABLE_NUM(eq.defender_value)}  "
                f"EU_a* = {TABLE_NUM(eq.attacker_value)}"
            )
        note = " (perturbed)" if report.perturbed else ""
        print(
            f"{len(report.equilibria)} equilibria, "
            f"{report.supports_examined} supports examined, "
            f"{report.mode} mode{note}"
        )
    return 0


def _print_bimatrix(game: BimatrixGame) -> None:
    cells = [
        [
            f"({TABLE_NUM(game.defender_payoffs[i, j])}, "
            f"{TABLE_NUM(game.attacker_payoffs[i, j])})"
            for j in range(game.n_cols)
        ]
        for i in range(game.n_rows)
    ]
    width = max(len(c) for row in cells for c in row)
    width = max(width, max(len(f"attack {l}") for l in game.labels))
    header = " " * 12 + "  ".join(f"attack {l}".rjust(width) for l in game.labels)
    print("payoff bimatrix (defender, attacker):")
    print(header)
    for label, row in zip(game.labels, cells):
        print(f"defend {label}".ljust(12) + "  ".join(c.rjust(width) for c in row))
    chosen = ", ".join(
        f"{l}: {e.name}" for l, e in zip(game.labels, game.chosen_exploits)
    )
    print(f"best exploits: {chosen}")


def cmd_case_study(args: argparse.Namespace) -> int:
    config = _load(args)
    run = experiment_config(
        config, iterations=args.iterations, seed=args.seed, solver_mode=args.mode
    )
    report = run_case_study(run, workers=max(1, args.workers))
    rows = _strategy_rows(report)
    payoff_row = [
        PAY(report.mean_eu_d),
        PAY(report.mean_eu_a),
        str(report.iterations_completed),
        str(report.degenerate_iterations),
    ]
    usage_rows = _usage_rows(report)

    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["node", "defender_prob", "attacker_prob"])
        writer.writerows(rows)
        print()
        writer.writerow(["eu_d", "eu_a", "iterations", "degenerate"])
        writer.writerow(payoff_row)
        print()
        writer.writerow(["node", "exploit", "count"])
        writer.writerows(usage_rows)
    else:
        print("mean equilibrium strategies:")
        print(f"  {'node':<6} {'defender':>9} {'attacker':>9}")
        for node, xp, yp in rows:
            print(f"  {node:<6} {TABLE_NUM(float(xp)):>9} {TABLE_NUM(float(yp)):>9}")
        print()
        print("mean expected payoffs:")
        print(
            f"  EU_d = {TABLE_NUM(report.mean_eu_d)}  "
            f"EU_a = {TABLE_NUM(report.mean_eu_a)}  "
            f"({report.iterations_completed} solved, "
            f"{report.degenerate_iterations} degenerate)"
        )
        print()
        print("best-exploit usage counts:")
        for node, exploit, count in usage_rows:
            print(f"  {node:<6} {exploit:<20} {count:>6}")

    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        _write_csv(out / "strategies.csv", ["node", "defender_prob", "attacker_prob"], rows)
        _write_csv(
            out / "payoffs.csv",
            ["eu_d", "eu_a", "iterations", "degenerate"],
            [payoff_row],
        )
        _write_csv(out / "usage.csv", ["node", "exploit", "count"], usage_rows)
    return 0


def _strategy_rows(report: RunReport) -> list[list[str]]:
    return [
        [node, PROB(xp), PROB(yp)]
        for node, xp, yp in zip(
            report.node_ids, report.mean_defender_strategy, report.mean_attacker_strategy
        )
    ]


def _usage_rows(report: RunReport) -> list[list[str]]:
    rows = []
    for node in report.node_ids:
        counts = report.exploit_usage.get(node, {})
        for exploit, count in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0])):
            rows.append([node, exploit, str(count)])
    return rows


def cmd_sweep(args: argparse.Namespace) -> int:
    config = _load(args)
    values = None
    if args.values:
        try:
            values = tuple(float(v) for v in args.values.split(","))
        except ValueError as exc:
            raise ConfigError(f"bad --values list {args.values!r}: {exc}") from exc
    layouts = None
    if args.config is None and args.builtin is None:
        layouts = tuple(presets.NODE_LAYOUTS[k] for k in sorted(presets.NODE_LAYOUTS))
    spec = sweep_spec(
        config,
        parameter=args.parameter,
        exploit=args.exploit,
        values=values,
        layouts=layouts,
        iterations=args.iterations,
        seed=args.seed,
        solver_mode=args.mode,
    )
    try:
        points = run_sweep(spec, workers=max(1, args.workers))
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    header = ["parameter", "value", "node_count", "eu_d", "eu_a"]
    rows = [
        [spec.parameter, PROB(p.parameter_value) if spec.parameter == "probability"
         else PAY(p.parameter_value), str(p.node_count), PAY(p.mean_eu_d), PAY(p.mean_eu_a)]
        for p in points
    ]
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        _write_csv(out / "sweep.csv", header, rows)
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        node_counts = _parse_range(args.nodes)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    if args.trials < 1:
        raise ConfigError(f"--trials must be >= 1, got {args.trials}")
    try:
        points = benchmark_scaling(node_counts, args.trials, args.seed)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    header = ["n", "exhaustive_ms", "heuristic_ms"]
    rows = [
        [str(p.node_count), PAY(p.exhaustive_ms), PAY(p.heuristic_ms)] for p in points
    ]
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    for p in points:
        ratio = p.exhaustive_ms / p.heuristic_ms if p.heuristic_ms > 0 else float("inf")
        print(f"speedup n={p.node_count}: {ratio:.2f}x", file=sys.stderr)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        _write_csv(out / "bench.csv", header, rows)
    return 0


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        low_text, _, high_text = text.partition("..")
        low, high = int(low_text), int(high_text)
        if low > high:
            raise ValueError(f"empty node range {text!r}")
        return list(range(low, high + 1))
    return [int(text)]


def _write_csv(path: Path, header: list[str], rows: list[list[str]]) -> None:
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


if __name__ == "__main__":
    sys.exit(main())
