#!/usr/bin/env python3
"""Run the three case-study layouts in both solver modes and print the tables."""

import argparse
from pathlib import Path

from honeygame import ExperimentConfig, run_case_study
from honeygame.presets import NODE_LAYOUTS


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--iterations", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--workers", type=int, default=2)
    parser.add_argument("--out", default="results")
    args = parser.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    payoff_rows = ["mode,node_count,eu_d,eu_a\n"]
    usage_rows = ["mode,node,exploit,count\n"]
    for mode in ("heuristic", "exhaustive"):
        print(f"== {mode} ==")
        for name in sorted(NODE_LAYOUTS):
            config = ExperimentConfig(
                node_values=NODE_LAYOUTS[name],
                iterations=args.iterations,
                seed=args.seed,
                solver_mode=mode,
            )
            report = run_case_study(config, workers=args.workers)
            xs = ", ".join(f"{p:.2f}" for p in report.mean_defender_strategy)
            ys = ", ".join(f"{p:.2f}" for p in report.mean_attacker_strategy)
            print(
                f"{name}: X*=[{xs}] Y*=[{ys}] "
                f"EU_d={report.mean_eu_d:.2f} EU_a={report.mean_eu_a:.2f} "
                f"({report.degenerate_iterations} degenerate)"
            )
            payoff_rows.append(
                f"{mode},{len(config.node_values)},{report.mean_eu_d:.6f},"
                f"{report.mean_eu_a:.6f}\n"
            )
            if name == "4nodes":
                for node in report.node_ids:
                    for exploit, count in sorted(report.exploit_usage[node].items()):
                        usage_rows.append(f"{mode},{node},{exploit},{count}\n")
    (out / "case_study_payoffs.csv").write_text("".join(payoff_rows))
    (out / "case_study_usage_4nodes.csv").write_text("".join(usage_rows))
    print(f"wrote {out / 'case_study_payoffs.csv'} and {out / 'case_study_usage_4nodes.csv'}")


if __name__ == "__main__":
    main()
