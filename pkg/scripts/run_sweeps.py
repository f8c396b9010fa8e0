#!/usr/bin/env python3
"""Reproduce the parameter-sweep data series as plot-ready CSV files."""

import argparse
from pathlib import Path

from honeygame import ExperimentConfig, SweepSpec, run_sweep
from honeygame.presets import DEFAULT_CATALOG, NODE_LAYOUTS


def write_points(path, parameter, points):
    lines = ["parameter,value,node_count,eu_d,eu_a\n"]
    for p in points:
        lines.append(
            f"{parameter},{p.parameter_value:.6f},{p.node_count},"
            f"{p.mean_eu_d:.6f},{p.mean_eu_a:.6f}\n"
        )
    path.write_text("".join(lines))
    print(f"wrote {path} ({len(points)} points)")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--iterations", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--workers", type=int, default=2)
    parser.add_argument("--out", default="results")
    args = parser.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    layouts = tuple(NODE_LAYOUTS[k] for k in sorted(NODE_LAYOUTS))
    base = ExperimentConfig(
        iterations=args.iterations, seed=args.seed, solver_mode="heuristic"
    )
    probability_steps = tuple(i / 10 for i in range(11))
    cost_steps = tuple(float(i) for i in range(11))

    for exploit in DEFAULT_CATALOG:
        spec = SweepSpec(
            base=base,
            parameter="probability",
            exploit=exploit.name,
            values=probability_steps,
            node_layouts=layouts,
        )
        slug = exploit.name.lower().replace(" ", "_")
        write_points(
            out / f"sweep_probability_{slug}.csv",
            "probability",
            run_sweep(spec, workers=args.workers),
        )

    for parameter in ("honeypot-cost", "exploit-cost"):
        spec = SweepSpec(
            base=base, parameter=parameter, values=cost_steps, node_layouts=layouts
        )
        slug = parameter.replace("-", "_")
        write_points(
            out / f"sweep_{slug}.csv", parameter, run_sweep(spec, workers=args.workers)
        )


if __name__ == "__main__":
    main()
