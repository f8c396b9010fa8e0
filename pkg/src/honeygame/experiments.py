"""Parameter sweeps and the heuristic-vs-exhaustive runtime benchmark."""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .bimatrix import DegenerateResult, build_game
from .equilibrium import solve_supports
from .graph import Exploit, GameConfig
from .simulation import ExperimentConfig, assign_exploits, run_case_study
from . import presets

SWEEP_PARAMETERS = ("probability", "honeypot-cost", "exploit-cost")
BENCH_VALUE_RANGE = (5.0, 30.0)


@dataclass(frozen=True)
class SweepSpec:
    """One swept parameter over one or more node layouts.

    `exploit` is only meaningful for probability sweeps. When
    `node_layouts` is None the base config's own nodes are used.
    """

    base: ExperimentConfig
    parameter: str
    values: tuple[float, ...]
    exploit: str | None = None
    node_layouts: tuple[tuple[tuple[str, float], ...], ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if self.parameter not in SWEEP_PARAMETERS:
            raise ValueError(
                f"unknown sweep parameter {self.parameter!r}; "
                f"expected one of {SWEEP_PARAMETERS}"
            )
        if not self.values:
            raise ValueError("sweep needs at least one value")
        low = 0.0
        high = 1.0 if self.parameter == "probability" else float("inf")
        for v in self.values:
            if not low <= v <= high:
                raise ValueError(f"sweep value {v} outside [{low}, {high}]")

    def layouts(self) -> tuple[tuple[tuple[str, float], ...], ...]:
        if self.node_layouts is None:
            return (self.base.node_values,)
        return tuple(sorted(self.node_layouts, key=len))


@dataclass(frozen=True)
class SweepPoint:
    parameter_value: float
    mean_eu_d: float
    mean_eu_a: float
    node_count: int


@dataclass(frozen=True)
class BenchmarkPoint:
    node_count: int
    exhaustive_ms: float
    heuristic_ms: float


def sweep_probability(spec: SweepSpec, workers: int = 1) -> list[SweepPoint]:
    """Vary one exploit's success probability, all else fixed."""
    names = [e.name for e in spec.base.exploit_catalog]
    if spec.exploit not in names:
        raise ValueError(f"swept exploit {spec.exploit!r} not in catalog {names}")
    points = []
    for layout in spec.layouts():
        for value in sorted(spec.values):
            catalog = tuple(
                replace(e, success_probability=value) if e.name == spec.exploit else e
                for e in spec.base.exploit_catalog
            )
            config = replace(spec.base, exploit_catalog=catalog, node_values=layout)
            points.append(_point(config, value, workers))
    return points


def sweep_honeypot_cost(spec: SweepSpec, workers: int = 1) -> list[SweepPoint]:
    """Vary the honeypot deployment cost."""
    points = []
    for layout in spec.layouts():
        for value in sorted(spec.values):
            config = replace(spec.base, honeypot_cost=value, node_values=layout)
            points.append(_point(config, value, workers))
    return points


def sweep_exploit_cost(spec: SweepSpec, workers: int = 1) -> list[SweepPoint]:
    """Set every catalog exploit's cost to the swept value."""
    points = []
    for layout in spec.layouts():
        for value in sorted(spec.values):
            catalog = tuple(
                replace(e, cost=value) for e in spec.base.exploit_catalog
            )
            config = replace(spec.base, exploit_catalog=catalog, node_values=layout)
            points.append(_point(config, value, workers))
    return points


def run_sweep(spec: SweepSpec, workers: int = 1) -> list[SweepPoint]:
    """Dispatch to the sweep matching `spec.parameter`."""
    if spec.parameter == "probability":
        return sweep_probability(spec, workers)
    if spec.parameter == "honeypot-cost":
        return sweep_honeypot_cost(spec, workers)
    return sweep_exploit_cost(spec, workers)


def _point(config: ExperimentConfig, value: float, workers: int) -> SweepPoint:
    report = run_case_study(config, workers=workers)
    return SweepPoint(
        parameter_value=value,
        mean_eu_d=report.mean_eu_d,
        mean_eu_a=report.mean_eu_a,
        node_count=len(config.node_values),
    )


def benchmark_scaling(
    node_counts: list[int],
    trials: int,
    seed: int,
    catalog: tuple[Exploit, ...] = presets.DEFAULT_CATALOG,
    honeypot_cost: float = presets.DEFAULT_HONEYPOT_COST,
) -> list[BenchmarkPoint]:
    """Time both solver modes on identical random games, one size at a time.

    Node values are drawn uniformly from [5, 30] and exploits assigned
    exactly like the case study. Timing covers the solve only and runs
    strictly serially; both modes see the same games.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    points = []
    for n in node_counts:
        if n < 2:
            raise ValueError(f"benchmark needs node counts >= 2, got {n}")
        exhaustive_total = heuristic_total = 0.0
        for trial in range(trials):
            rng = np.random.default_rng([trial, n, seed])
            game = None
            while game is None:
                values = rng.uniform(*BENCH_VALUE_RANGE, size=n)
                layout = tuple((f"N{i + 1}", float(v)) for i, v in enumerate(values))
                graph = assign_exploits(catalog, layout, 1, 4, rng)
                built = build_game(graph, GameConfig(honeypot_cost))
                if not isinstance(built, DegenerateResult):
                    game = built
            exhaustive_total += solve_supports(game, "exhaustive").elapsed
            heuristic_total += solve_supports(game, "heuristic").elapsed
        points.append(
            BenchmarkPoint(
                node_count=n,
                exhaustive_ms=1000.0 * exhaustive_total / trials,
                heuristic_ms=1000.0 * heuristic_total / trials,
            )
        )
    return points
