"""Monte Carlo harness: random exploit assignment, solve, aggregate.

Each iteration draws its own child RNG stream from (iteration index,
seed), so results are bit-identical no matter how many workers run the
iterations or in what order they finish.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .bimatrix import DegenerateResult, build_game
from .equilibrium import SolverMode, solve_supports
from .graph import AttackGraph, Edge, Exploit, GameConfig, TargetNode
from . import presets


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything needed to reproduce one Monte Carlo run."""

    exploit_catalog: tuple[Exploit, ...] = presets.DEFAULT_CATALOG
    node_values: tuple[tuple[str, float], ...] = presets.NODE_LAYOUTS["2nodes"]
    honeypot_cost: float = presets.DEFAULT_HONEYPOT_COST
    iterations: int = presets.DEFAULT_ITERATIONS
    seed: int = presets.DEFAULT_SEED
    min_exploits: int = presets.DEFAULT_MIN_EXPLOITS
    max_exploits: int = presets.DEFAULT_MAX_EXPLOITS
    solver_mode: SolverMode = "exhaustive"

    def __post_init__(self) -> None:
        object.__setattr__(self, "exploit_catalog", tuple(self.exploit_catalog))
        object.__setattr__(
            self, "node_values", tuple((str(i), float(v)) for i, v in self.node_values)
        )
        if not 1 <= self.min_exploits <= self.max_exploits <= len(self.exploit_catalog):
            raise ValueError(
                f"need 1 <= min_exploits <= max_exploits <= catalog size, got "
                f"{self.min_exploits}..{self.max_exploits} over "
                f"{len(self.exploit_catalog)} exploits"
            )
        if self.iterations < 1:
            raise ValueError(f"iterations must be >= 1, got {self.iterations}")

    @property
    def node_ids(self) -> tuple[str, ...]:
        return tuple(i for i, _ in self.node_values)


@dataclass(frozen=True)
class RunReport:
    """Per-run averages plus exploit usage bookkeeping."""

    mean_defender_strategy: np.ndarray
    mean_attacker_strategy: np.ndarray
    mean_eu_d: float
    mean_eu_a: float
    exploit_usage: dict[str, dict[str, int]]
    iterations_completed: int
    degenerate_iterations: int
    node_ids: tuple[str, ...] = field(default=())


def iteration_rng(seed: int, iteration: int) -> np.random.Generator:
    """Child stream for one iteration, independent of all the others."""
    return np.random.default_rng([iteration, seed])


def assign_exploits(
    catalog: tuple[Exploit, ...],
    node_values: tuple[tuple[str, float], ...],
    min_exploits: int,
    max_exploits: int,
    rng: np.random.Generator,
    entry: str = "entry",
) -> AttackGraph:
    """Randomly arm each target's edge with 1..k distinct catalog exploits.

    The per-node count is uniform on {min_exploits..max_exploits}; the
    exploits themselves are drawn uniformly without replacement.
    """
    targets = []
    edges = []
    for node_id, value in node_values:
        count = int(rng.integers(min_exploits, max_exploits + 1))
        picks = rng.choice(len(catalog), size=count, replace=False)
        targets.append(TargetNode(node_id, value))
        edges.append(Edge(entry, node_id, tuple(catalog[i] for i in picks)))
    return AttackGraph(entry, tuple(targets), tuple(edges))


@dataclass(frozen=True)
class _IterationResult:
    eu_d: float
    eu_a: float
    defender_strategy: np.ndarray
    attacker_strategy: np.ndarray
    chosen: tuple[tuple[str, str], ...]  # (node id, exploit name) per column
    degenerate: bool


def _run_iteration(config: ExperimentConfig, iteration: int) -> _IterationResult:
    rng = iteration_rng(config.seed, iteration)
    graph = assign_exploits(
        config.exploit_catalog,
        config.node_values,
        config.min_exploits,
        config.max_exploits,
        rng,
    )
    game = build_game(graph, GameConfig(config.honeypot_cost))
    n = len(config.node_values)
    if isinstance(game, DegenerateResult):
        return _IterationResult(0.0, 0.0, np.zeros(n), np.zeros(n), (), True)

    report = solve_supports(game, config.solver_mode)
    index_of = {node_id: i for i, node_id in enumerate(config.node_ids)}
    x_sum = np.zeros(n)
    y_sum = np.zeros(n)
    eu_d = eu_a = 0.0
    for eq in report.equilibria:
        for label, xp, yp in zip(
            game.labels,
            eq.defender_strategy.probabilities,
            eq.attacker_strategy.probabilities,
        ):
            x_sum[index_of[label]] += xp
            y_sum[index_of[label]] += yp
        eu_d += eq.defender_value
        eu_a += eq.attacker_value
    count = len(report.equilibria)
    chosen = tuple(
        (label, exploit.name) for label, exploit in zip(game.labels, game.chosen_exploits)
    )
    return _IterationResult(
        eu_d / count, eu_a / count, x_sum / count, y_sum / count, chosen, False
    )


def run_case_study(config: ExperimentConfig, workers: int = 1) -> RunReport:
    """Run the full Monte Carlo study and average over solved iterations.

    Iterations with no viable target are counted as degenerate and left
    out of the averages. In exhaustive mode an iteration contributes the
    mean over all its equilibria; in heuristic mode the single
    early-stopped equilibrium. Aggregation always reduces in iteration
    order so worker count cannot change the result.
    """
    indices = range(config.iterations)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(_run_iteration, [config] * config.iterations, indices, chunksize=64)
            )
    else:
        results = [_run_iteration(config, i) for i in indices]

    n = len(config.node_values)
    x_total = np.zeros(n)
    y_total = np.zeros(n)
    eu_d_total = eu_a_total = 0.0
    usage: dict[str, dict[str, int]] = {node_id: {} for node_id in config.node_ids}
    completed = degenerate = 0
    for result in results:
        if result.degenerate:
            degenerate += 1
            continue
        completed += 1
        x_total += result.defender_strategy
        y_total += result.attacker_strategy
        eu_d_total += result.eu_d
        eu_a_total += result.eu_a
        for node_id, exploit_name in result.chosen:
            node_usage = usage[node_id]
            node_usage[exploit_name] = node_usage.get(exploit_name, 0) + 1

    if completed == 0:
        raise ValueError("every iteration was degenerate; nothing to average")
    return RunReport(
        mean_defender_strategy=x_total / completed,
        mean_attacker_strategy=y_total / completed,
        mean_eu_d=eu_d_total / completed,
        mean_eu_a=eu_a_total / completed,
        exploit_usage=usage,
        iterations_completed=completed,
        degenerate_iterations=degenerate,
        node_ids=config.node_ids,
    )
