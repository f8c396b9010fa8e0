"""Defender-attacker security game solver and experiment harness."""

from .graph import (
    AttackGraph,
    Edge,
    Exploit,
    GameConfig,
    TargetNode,
    attacker_reward,
    best_exploit,
    defender_reward,
    exploit_reward,
    is_viable,
)
from .bimatrix import (
    BimatrixGame,
    DegenerateResult,
    MixedStrategy,
    build_game,
    eliminate_dominated,
    expected_payoffs,
)
from .equilibrium import (
    DegenerateGameError,
    Equilibrium,
    SolverReport,
    solve_indifference,
    solve_supports,
    verify_equilibrium,
)
from .simulation import (
    ExperimentConfig,
    RunReport,
    assign_exploits,
    iteration_rng,
    run_case_study,
)
from .experiments import (
    BenchmarkPoint,
    SweepPoint,
    SweepSpec,
    benchmark_scaling,
    run_sweep,
    sweep_exploit_cost,
    sweep_honeypot_cost,
    sweep_probability,
)

__all__ = [
    "AttackGraph",
    "BenchmarkPoint",
    "BimatrixGame",
    "DegenerateGameError",
    "DegenerateResult",
    "Edge",
    "Equilibrium",
    "ExperimentConfig",
    "Exploit",
    "GameConfig",
    "MixedStrategy",
    "RunReport",
    "SolverReport",
    "SweepPoint",
    "SweepSpec",
    "TargetNode",
    "assign_exploits",
    "attacker_reward",
    "benchmark_scaling",
    "best_exploit",
    "build_game",
    "defender_reward",
    "eliminate_dominated",
    "expected_payoffs",
    "exploit_reward",
    "is_viable",
    "iteration_rng",
    "run_case_study",
    "run_sweep",
    "solve_indifference",
    "solve_supports",
    "sweep_exploit_cost",
    "sweep_honeypot_cost",
    "sweep_probability",
    "verify_equilibrium",
]

__version__ = "0.1.0"
