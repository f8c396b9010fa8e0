"""Bimatrix payoff construction and evaluation.

Rows index defender strategies (defend node v_i), columns index attacker
strategies (attack node v_j). Targets whose best exploit has negative
reward are dropped from both strategy sets before the matrices are built;
a rational attacker never plays them, so the equilibria are unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import (
    AttackGraph,
    Exploit,
    GameConfig,
    attacker_reward,
    best_exploit,
    defender_reward,
)

PROB_TOL = 1e-9


@dataclass(frozen=True)
class MixedStrategy:
    """Probability distribution over one player's pure strategies."""

    probabilities: np.ndarray

    def __post_init__(self) -> None:
        probs = np.asarray(self.probabilities, dtype=float)
        object.__setattr__(self, "probabilities", probs)
        if probs.ndim != 1 or probs.size == 0:
            raise ValueError("strategy must be a nonempty vector")
        if probs.min() < -PROB_TOL:
            raise ValueError(f"negative probability {probs.min()}")
        if abs(probs.sum() - 1.0) > PROB_TOL:
            raise ValueError(f"probabilities sum to {probs.sum()}, not 1")

    def __len__(self) -> int:
        return self.probabilities.size


@dataclass(frozen=True)
class BimatrixGame:
    """Paired defender/attacker payoff matrices over the same index sets.

    `labels` holds the node id behind each strategy index and
    `chosen_exploits` the attacker's best exploit per column. Games built
    by `build_game` are square; dominance elimination may return
    rectangular intermediates.
    """

    defender_payoffs: np.ndarray
    attacker_payoffs: np.ndarray
    chosen_exploits: tuple[Exploit, ...]
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        rd = np.asarray(self.defender_payoffs, dtype=float)
        ra = np.asarray(self.attacker_payoffs, dtype=float)
        object.__setattr__(self, "defender_payoffs", rd)
        object.__setattr__(self, "attacker_payoffs", ra)
        if rd.ndim != 2 or rd.shape != ra.shape:
            raise ValueError(f"payoff shapes differ: {rd.shape} vs {ra.shape}")
        if min(rd.shape) < 1:
            raise ValueError("payoff matrices must be nonempty")
        if len(self.chosen_exploits) != rd.shape[1]:
            raise ValueError("need one chosen exploit per column")

    @property
    def n_rows(self) -> int:
        return self.defender_payoffs.shape[0]

    @property
    def n_cols(self) -> int:
        return self.defender_payoffs.shape[1]


@dataclass(frozen=True)
class DegenerateResult:
    """No target is worth attacking: the attacker abstains.

    The defender collects the full network value without deploying a
    honeypot.
    """

    defender_payoff: float


def build_game(
    graph: AttackGraph, config: GameConfig
) -> BimatrixGame | DegenerateResult:
    """Build the payoff bimatrix over the graph's viable targets.

    A target is viable when its best exploit has non-negative reward.
    Non-viable targets are removed from both players' strategy sets; if
    none survive the game collapses to a DegenerateResult.
    """
    viable: list[int] = []
    exploits: list[Exploit] = []
    for j, (target, edge) in enumerate(zip(graph.targets, graph.edges)):
        chosen, reward = best_exploit(edge, target.value)
        if reward >= 0.0:
            viable.append(j)
            exploits.append(chosen)

    if not viable:
        return DegenerateResult(defender_payoff=graph.total_value())

    m = len(viable)
    rd = np.empty((m, m))
    ra = np.empty((m, m))
    for row, i in enumerate(viable):
        for col, j in enumerate(viable):
            rd[row, col] = defender_reward(i, j, graph, config)
            ra[row, col] = attacker_reward(i, j, graph)
    labels = tuple(graph.targets[j].id for j in viable)
    return BimatrixGame(rd, ra, tuple(exploits), labels)


def expected_payoffs(
    game: BimatrixGame, x: MixedStrategy, y: MixedStrategy
) -> tuple[float, float]:
    """Expected (defender, attacker) payoffs under mixed strategies x, y."""
    xv, yv = x.probabilities, y.probabilities
    if xv.size != game.n_rows or yv.size != game.n_cols:
        raise ValueError(
            f"strategy lengths ({xv.size}, {yv.size}) do not match game shape "
            f"{game.defender_payoffs.shape}"
        )
    eu_d = float(xv @ game.defender_payoffs @ yv)
    eu_a = float(xv @ game.attacker_payoffs @ yv)
    return eu_d, eu_a


def eliminate_dominated(
    game: BimatrixGame,
) -> tuple[BimatrixGame, tuple[int, ...], tuple[int, ...]]:
    """Iteratively remove strictly dominated rows and columns.

    Rows are compared on the defender's matrix, columns on the attacker's.
    Only strict dominance is used, so no equilibrium of the original game
    is lost; the returned index tuples map reduced strategies back to the
    original positions (dropped indices get probability zero).
    """
    rd = game.defender_payoffs
    ra = game.attacker_payoffs
    rows = list(range(game.n_rows))
    cols = list(range(game.n_cols))

    changed = True
    while changed:
        changed = False
        if len(rows) > 1:
            sub = rd[np.ix_(rows, cols)]
            kept = _undominated(sub)
            if len(kept) < len(rows):
                rows = [rows[i] for i in kept]
                changed = True
        if len(cols) > 1:
            sub = ra[np.ix_(rows, cols)].T
            kept = _undominated(sub)
            if len(kept) < len(cols):
                cols = [cols[j] for j in kept]
                changed = True

    reduced = BimatrixGame(
        rd[np.ix_(rows, cols)],
        ra[np.ix_(rows, cols)],
        tuple(game.chosen_exploits[j] for j in cols),
        tuple(game.labels[j] for j in cols),
    )
    return reduced, tuple(rows), tuple(cols)


def _undominated(matrix: np.ndarray) -> list[int]:
    """Indices of rows not strictly dominated by any other row."""
    kept = []
    for i in range(matrix.shape[0]):
        dominated = False
        for k in range(matrix.shape[0]):
            if k != i and np.all(matrix[k] > matrix[i]):
                dominated = True
                break
        if not dominated:
            kept.append(i)
    return kept
