"""Nash equilibrium computation for bimatrix games.

Support enumeration over equal-size support pairs: for every candidate
pair the two indifference systems are solved (the attacker's mix makes
the defender indifferent across its support, and vice versa), candidates
with negative probabilities are discarded, and survivors are kept only if
neither player has a profitable pure deviation. Exhaustive mode collects
every equilibrium; heuristic mode prunes dominated strategies first and
stops at the first verified equilibrium.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable, Literal

import numpy as np

from .bimatrix import BimatrixGame, MixedStrategy, eliminate_dominated

PIVOT_TOL = 1e-12
NEGATIVE_PROB_TOL = 1e-9
VERIFY_TOL = 1e-6
DUPLICATE_TOL = 1e-7
PERTURBATION = 1e-9

SolverMode = Literal["exhaustive", "heuristic"]


class DegenerateGameError(RuntimeError):
    """Raised when no equilibrium is found even after perturbation."""


@dataclass(frozen=True)
class Equilibrium:
    defender_strategy: MixedStrategy
    attacker_strategy: MixedStrategy
    defender_value: float
    attacker_value: float
    support_sizes: tuple[int, int]


@dataclass(frozen=True)
class SolverReport:
    """Outcome of one solve: equilibria plus search effort accounting."""

    equilibria: tuple[Equilibrium, ...]
    supports_examined: int
    elapsed: float
    mode: SolverMode
    perturbed: bool = False


def verify_equilibrium(
    game: BimatrixGame, x: MixedStrategy, y: MixedStrategy, tolerance: float = VERIFY_TOL
) -> bool:
    """True iff neither player can gain more than `tolerance` by deviating."""
    return _verify(
        game.defender_payoffs,
        game.attacker_payoffs,
        x.probabilities,
        y.probabilities,
        tolerance,
    )


def _verify(
    rd: np.ndarray, ra: np.ndarray, x: np.ndarray, y: np.ndarray, tolerance: float
) -> bool:
    defender_row_values = rd @ y
    attacker_col_values = x @ ra
    eu_d = float(x @ defender_row_values)
    eu_a = float(attacker_col_values @ y)
    return (
        eu_d >= defender_row_values.max() - tolerance
        and eu_a >= attacker_col_values.max() - tolerance
    )


def solve_indifference(payoffs: np.ndarray) -> np.ndarray | None:
    """Distribution equalizing the expected payoff of every row of `payoffs`.

    The k x k system stacks the k-1 equal-payoff equations on top of the
    sum-to-one constraint. Returns None when the system is singular (the
    support pair cannot host an equilibrium).
    """
    payoffs = np.asarray(payoffs, dtype=float)
    k = payoffs.shape[0]
    a = np.empty((k, k))
    b = np.zeros(k)
    a[: k - 1] = payoffs[:-1] - payoffs[1:]
    a[k - 1] = 1.0
    b[k - 1] = 1.0
    return _gauss_solve(a, b)


def _gauss_solve(a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """Gaussian elimination with partial pivoting; None on singularity."""
    n = a.shape[0]
    aug = np.empty((n, n + 1))
    aug[:, :n] = a
    aug[:, n] = b
    for col in range(n):
        pivot = col + int(np.argmax(np.abs(aug[col:, col])))
        if abs(aug[pivot, col]) < PIVOT_TOL:
            return None
        if pivot != col:
            aug[[col, pivot]] = aug[[pivot, col]]
        factors = aug[col + 1 :, col] / aug[col, col]
        aug[col + 1 :, col:] -= factors[:, None] * aug[col, col:]
    x = np.empty(n)
    for i in range(n - 1, -1, -1):
        x[i] = (aug[i, n] - aug[i, i + 1 : n] @ x[i + 1 :]) / aug[i, i]
    return x


def solve_supports(game: BimatrixGame, mode: SolverMode = "exhaustive") -> SolverReport:
    """Find Nash equilibria by support enumeration.

    Exhaustive mode returns all equilibria (deduplicated); heuristic mode
    eliminates dominated strategies, probes the attacker-value-guided
    supports, then scans the remaining pairs smallest-first in
    lexicographic order and returns the first verified equilibrium. A game
    where the search comes up empty is retried once with a uniform payoff
    perturbation in [-1e-9, 1e-9]; if that also fails, the game is
    reported as degenerate.
    """
    if mode not in ("exhaustive", "heuristic"):
        raise ValueError(f"unknown solver mode {mode!r}")
    start = time.perf_counter()
    equilibria, examined = _solve_once(game, mode)
    perturbed = False
    if not equilibria:
        perturbed = True
        noise = np.random.default_rng(0x5EED).uniform(
            -PERTURBATION, PERTURBATION, size=(2,) + game.defender_payoffs.shape
        )
        jittered = BimatrixGame(
            game.defender_payoffs + noise[0],
            game.attacker_payoffs + noise[1],
            game.chosen_exploits,
            game.labels,
        )
        equilibria, more = _solve_once(jittered, mode)
        examined += more
        if not equilibria:
            raise DegenerateGameError(
                f"no equilibrium found in {mode} mode, even after perturbation"
            )
    elapsed = time.perf_counter() - start
    return SolverReport(tuple(equilibria), examined, elapsed, mode, perturbed)


def _solve_once(
    game: BimatrixGame, mode: SolverMode
) -> tuple[list[Equilibrium], int]:
    rd = game.defender_payoffs
    ra = game.attacker_payoffs

    if mode == "heuristic":
        reduced, kept_rows, kept_cols = eliminate_dominated(game)

        def accept(x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray] | None:
            full_x = np.zeros(game.n_rows)
            full_y = np.zeros(game.n_cols)
            full_x[list(kept_rows)] = x
            full_y[list(kept_cols)] = y
            if _verify(rd, ra, full_x, full_y, VERIFY_TOL):
                return full_x, full_y
            return None

        profiles, examined = _enumerate(
            reduced.defender_payoffs,
            reduced.attacker_payoffs,
            accept,
            stop_after_first=True,
        )
    else:

        def accept(x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray] | None:
            if _verify(rd, ra, x, y, VERIFY_TOL):
                return x, y
            return None

        profiles, examined = _enumerate(rd, ra, accept, stop_after_first=False)

    equilibria = []
    for x, y in profiles:
        eu_d = float(x @ rd @ y)
        eu_a = float(x @ ra @ y)
        equilibria.append(
            Equilibrium(
                MixedStrategy(x),
                MixedStrategy(y),
                eu_d,
                eu_a,
                (int(np.count_nonzero(x)), int(np.count_nonzero(y))),
            )
        )
    return equilibria, examined


def _guided_supports(
    rd: np.ndarray, ra: np.ndarray
) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Likely support pairs, strongest attacker columns first.

    In built security games the equilibrium support is the set of targets
    whose standalone attack value clears a threshold, so the aligned
    top-k supports (sorted by each column's best attacker payoff) almost
    always contain the answer. Only meaningful for square games; the
    exhaustive scan remains as a fallback either way.
    """
    n_rows, n_cols = rd.shape
    if n_rows != n_cols:
        return []
    order = np.argsort(-ra.max(axis=0), kind="stable")
    pairs = []
    for k in range(1, n_cols + 1):
        support = tuple(sorted(int(j) for j in order[:k]))
        pairs.append((support, support))
    return pairs


def _enumerate(
    rd: np.ndarray,
    ra: np.ndarray,
    accept: Callable[[np.ndarray, np.ndarray], tuple[np.ndarray, np.ndarray] | None],
    stop_after_first: bool,
) -> tuple[list[tuple[np.ndarray, np.ndarray]], int]:
    """Scan equal-size support pairs and collect accepted equilibria.

    The exhaustive scan goes smallest-support-first in lexicographic
    order. The early-stopping scan first probes the guided support pairs,
    then falls back to the same full ordering (skipping pairs it already
    probed), so it never examines more supports than the exhaustive scan.
    """
    n_rows, n_cols = rd.shape
    found: list[tuple[np.ndarray, np.ndarray]] = []
    examined = 0
    probed: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()

    if stop_after_first:
        for rows, cols in _guided_supports(rd, ra):
            probed.add((rows, cols))
            examined += 1
            profile = _try_support(rd, ra, rows, cols, accept)
            if profile is not None:
                return [profile], examined

    for k in range(1, min(n_rows, n_cols) + 1):
        for rows in itertools.combinations(range(n_rows), k):
            for cols in itertools.combinations(range(n_cols), k):
                if probed and (rows, cols) in probed:
                    continue
                examined += 1
                profile = _try_support(rd, ra, rows, cols, accept)
                if profile is None or _is_duplicate(profile, found):
                    continue
                found.append(profile)
                if stop_after_first:
                    return found, examined
    return found, examined


def _try_support(
    rd: np.ndarray,
    ra: np.ndarray,
    rows: tuple[int, ...],
    cols: tuple[int, ...],
    accept: Callable[[np.ndarray, np.ndarray], tuple[np.ndarray, np.ndarray] | None],
) -> tuple[np.ndarray, np.ndarray] | None:
    """Solve both indifference systems for one support pair and vet it."""
    rows_ix = list(rows)
    cols_ix = list(cols)
    y_sub = solve_indifference(rd[np.ix_(rows_ix, cols_ix)])
    if y_sub is None or y_sub.min() < -NEGATIVE_PROB_TOL:
        return None
    x_sub = solve_indifference(ra[np.ix_(rows_ix, cols_ix)].T)
    if x_sub is None or x_sub.min() < -NEGATIVE_PROB_TOL:
        return None
    x = np.zeros(rd.shape[0])
    y = np.zeros(rd.shape[1])
    x[rows_ix] = _clamped(x_sub)
    y[cols_ix] = _clamped(y_sub)
    return accept(x, y)


def _clamped(probabilities: np.ndarray) -> np.ndarray:
    """Zero out solver noise below zero and renormalize."""
    clamped = np.maximum(probabilities, 0.0)
    return clamped / clamped.sum()


def _is_duplicate(
    profile: tuple[np.ndarray, np.ndarray],
    found: list[tuple[np.ndarray, np.ndarray]],
) -> bool:
    x, y = profile
    for fx, fy in found:
        if max(np.abs(fx - x).max(), np.abs(fy - y).max()) < DUPLICATE_TOL:
            return True
    return False
