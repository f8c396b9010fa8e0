import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from honeygame import (
    AttackGraph,
    BimatrixGame,
    DegenerateResult,
    Edge,
    Exploit,
    GameConfig,
    MixedStrategy,
    TargetNode,
    best_exploit,
    build_game,
    eliminate_dominated,
    expected_payoffs,
)
from conftest import CRYPTOGRAPHY, PHISHING, random_bimatrix


def test_build_game_case_study_matrices(two_node_game):
    assert two_node_game.labels == ("A", "B")
    np.testing.assert_allclose(
        two_node_game.defender_payoffs, [[43.0, 27.0], [22.0, 43.0]]
    )
    np.testing.assert_allclose(
        two_node_game.attacker_payoffs, [[-3.0, 12.0], [18.0, -4.0]]
    )
    assert [e.name for e in two_node_game.chosen_exploits] == [
        "Phishing",
        "Social Engineering",
    ]


def test_build_game_single_node():
    graph = AttackGraph(
        "entry", (TargetNode("A", 30.0),), (Edge("entry", "A", (PHISHING,)),)
    )
    game = build_game(graph, GameConfig(7.0))
    np.testing.assert_allclose(game.defender_payoffs, [[23.0]])
    np.testing.assert_allclose(game.attacker_payoffs, [[-3.0]])


def test_build_game_degenerate_when_nothing_viable():
    graph = AttackGraph(
        "entry", (TargetNode("A", 5.0),), (Edge("entry", "A", (CRYPTOGRAPHY,)),)
    )
    result = build_game(graph, GameConfig(7.0))
    assert isinstance(result, DegenerateResult)
    assert result.defender_payoff == pytest.approx(5.0)


def test_build_game_prunes_nonviable_column():
    graph = AttackGraph(
        "entry",
        (TargetNode("A", 30.0), TargetNode("B", 5.0)),
        (Edge("entry", "A", (PHISHING,)), Edge("entry", "B", (CRYPTOGRAPHY,))),
    )
    game = build_game(graph, GameConfig(7.0))
    assert game.labels == ("A",)
    # network value still counts the pruned node
    np.testing.assert_allclose(game.defender_payoffs, [[28.0]])


def test_chosen_exploit_matches_best_exploit(two_node_graph, two_node_game):
    for j, edge in enumerate(two_node_graph.edges):
        expected, _ = best_exploit(edge, two_node_graph.targets[j].value)
        assert two_node_game.chosen_exploits[j] is expected


def test_expected_payoffs_uniform(two_node_game):
    half = MixedStrategy(np.array([0.5, 0.5]))
    eu_d, eu_a = expected_payoffs(two_node_game, half, half)
    assert eu_d == pytest.approx(33.75)
    assert eu_a == pytest.approx(5.75)


def test_expected_payoffs_pure(two_node_game):
    e1 = MixedStrategy(np.array([1.0, 0.0]))
    eu_d, eu_a = expected_payoffs(two_node_game, e1, e1)
    assert (eu_d, eu_a) == (pytest.approx(43.0), pytest.approx(-3.0))


def test_expected_payoffs_at_indifference_point(two_node_game):
    x = MixedStrategy(np.array([22 / 37, 15 / 37]))
    y = MixedStrategy(np.array([16 / 37, 21 / 37]))
    eu_d, eu_a = expected_payoffs(two_node_game, x, y)
    assert eu_d == pytest.approx(1255 / 37, abs=1e-12)
    assert eu_a == pytest.approx(204 / 37, abs=1e-12)


def test_expected_payoffs_dimension_mismatch(two_node_game):
    bad = MixedStrategy(np.array([1.0]))
    good = MixedStrategy(np.array([0.5, 0.5]))
    with pytest.raises(ValueError, match="lengths"):
        expected_payoffs(two_node_game, bad, good)


def test_mixed_strategy_validation():
    with pytest.raises(ValueError, match="negative"):
        MixedStrategy(np.array([1.1, -0.1]))
    with pytest.raises(ValueError, match="sum"):
        MixedStrategy(np.array([0.4, 0.4]))
    with pytest.raises(ValueError, match="nonempty"):
        MixedStrategy(np.array([]))


@given(st.data())
@settings(max_examples=150)
def test_expected_payoffs_bilinear(data):
    rng = np.random.default_rng(data.draw(st.integers(0, 2**32 - 1)))
    n = data.draw(st.integers(1, 5))
    game = random_bimatrix(rng, n)
    x1, x2, y = (rng.dirichlet(np.ones(n)) for _ in range(3))
    alpha = data.draw(st.floats(0.0, 1.0))
    blend = MixedStrategy(alpha * x1 + (1 - alpha) * x2)
    ys = MixedStrategy(y)
    eu_blend = expected_payoffs(game, blend, ys)
    eu_1 = expected_payoffs(game, MixedStrategy(x1), ys)
    eu_2 = expected_payoffs(game, MixedStrategy(x2), ys)
    for mixed, a, b in zip(eu_blend, eu_1, eu_2):
        assert mixed == pytest.approx(alpha * a + (1 - alpha) * b, abs=1e-9)


def test_eliminate_dominated_removes_strictly_worse_row():
    filler = Exploit("probe", 0.5, 1.0)
    game = BimatrixGame(
        np.array([[5.0, 5.0], [1.0, 1.0]]),
        np.array([[2.0, 1.0], [2.0, 1.0]]),
        (filler, filler),
        ("a", "b"),
    )
    reduced, rows, cols = eliminate_dominated(game)
    assert rows == (0,)
    assert cols == (0,)  # column 1 strictly dominates after the row drops
    assert reduced.defender_payoffs.shape == (1, 1)


def test_eliminate_dominated_keeps_case_study_game(two_node_game):
    reduced, rows, cols = eliminate_dominated(two_node_game)
    assert rows == (0, 1)
    assert cols == (0, 1)
    np.testing.assert_array_equal(
        reduced.defender_payoffs, two_node_game.defender_payoffs
    )


@given(st.integers(0, 2**32 - 1), st.integers(2, 5))
@settings(max_examples=100)
def test_eliminate_dominated_never_removes_equal_rows(seed, n):
    rng = np.random.default_rng(seed)
    game = random_bimatrix(rng, n)
    reduced, rows, cols = eliminate_dominated(game)
    assert len(rows) >= 1 and len(cols) >= 1
    np.testing.assert_array_equal(
        reduced.defender_payoffs,
        game.defender_payoffs[np.ix_(list(rows), list(cols))],
    )


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=100)
def test_built_game_column_sums_constant(seed):
    rng = np.random.default_rng(seed)
    from conftest import random_star_graph

    graph = random_star_graph(rng, int(rng.integers(1, 6)))
    honeypot = float(rng.uniform(0.0, 10.0))
    game = build_game(graph, GameConfig(honeypot))
    if isinstance(game, DegenerateResult):
        assert game.defender_payoff == pytest.approx(graph.total_value())
        return
    sums = game.defender_payoffs + game.attacker_payoffs
    for j in range(game.n_cols):
        expected = (
            graph.total_value() - honeypot - game.chosen_exploits[j].cost
        )
        np.testing.assert_allclose(sums[:, j], expected, atol=1e-9)
