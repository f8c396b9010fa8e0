import pytest
from hypothesis import given, strategies as st

from honeygame import (
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
from conftest import CRYPTOGRAPHY, MALWARE, PHISHING, SOCIAL_ENG


def test_exploit_reward_values():
    assert exploit_reward(PHISHING, 30.0) == pytest.approx(18.0)
    assert exploit_reward(CRYPTOGRAPHY, 5.0) == pytest.approx(-9.0)


def test_exploit_reward_zero_value_is_negative_cost():
    for exploit in (PHISHING, MALWARE, CRYPTOGRAPHY):
        assert exploit_reward(exploit, 0.0) == pytest.approx(-exploit.cost)


def test_best_exploit_picks_max_reward():
    edge = Edge("entry", "A", (PHISHING, MALWARE))
    chosen, reward = best_exploit(edge, 30.0)
    assert chosen is PHISHING
    assert reward == pytest.approx(18.0)


def test_best_exploit_singleton():
    edge = Edge("entry", "A", (MALWARE,))
    chosen, reward = best_exploit(edge, 30.0)
    assert chosen is MALWARE
    assert reward == pytest.approx(7.0)


def test_best_exploit_tie_goes_to_first_listed():
    # at value 10 both yield reward 4.0
    edge = Edge("entry", "A", (PHISHING, SOCIAL_ENG))
    chosen, reward = best_exploit(edge, 10.0)
    assert chosen is PHISHING
    assert reward == pytest.approx(4.0)


def test_is_viable():
    assert is_viable(PHISHING, 30.0)
    assert not is_viable(CRYPTOGRAPHY, 5.0)
    assert is_viable(Exploit("freebie", 0.0, 0.0), 0.0)


def test_defender_reward_branches(two_node_graph):
    config = GameConfig(7.0)
    assert defender_reward(0, 0, two_node_graph, config) == pytest.approx(43.0)
    assert defender_reward(1, 1, two_node_graph, config) == pytest.approx(43.0)
    # B attacked (value 20, Social Engineering): 50 - 16 - 7
    assert defender_reward(0, 1, two_node_graph, config) == pytest.approx(27.0)
    # A attacked (value 30, Phishing): 50 - 21 - 7
    assert defender_reward(1, 0, two_node_graph, config) == pytest.approx(22.0)


def test_attacker_reward_branches(two_node_graph):
    assert attacker_reward(1, 1, two_node_graph) == pytest.approx(-4.0)
    assert attacker_reward(0, 0, two_node_graph) == pytest.approx(-3.0)
    assert attacker_reward(1, 0, two_node_graph) == pytest.approx(18.0)
    assert attacker_reward(0, 1, two_node_graph) == pytest.approx(12.0)


exploit_values = st.floats(0.0, 1.0)
costs = st.floats(0.0, 20.0)
node_values = st.floats(0.0, 100.0)


@st.composite
def exploits(draw):
    return Exploit(
        draw(st.sampled_from("abcdef")),
        draw(exploit_values),
        draw(costs),
    )


@given(st.lists(exploits(), min_size=1, max_size=6), node_values)
def test_best_exploit_dominates_every_listed_exploit(exploit_list, value):
    edge = Edge("u", "v", tuple(exploit_list))
    _, reward = best_exploit(edge, value)
    for exploit in exploit_list:
        assert reward >= exploit_reward(exploit, value)


@given(exploits(), node_values)
def test_viability_matches_reward_sign(exploit, value):
    assert is_viable(exploit, value) == (exploit_reward(exploit, value) >= 0.0)


@st.composite
def star_graphs(draw):
    n = draw(st.integers(1, 5))
    targets = []
    edges = []
    for i in range(n):
        node_id = f"n{i}"
        targets.append(TargetNode(node_id, draw(node_values)))
        edge_exploits = draw(st.lists(exploits(), min_size=1, max_size=4))
        edges.append(Edge("u", node_id, tuple(edge_exploits)))
    return AttackGraph("u", tuple(targets), tuple(edges))


@given(star_graphs(), st.floats(0.0, 15.0))
def test_payoff_structure_invariants(graph, honeypot_cost):
    config = GameConfig(honeypot_cost)
    n = graph.size
    total = graph.total_value()
    for j in range(n):
        chosen, _ = best_exploit(graph.edges[j], graph.targets[j].value)
        column_sum = total - honeypot_cost - chosen.cost
        off_diagonal = {
            defender_reward(i, j, graph, config) for i in range(n) if i != j
        }
        assert len(off_diagonal) <= 1  # off-diagonal column constancy
        for i in range(n):
            rd = defender_reward(i, j, graph, config)
            ra = attacker_reward(i, j, graph)
            if i == j:
                assert rd == pytest.approx(total - honeypot_cost)
            assert rd + ra == pytest.approx(column_sum, abs=1e-9)


def test_total_value(two_node_graph):
    assert two_node_graph.total_value() == pytest.approx(50.0)


def test_validation_rejects_bad_inputs():
    with pytest.raises(ValueError, match="probability"):
        Exploit("broken", 1.5, 3.0)
    with pytest.raises(ValueError, match="cost"):
        Exploit("broken", 0.5, -1.0)
    with pytest.raises(ValueError, match="value"):
        TargetNode("A", -2.0)
    with pytest.raises(ValueError, match="no exploits"):
        Edge("u", "v", ())
    with pytest.raises(ValueError, match="duplicate"):
        AttackGraph(
            "u",
            (TargetNode("A", 1.0), TargetNode("A", 2.0)),
            (Edge("u", "A", (PHISHING,)), Edge("u", "A", (PHISHING,))),
        )
    with pytest.raises(ValueError, match="one edge per target"):
        AttackGraph("u", (TargetNode("A", 1.0),), ())
    with pytest.raises(ValueError, match="not aligned"):
        AttackGraph(
            "u",
            (TargetNode("A", 1.0), TargetNode("B", 1.0)),
            (Edge("u", "B", (PHISHING,)), Edge("u", "A", (PHISHING,))),
        )
    with pytest.raises(ValueError, match="entry"):
        AttackGraph("u", (TargetNode("A", 1.0),), (Edge("w", "A", (PHISHING,)),))
    with pytest.raises(ValueError, match="honeypot_cost"):
        GameConfig(-1.0)
