import pytest

from honeygame import AttackGraph, Edge, Exploit, GameConfig, TargetNode, build_game

PHISHING = Exploit("Phishing", 0.7, 3.0)
MALWARE = Exploit("Malware", 0.4, 5.0)
RANSOMWARE = Exploit("Ransomware", 0.3, 8.0)
SOCIAL_ENG = Exploit("Social Engineering", 0.8, 4.0)
SQL_INJECTION = Exploit("SQL Injection", 0.6, 7.0)
CRYPTOGRAPHY = Exploit("Cryptography", 0.2, 10.0)


@pytest.fixture
def two_node_graph():
    """A(30) reachable via Phishing, B(20) via Social Engineering."""
    return AttackGraph(
        "entry",
        (TargetNode("A", 30.0), TargetNode("B", 20.0)),
        (
            Edge("entry", "A", (PHISHING,)),
            Edge("entry", "B", (SOCIAL_ENG,)),
        ),
    )


@pytest.fixture
def two_node_game(two_node_graph):
    return build_game(two_node_graph, GameConfig(7.0))


def random_bimatrix(rng, n_rows, n_cols=None, low=-10.0, high=50.0):
    """Random game wrapped in the BimatrixGame container."""
    from honeygame import BimatrixGame

    n_cols = n_rows if n_cols is None else n_cols
    rd = rng.uniform(low, high, (n_rows, n_cols))
    ra = rng.uniform(low, high, (n_rows, n_cols))
    filler = Exploit("probe", 0.5, 1.0)
    labels = tuple(f"s{j}" for j in range(n_cols))
    return BimatrixGame(rd, ra, (filler,) * n_cols, labels)


def random_star_graph(rng, n, value_low=5.0, value_high=30.0):
    """Random star graph drawn like the simulation does."""
    from honeygame.presets import DEFAULT_CATALOG
    from honeygame.simulation import assign_exploits

    values = rng.uniform(value_low, value_high, n)
    layout = tuple((f"N{i + 1}", float(v)) for i, v in enumerate(values))
    return assign_exploits(DEFAULT_CATALOG, layout, 1, 4, rng)
