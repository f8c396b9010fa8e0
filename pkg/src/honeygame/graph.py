"""Attack-graph domain types and the defender/attacker reward functions.

The network is a single-entry star: one entry node, one edge per target
node, each edge carrying the exploits an attacker could use on it. All
types are frozen dataclasses; everything here is a pure function of its
inputs, so instances can be shared freely across workers.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Exploit:
    """An attack primitive: succeeds with some probability at some cost."""

    name: str
    success_probability: float
    cost: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.success_probability <= 1.0:
            raise ValueError(
                f"exploit {self.name!r}: success_probability "
                f"{self.success_probability} not in [0, 1]"
            )
        if self.cost < 0.0:
            raise ValueError(f"exploit {self.name!r}: cost {self.cost} is negative")


@dataclass(frozen=True)
class TargetNode:
    """A network asset worth `value` if successfully attacked."""

    id: str
    value: float

    def __post_init__(self) -> None:
        if self.value < 0.0:
            raise ValueError(f"node {self.id!r}: value {self.value} is negative")


@dataclass(frozen=True)
class Edge:
    """Path from the entry node to one target, with its usable exploits."""

    from_node: str
    to_node: str
    exploits: tuple[Exploit, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "exploits", tuple(self.exploits))
        if not self.exploits:
            raise ValueError(f"edge {self.from_node}->{self.to_node} has no exploits")


@dataclass(frozen=True)
class AttackGraph:
    """Single-entry star graph: one edge from `entry` to each target.

    `targets` and `edges` are index-aligned; node order is preserved
    because strategy vectors are reported in declared node order.
    """

    entry: str
    targets: tuple[TargetNode, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "targets", tuple(self.targets))
        object.__setattr__(self, "edges", tuple(self.edges))
        if not self.targets:
            raise ValueError("graph needs at least one target node")
        ids = [t.id for t in self.targets]
        if len(set(ids)) != len(ids):
            raise ValueError(f"duplicate target ids: {ids}")
        if len(self.edges) != len(self.targets):
            raise ValueError("star topology requires exactly one edge per target")
        for target, edge in zip(self.targets, self.edges):
            if edge.to_node != target.id:
                raise ValueError(
                    f"edge to {edge.to_node!r} not aligned with target {target.id!r}"
                )
            if edge.from_node != self.entry:
                raise ValueError(
                    f"edge {edge.from_node}->{edge.to_node} does not start at "
                    f"entry {self.entry!r}"
                )

    @property
    def size(self) -> int:
        return len(self.targets)

    def total_value(self) -> float:
        """Combined value of every target reachable from the entry node."""
        return float(sum(t.value for t in self.targets))


@dataclass(frozen=True)
class GameConfig:
    """Defender-side parameters; currently just the honeypot cost."""

    honeypot_cost: float = 7.0

    def __post_init__(self) -> None:
        if self.honeypot_cost < 0.0:
            raise ValueError(f"honeypot_cost {self.honeypot_cost} is negative")


def exploit_reward(exploit: Exploit, node_value: float) -> float:
    """Attacker's expected net gain from using `exploit` on a node.

    May be negative when the cost exceeds the expected damage.
    """
    return node_value * exploit.success_probability - exploit.cost


def best_exploit(edge: Edge, node_value: float) -> tuple[Exploit, float]:
    """Pick the reward-maximizing exploit on an edge.

    Ties go to the exploit listed first, which keeps runs reproducible.
    """
    best = edge.exploits[0]
    best_reward = exploit_reward(best, node_value)
    for candidate in edge.exploits[1:]:
        reward = exploit_reward(candidate, node_value)
        if reward > best_reward:
            best, best_reward = candidate, reward
    return best, best_reward


def is_viable(exploit: Exploit, node_value: float) -> bool:
    """A rational attacker only uses exploits with non-negative reward."""
    return exploit_reward(exploit, node_value) >= 0.0


def defender_reward(
    defends: int, attacked: int, graph: AttackGraph, config: GameConfig
) -> float:
    """Defender payoff for guarding node `defends` while node `attacked` is hit.

    Guarding the attacked node nullifies the attack and the defender keeps
    the full network value minus the honeypot cost; otherwise the attacked
    node's expected damage is lost as well.
    """
    total = graph.total_value()
    if defends == attacked:
        return total - config.honeypot_cost
    target = graph.targets[attacked]
    chosen, _ = best_exploit(graph.edges[attacked], target.value)
    return total - target.value * chosen.success_probability - config.honeypot_cost


def attacker_reward(defends: int, attacked: int, graph: AttackGraph) -> float:
    """Attacker payoff for hitting node `attacked` against defense `defends`.

    Walking into the honeypot forfeits the exploit cost with no gain.
    """
    target = graph.targets[attacked]
    chosen, reward = best_exploit(graph.edges[attacked], target.value)
    if defends == attacked:
        return -chosen.cost
    return reward
