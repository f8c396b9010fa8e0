"""YAML experiment configuration: parsing, validation, assembly.

The file has up to five sections. `exploits` and `nodes` describe the
scenario; `game`, `simulation` and `sweep` are optional and fall back to
the case-study defaults. Validation errors name the offending entry;
syntax errors keep the parser's line/column anchor.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import yaml

from .experiments import SWEEP_PARAMETERS, SweepSpec
from .graph import AttackGraph, Edge, Exploit, GameConfig, TargetNode
from .simulation import ExperimentConfig
from . import presets


class ConfigError(Exception):
    """Configuration file is unreadable, malformed, or out of range."""


@dataclass(frozen=True)
class FileConfig:
    """Validated contents of one configuration file."""

    catalog: tuple[Exploit, ...]
    nodes: tuple[tuple[str, float], ...]
    node_exploits: dict[str, tuple[str, ...]]
    honeypot_cost: float
    iterations: int
    seed: int
    min_exploits: int
    max_exploits: int
    solver_mode: str
    sweep_parameter: str | None = None
    sweep_exploit: str | None = None
    sweep_values: tuple[float, ...] | None = None


def load_config(path: str | Path) -> FileConfig:
    """Parse and validate a configuration file."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    try:
        raw = yaml.safe_load(text)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark
        where = f"{path}, line {mark.line + 1}, column {mark.column + 1}" if mark else path
        raise ConfigError(f"{where}: {exc.problem or 'invalid YAML'}") from exc
    except yaml.YAMLError as exc:
        raise ConfigError(f"{path}: invalid YAML: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError(f"{path}: top level must be a mapping of sections")
    return _validate(raw, str(path))


def builtin_config(layout: str) -> FileConfig:
    """The bundled case-study setup for one of the standard layouts."""
    if layout not in presets.NODE_LAYOUTS:
        raise ConfigError(
            f"unknown builtin {layout!r}; expected one of "
            f"{sorted(presets.NODE_LAYOUTS)}"
        )
    return FileConfig(
        catalog=presets.DEFAULT_CATALOG,
        nodes=presets.NODE_LAYOUTS[layout],
        node_exploits={},
        honeypot_cost=presets.DEFAULT_HONEYPOT_COST,
        iterations=presets.DEFAULT_ITERATIONS,
        seed=presets.DEFAULT_SEED,
        min_exploits=presets.DEFAULT_MIN_EXPLOITS,
        max_exploits=presets.DEFAULT_MAX_EXPLOITS,
        solver_mode="exhaustive",
    )


def _validate(raw: dict, source: str) -> FileConfig:
    def fail(message: str) -> ConfigError:
        return ConfigError(f"{source}: {message}")

    exploits_raw = raw.get("exploits")
    if not isinstance(exploits_raw, list) or not exploits_raw:
        raise fail("section 'exploits' must be a nonempty list")
    catalog: list[Exploit] = []
    seen = set()
    for entry in exploits_raw:
        if not isinstance(entry, dict) or "name" not in entry:
            raise fail(f"exploit entry {entry!r} needs a 'name'")
        name = str(entry["name"])
        if name in seen:
            raise fail(f"duplicate exploit {name!r}")
        seen.add(name)
        probability = _number(entry.get("probability"), f"exploit {name!r}: probability", fail)
        cost = _number(entry.get("cost"), f"exploit {name!r}: cost", fail)
        if not 0.0 <= probability <= 1.0:
            raise fail(f"exploit {name!r}: probability {probability} not in [0, 1]")
        if cost < 0.0:
            raise fail(f"exploit {name!r}: cost {cost} is negative")
        catalog.append(Exploit(name, probability, cost))
    names = {e.name for e in catalog}

    nodes_raw = raw.get("nodes")
    if not isinstance(nodes_raw, list) or not nodes_raw:
        raise fail("section 'nodes' must be a nonempty list")
    nodes: list[tuple[str, float]] = []
    node_exploits: dict[str, tuple[str, ...]] = {}
    for entry in nodes_raw:
        if not isinstance(entry, dict) or "id" not in entry:
            raise fail(f"node entry {entry!r} needs an 'id'")
        node_id = str(entry["id"])
        if any(node_id == existing for existing, _ in nodes):
            raise fail(f"duplicate node {node_id!r}")
        value = _number(entry.get("value"), f"node {node_id!r}: value", fail)
        if value < 0.0:
            raise fail(f"node {node_id!r}: value {value} is negative")
        nodes.append((node_id, value))
        if "exploits" in entry:
            listed = entry["exploits"]
            if not isinstance(listed, list) or not listed:
                raise fail(f"node {node_id!r}: 'exploits' must be a nonempty list")
            unknown = [str(e) for e in listed if str(e) not in names]
            if unknown:
                raise fail(f"node {node_id!r}: unknown exploits {unknown}")
            node_exploits[node_id] = tuple(str(e) for e in listed)

    game_raw = raw.get("game") or {}
    if not isinstance(game_raw, dict):
        raise fail("section 'game' must be a mapping")
    honeypot_cost = _number(
        game_raw.get("honeypot_cost", presets.DEFAULT_HONEYPOT_COST),
        "game: honeypot_cost",
        fail,
    )
    if honeypot_cost < 0.0:
        raise fail(f"game: honeypot_cost {honeypot_cost} is negative")

    sim_raw = raw.get("simulation") or {}
    if not isinstance(sim_raw, dict):
        raise fail("section 'simulation' must be a mapping")
    iterations = int(_number(sim_raw.get("iterations", presets.DEFAULT_ITERATIONS),
                             "simulation: iterations", fail))
    seed = int(_number(sim_raw.get("seed", presets.DEFAULT_SEED), "simulation: seed", fail))
    default_max = min(presets.DEFAULT_MAX_EXPLOITS, len(catalog))
    min_exploits = int(_number(sim_raw.get("min_exploits", presets.DEFAULT_MIN_EXPLOITS),
                               "simulation: min_exploits", fail))
    max_exploits = int(_number(sim_raw.get("max_exploits", default_max),
                               "simulation: max_exploits", fail))
    solver_mode = str(sim_raw.get("solver_mode", "exhaustive"))
    if iterations < 1:
        raise fail(f"simulation: iterations {iterations} must be >= 1")
    if not 0 <= seed < 2**64:
        raise fail(f"simulation: seed {seed} not a 64-bit unsigned integer")
    if not 1 <= min_exploits <= max_exploits <= len(catalog):
        raise fail(
            f"simulation: need 1 <= min_exploits <= max_exploits <= "
            f"{len(catalog)}, got {min_exploits}..{max_exploits}"
        )
    if solver_mode not in ("exhaustive", "heuristic"):
        raise fail(f"simulation: unknown solver_mode {solver_mode!r}")

    sweep_parameter = sweep_exploit = None
    sweep_values = None
    sweep_raw = raw.get("sweep")
    if sweep_raw is not None:
        if not isinstance(sweep_raw, dict):
            raise fail("section 'sweep' must be a mapping")
        sweep_parameter = str(sweep_raw.get("parameter", ""))
        if sweep_parameter not in SWEEP_PARAMETERS:
            raise fail(
                f"sweep: unknown parameter {sweep_parameter!r}; expected one "
                f"of {SWEEP_PARAMETERS}"
            )
        if "values" in sweep_raw:
            values_raw = sweep_raw["values"]
            if not isinstance(values_raw, list) or not values_raw:
                raise fail("sweep: 'values' must be a nonempty list")
            sweep_values = tuple(
                _number(v, "sweep: value", fail) for v in values_raw
            )
            high = 1.0 if sweep_parameter == "probability" else float("inf")
            for v in sweep_values:
                if not 0.0 <= v <= high:
                    raise fail(f"sweep: value {v} outside [0, {high}]")
        if sweep_parameter == "probability":
            sweep_exploit = sweep_raw.get("exploit")
            if sweep_exploit is None or str(sweep_exploit) not in names:
                raise fail(
                    f"sweep: probability sweep needs 'exploit' set to one of "
                    f"{sorted(names)}, got {sweep_exploit!r}"
                )
            sweep_exploit = str(sweep_exploit)

    return FileConfig(
        catalog=tuple(catalog),
        nodes=tuple(nodes),
        node_exploits=node_exploits,
        honeypot_cost=honeypot_cost,
        iterations=iterations,
        seed=seed,
        min_exploits=min_exploits,
        max_exploits=max_exploits,
        solver_mode=solver_mode,
        sweep_parameter=sweep_parameter,
        sweep_exploit=sweep_exploit,
        sweep_values=sweep_values,
    )


def _number(value, label: str, fail) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise fail(f"{label} must be a number, got {value!r}")
    return float(value)


def fixed_graph(config: FileConfig, entry: str = "entry") -> tuple[AttackGraph, GameConfig]:
    """Build the explicitly-described graph for a one-shot solve.

    Every node must list its exploits; random assignment is the
    simulation's job, not the solver's.
    """
    by_name = {e.name: e for e in config.catalog}
    targets = []
    edges = []
    for node_id, value in config.nodes:
        listed = config.node_exploits.get(node_id)
        if not listed:
            raise ConfigError(
                f"node {node_id!r} needs an explicit 'exploits' list for solving"
            )
        targets.append(TargetNode(node_id, value))
        edges.append(Edge(entry, node_id, tuple(by_name[n] for n in listed)))
    graph = AttackGraph(entry, tuple(targets), tuple(edges))
    return graph, GameConfig(config.honeypot_cost)


def experiment_config(
    config: FileConfig,
    iterations: int | None = None,
    seed: int | None = None,
    solver_mode: str | None = None,
) -> ExperimentConfig:
    """Turn file contents into a run configuration, with CLI overrides."""
    return ExperimentConfig(
        exploit_catalog=config.catalog,
        node_values=config.nodes,
        honeypot_cost=config.honeypot_cost,
        iterations=iterations if iterations is not None else config.iterations,
        seed=seed if seed is not None else config.seed,
        min_exploits=config.min_exploits,
        max_exploits=config.max_exploits,
        solver_mode=solver_mode if solver_mode is not None else config.solver_mode,
    )


def sweep_spec(
    config: FileConfig,
    parameter: str | None = None,
    exploit: str | None = None,
    values: tuple[float, ...] | None = None,
    layouts: tuple[tuple[tuple[str, float], ...], ...] | None = None,
    iterations: int | None = None,
    seed: int | None = None,
    solver_mode: str | None = None,
) -> SweepSpec:
    """Assemble a sweep from the file's sweep section plus CLI overrides."""
    parameter = parameter or config.sweep_parameter
    if parameter is None:
        raise ConfigError("no sweep parameter given (config 'sweep' section or --parameter)")
    if parameter not in SWEEP_PARAMETERS:
        raise ConfigError(
            f"unknown sweep parameter {parameter!r}; expected one of {SWEEP_PARAMETERS}"
        )
    exploit = exploit or config.sweep_exploit
    if parameter == "probability" and exploit is None:
        raise ConfigError("probability sweep needs --exploit (or sweep.exploit in the config)")
    if values is None:
        values = config.sweep_values
    if values is None:
        values = _default_values(parameter)
    base = experiment_config(config, iterations=iterations, seed=seed, solver_mode=solver_mode)
    try:
        return SweepSpec(
            base=base,
            parameter=parameter,
            values=tuple(values),
            exploit=exploit,
            node_layouts=layouts,
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _default_values(parameter: str) -> tuple[float, ...]:
    if parameter == "probability":
        return tuple(round(0.1 * i, 1) for i in range(11))
    return tuple(float(i) for i in range(11))
