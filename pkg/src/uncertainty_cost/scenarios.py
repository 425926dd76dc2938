"""YAML scenario files: named parameter sets and (low, high) comparisons."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

import yaml

from .cost import DEFAULT_HORIZON
from .errors import InputError, ScenarioError
from .model import ModelParameters
from .solver import SolverConfig

BUNDLED = "table2.scenarios"


@dataclass(frozen=True)
class Scenario:
    name: str
    params: ModelParameters
    solver: SolverConfig = field(default_factory=SolverConfig)


@dataclass(frozen=True)
class Comparison:
    name: str
    low: str
    high: str
    horizon: int = DEFAULT_HORIZON
    discount: float = 0.0
    y0: float = 1.0


@dataclass(frozen=True)
class ScenarioFile:
    scenarios: dict[str, Scenario]
    comparisons: dict[str, Comparison]
    eta_convention: str = ""
    source: str = ""

    def scenario(self, name: str) -> Scenario:
        try:
            return self.scenarios[name]
        except KeyError:
            raise ScenarioError(f"unknown scenario {name!r}; defined: {', '.join(self.scenarios)}") from None

    def comparison(self, name: str) -> Comparison:
        try:
            return self.comparisons[name]
        except KeyError:
            raise ScenarioError(f"unknown comparison {name!r}; defined: {', '.join(self.comparisons)}") from None


_SOLVER_KEYS = {f.name for f in dataclasses.fields(SolverConfig)}


def _parse_scenario(name: str, body: Any) -> Scenario:
    if not isinstance(body, dict):
        raise ScenarioError(f"scenario {name!r} must be a mapping")
    body = dict(body)
    solver_block = body.pop("solver", None) or {}
    if not isinstance(solver_block, dict):
        raise ScenarioError(f"scenario {name!r}: solver must be a mapping")
    unknown = set(solver_block) - _SOLVER_KEYS
    if unknown:
        raise ScenarioError(f"scenario {name!r}: unknown solver option(s) {sorted(unknown)}")
    params = ModelParameters.from_dict(body)
    try:
        solver = SolverConfig(**solver_block)
    except InputError as exc:
        raise ScenarioError(f"scenario {name!r}: {exc}") from None
    return Scenario(name=name, params=params, solver=solver)


def _parse_comparison(name: str, body: Any, scenarios: dict[str, Scenario]) -> Comparison:
    if not isinstance(body, dict) or "low" not in body or "high" not in body:
        raise ScenarioError(f"comparison {name!r} needs 'low' and 'high' entries")
    for role in ("low", "high"):
        if body[role] not in scenarios:
            raise ScenarioError(f"comparison {name!r} references undefined scenario {body[role]!r}")
    unknown = set(body) - {"low", "high", "horizon", "discount", "y0"}
    if unknown:
        raise ScenarioError(f"comparison {name!r}: unknown key(s) {sorted(unknown)}")
    return Comparison(
        name=name,
        low=str(body["low"]),
        high=str(body["high"]),
        horizon=int(body.get("horizon", DEFAULT_HORIZON)),
        discount=float(body.get("discount", 0.0)),
        y0=float(body.get("y0", 1.0)),
    )


def _reject_duplicates(loader: yaml.SafeLoader, node: yaml.MappingNode, deep: bool = False) -> dict:
    seen = set()
    for key_node, _ in node.value:
        key = loader.construct_object(key_node, deep=deep)
        if key in seen:
            raise ScenarioError(f"duplicate key {key!r} (line {key_node.start_mark.line + 1})")
        seen.add(key)
    return loader.construct_mapping(node, deep=deep)


class _UniqueKeyLoader(yaml.SafeLoader):
    pass


_UniqueKeyLoader.add_constructor(yaml.resolver.BaseResolver.DEFAULT_MAPPING_TAG, _reject_duplicates)


def loads(text: str, source: str = "<string>") -> ScenarioFile:
    try:
        doc = yaml.load(text, Loader=_UniqueKeyLoader)
    except yaml.YAMLError as exc:
        raise ScenarioError(f"{source}: {exc}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("scenarios"), dict):
        raise ScenarioError(f"{source}: top level must contain a 'scenarios' mapping")
    scenarios = {str(k): _parse_scenario(str(k), v) for k, v in doc["scenarios"].items()}
    comparisons_raw = doc.get("comparisons") or {}
    if not isinstance(comparisons_raw, dict):
        raise ScenarioError(f"{source}: 'comparisons' must be a mapping")
    comparisons = {str(k): _parse_comparison(str(k), v, scenarios) for k, v in comparisons_raw.items()}
    return ScenarioFile(
        scenarios=scenarios,
        comparisons=comparisons,
        eta_convention=str(doc.get("eta_convention", "")).strip(),
        source=source,
    )


def load(path: str | Path | None = None) -> ScenarioFile:
    """Load a scenario file; ``None`` loads the bundled calibration."""
    if path is None:
        text = resources.files("uncertainty_cost").joinpath("data", BUNDLED).read_text(encoding="utf-8")
        return loads(text, source=BUNDLED)
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text, source=str(path))
