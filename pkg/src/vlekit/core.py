"""Component registry and provider plumbing.

A :class:`ProviderRegistry` owns the data sources (Antoine tables, group
patterns, activity model factories).  Components are registered by SMILES;
registration parses, canonicalizes, decomposes into groups when patterns
are available, and attaches Antoine parameters from the first source that
covers the species.  Source order is explicit configuration.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Protocol

from .antoine import AntoineParameterSet
from .chem import GroupPattern, canonical_smiles, decompose, parse_smiles
from .errors import (
    ConfigError,
    DecompositionFailed,
    InvalidSmiles,
    NonPhysical,
    NotCovered,
    RemoteUnavailable,
    UnknownModel,
)

ISOTHERMAL = "isothermal"
ISOBARIC = "isobaric"


@dataclass(frozen=True)
class StateSpec:
    """Fixes exactly one of temperature or pressure; the other is solved for."""

    mode: str
    T: float | None = None
    p: float | None = None

    def __post_init__(self):
        if self.mode == ISOTHERMAL:
            if self.T is None or self.p is not None:
                raise ValueError("isothermal state fixes T and leaves p free")
            if self.T <= 0.0:
                raise NonPhysical(f"temperature must be positive, got {self.T} K")
        elif self.mode == ISOBARIC:
            if self.p is None or self.T is not None:
                raise ValueError("isobaric state fixes p and leaves T free")
            if self.p <= 0.0:
                raise NonPhysical(f"pressure must be positive, got {self.p} Pa")
        else:
            raise ValueError(f"unknown state mode {self.mode!r}")

    @classmethod
    def isothermal(cls, T: float) -> "StateSpec":
        return cls(ISOTHERMAL, T=T)

    @classmethod
    def isobaric(cls, p: float) -> "StateSpec":
        return cls(ISOBARIC, p=p)


@dataclass(frozen=True)
class Component:
    """A registered chemical species keyed by its canonical SMILES."""

    input_smiles: str
    canonical_smiles: str
    name: str | None = None
    groups: tuple[tuple[int, int], ...] | None = None
    antoine: AntoineParameterSet | None = None

    def group_counts(self) -> dict[int, int]:
        if self.groups is None:
            return {}
        return dict(self.groups)


class AntoineSource(Protocol):
    def resolve(self, canonical: str) -> AntoineParameterSet | None: ...


class AntoineFileSource:
    """CSV-backed Antoine parameters, keys canonicalized at load time.

    Expected header: smiles,A,B,C,t_min_K,t_max_K,p_unit
    """

    REQUIRED = ("smiles", "A", "B", "C", "t_min_K", "t_max_K", "p_unit")

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._table: dict[str, AntoineParameterSet] = {}
        try:
            with open(self.path, newline="") as fh:
                reader = csv.DictReader(fh)
                header = reader.fieldnames or []
                missing = [c for c in self.REQUIRED if c not in header]
                if missing:
                    raise ConfigError(
                        f"{self.path}: missing column(s) {', '.join(missing)}"
                    )
                for ln, row in enumerate(reader, start=2):
                    try:
                        params = AntoineParameterSet.from_declared(
                            float(row["A"]),
                            float(row["B"]),
                            float(row["C"]),
                            float(row["t_min_K"]),
                            float(row["t_max_K"]),
                            row["p_unit"].strip(),
                        )
                        key = canonical_smiles(row["smiles"].strip())
                    except (ValueError, InvalidSmiles) as exc:
                        raise ConfigError(f"{self.path}:{ln}: {exc}") from exc
                    self._table[key] = params
        except OSError as exc:
            raise ConfigError(f"cannot read Antoine table {self.path}: {exc}") from exc

    def resolve(self, canonical: str) -> AntoineParameterSet | None:
        return self._table.get(canonical)


@dataclass
class ProviderRegistry:
    """Explicitly ordered data sources plus named activity model factories."""

    antoine_sources: list[AntoineSource] = field(default_factory=list)
    group_patterns: list[GroupPattern] = field(default_factory=list)
    activity_factories: dict[str, Callable] = field(default_factory=dict)

    def register_activity_model(self, name: str, factory: Callable) -> None:
        self.activity_factories[name] = factory

    def model_names(self) -> list[str]:
        return sorted(self.activity_factories)


def _antoine_from_sources(canonical: str, registry: ProviderRegistry):
    for source in registry.antoine_sources:
        try:
            params = source.resolve(canonical)
        except RemoteUnavailable:
            continue  # offline provider: fall through to the next source
        if params is not None:
            return params
    return None


def register_component(
    smiles: str, registry: ProviderRegistry, name: str | None = None
) -> Component:
    """Parse, canonicalize, and annotate a species from the registry's data.

    Group decomposition and Antoine coverage are both best-effort here;
    absence is recorded as ``None`` and only raised when an operation
    actually needs the missing piece.
    """
    if not isinstance(smiles, str) or not smiles.strip():
        raise InvalidSmiles("SMILES string must be non-empty")
    graph = parse_smiles(smiles.strip())
    canonical = canonical_smiles(graph)

    groups: tuple[tuple[int, int], ...] | None = None
    if registry.group_patterns:
        try:
            counts = decompose(graph, registry.group_patterns)
            groups = tuple(sorted(counts.items()))
        except DecompositionFailed:
            groups = None

    return Component(
        input_smiles=smiles.strip(),
        canonical_smiles=canonical,
        name=name,
        groups=groups,
        antoine=_antoine_from_sources(canonical, registry),
    )


def resolve_antoine(component: Component, registry: ProviderRegistry) -> AntoineParameterSet:
    if component.antoine is not None:
        return component.antoine
    params = _antoine_from_sources(component.canonical_smiles, registry)
    if params is None:
        raise NotCovered(
            f"no Antoine parameters available for {component.canonical_smiles}"
        )
    return params


def resolve_activity_model(
    name: str, pair: tuple[Component, Component], registry: ProviderRegistry
):
    factory = registry.activity_factories.get(name)
    if factory is None:
        known = ", ".join(registry.model_names()) or "none"
        raise UnknownModel(f"unknown activity model {name!r} (registered: {known})")
    return factory(pair, registry)
