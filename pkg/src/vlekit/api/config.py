"""Configuration loading and provider registry assembly.

Config files are flat ``key = value`` text.  List-valued keys repeat; the
line order fixes the provider fallback order.  Environment variables named
``VLEKIT_*`` override single-valued keys.  With no configuration at all the
bundled demonstration tables are used, so the CLI and service work out of
the box.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

from .. import bundled
from ..activity import IdealModel
from ..activity.nrtl import NrtlModel, NrtlPairStore
from ..activity.unifac import MODIFIED, ORIGINAL, UnifacModel, load_unifac_tables
from ..core import AntoineFileSource, ProviderRegistry
from ..errors import ConfigError, DecompositionRequired
from .adapter import ActivityAdapterModel, AntoineAdapterSource

DEFAULT_HOST = "127.0.0.1"
DEFAULT_PORT = 8080

_LIST_KEYS = ("antoine_table", "antoine_adapter")
_SCALAR_KEYS = ("host", "port", "nrtl_pairs", "unifac_original", "unifac_modified")
_ENV_PREFIX = "VLEKIT_"


@dataclass(frozen=True)
class ServiceConfig:
    host: str = DEFAULT_HOST
    port: int = DEFAULT_PORT
    antoine_tables: tuple[Path, ...] = ()
    antoine_adapters: tuple[str, ...] = ()
    nrtl_pairs: Path | None = None
    unifac_original: Path | None = None
    unifac_modified: Path | None = None
    activity_adapters: tuple[tuple[str, str], ...] = field(default_factory=tuple)


def _parse_lines(path: Path) -> list[tuple[str, str, int]]:
    entries = []
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{ln}: expected key = value")
        key, _, value = line.partition("=")
        entries.append((key.strip(), value.strip(), ln))
    return entries


def load_config(path: str | Path | None = None, env=None) -> ServiceConfig:
    env = os.environ if env is None else env
    host = DEFAULT_HOST
    port = DEFAULT_PORT
    tables: list[Path] = []
    adapters: list[str] = []
    scalars: dict[str, str | None] = {
        "nrtl_pairs": None,
        "unifac_original": None,
        "unifac_modified": None,
    }
    activity_adapters: list[tuple[str, str]] = []

    if path is not None:
        for key, value, ln in _parse_lines(Path(path)):
            if key == "host":
                host = value
            elif key == "port":
                try:
                    port = int(value)
                except ValueError as exc:
                    raise ConfigError(f"{path}:{ln}: port must be an integer") from exc
            elif key == "antoine_table":
                tables.append(Path(value))
            elif key == "antoine_adapter":
                adapters.append(value)
            elif key in scalars:
                scalars[key] = value
            elif key.startswith("activity_adapter."):
                activity_adapters.append((key.split(".", 1)[1], value))
            else:
                raise ConfigError(f"{path}:{ln}: unknown key {key!r}")

    host = env.get(_ENV_PREFIX + "HOST", host)
    if _ENV_PREFIX + "PORT" in env:
        try:
            port = int(env[_ENV_PREFIX + "PORT"])
        except ValueError as exc:
            raise ConfigError(f"{_ENV_PREFIX}PORT must be an integer") from exc
    if _ENV_PREFIX + "ANTOINE_TABLE" in env:
        tables = [Path(env[_ENV_PREFIX + "ANTOINE_TABLE"])]
    if _ENV_PREFIX + "ANTOINE_ADAPTER" in env:
        adapters = [env[_ENV_PREFIX + "ANTOINE_ADAPTER"]]
    for key in scalars:
        envkey = _ENV_PREFIX + key.upper()
        if envkey in env:
            scalars[key] = env[envkey]

    return ServiceConfig(
        host=host,
        port=port,
        antoine_tables=tuple(tables),
        antoine_adapters=tuple(adapters),
        nrtl_pairs=Path(scalars["nrtl_pairs"]) if scalars["nrtl_pairs"] else None,
        unifac_original=Path(scalars["unifac_original"]) if scalars["unifac_original"] else None,
        unifac_modified=Path(scalars["unifac_modified"]) if scalars["unifac_modified"] else None,
        activity_adapters=tuple(activity_adapters),
    )


def _nrtl_factory(store: NrtlPairStore):
    def factory(pair, registry):
        c1, c2 = pair
        params = store.lookup(c1.canonical_smiles, c2.canonical_smiles)
        return NrtlModel(params)

    return factory


def _unifac_factory(table):
    def factory(pair, registry):
        missing = [c.canonical_smiles for c in pair if not c.group_counts()]
        if missing:
            raise DecompositionRequired(
                f"no group decomposition available for: {', '.join(missing)}"
            )
        c1, c2 = pair
        return UnifacModel(c1.group_counts(), c2.group_counts(), table)

    return factory


def _adapter_factory(name: str, url: str, client=None):
    def factory(pair, registry):
        return ActivityAdapterModel(
            name, url, (pair[0].canonical_smiles, pair[1].canonical_smiles), client=client
        )

    return factory


def build_registry(config: ServiceConfig | None = None, adapter_client=None) -> ProviderRegistry:
    """Assemble the provider registry a config describes.

    File sources come first in their declared order, then remote adapters.
    Unconfigured slots fall back to the bundled demonstration data.
    ``adapter_client`` lets tests inject an httpx client/transport.
    """
    config = config or ServiceConfig()

    antoine_paths = config.antoine_tables or (bundled.data_path(*bundled.ANTOINE_DEMO),)
    sources = [AntoineFileSource(p) for p in antoine_paths]
    sources += [AntoineAdapterSource(url, client=adapter_client) for url in config.antoine_adapters]

    pairs_path = config.nrtl_pairs or bundled.data_path(*bundled.NRTL_PAIRS_DEMO)
    store = NrtlPairStore(pairs_path)

    orig_dir = config.unifac_original or bundled.data_path(*bundled.UNIFAC_ORIGINAL_DIR)
    mod_dir = config.unifac_modified or bundled.data_path(*bundled.UNIFAC_MODIFIED_DIR)
    table_o, patterns = load_unifac_tables(
        Path(orig_dir) / "groups.csv", Path(orig_dir) / "interactions.csv", ORIGINAL
    )
    table_m, _ = load_unifac_tables(
        Path(mod_dir) / "groups.csv", Path(mod_dir) / "interactions.csv", MODIFIED
    )

    registry = ProviderRegistry(antoine_sources=sources, group_patterns=patterns)
    registry.register_activity_model("ideal", lambda pair, reg: IdealModel())
    registry.register_activity_model("nrtl", _nrtl_factory(store))
    registry.register_activity_model("nrtl-demo", _nrtl_factory(store))
    registry.register_activity_model("unifac", _unifac_factory(table_o))
    registry.register_activity_model("unifac-modified", _unifac_factory(table_m))
    for name, url in config.activity_adapters:
        registry.register_activity_model(name, _adapter_factory(name, url, adapter_client))
    return registry


def demo_registry() -> ProviderRegistry:
    """Registry backed entirely by the bundled demonstration data."""
    return build_registry(ServiceConfig())


__all__ = [
    "ServiceConfig",
    "build_registry",
    "demo_registry",
    "load_config",
]
