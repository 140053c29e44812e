"""Access to the demonstration data shipped inside the package."""

from __future__ import annotations

from importlib import resources
from pathlib import Path


def data_path(*parts: str) -> Path:
    """Filesystem path of a packaged data file or directory."""
    return Path(str(resources.files("vlekit").joinpath("data", *parts)))


ANTOINE_DEMO = ("antoine_demo.csv",)
NRTL_PAIRS_DEMO = ("nrtl_pairs_demo.csv",)
UNIFAC_ORIGINAL_DIR = ("unifac_original",)
UNIFAC_MODIFIED_DIR = ("unifac_modified",)
