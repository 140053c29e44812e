"""vlekit: vapor-liquid equilibrium toolkit for binary mixtures.

Antoine vapor pressures, NRTL and UNIFAC activity coefficients, validated
bubble/dew diagrams, and NRTL parameter fitting, exposed as a library, a
CLI (``vlekit``), and an HTTP service.
"""

from . import errors
from .activity import ActivityCurve, IdealModel, activity_curve, ln_gamma
from .activity.nrtl import NrtlModel, NrtlParameterSet
from .activity.unifac import UnifacModel, UnifacParameterTable, load_unifac_tables
from .antoine import (
    AntoineParameterSet,
    boiling_temperature,
    range_check,
    vapor_pressure,
)
from .chem import canonical_smiles, parse_smiles
from .core import (
    Component,
    ProviderRegistry,
    StateSpec,
    register_component,
    resolve_activity_model,
    resolve_antoine,
)
from .export import export_csv
from .fit import FitGrid, FitResult, build_fit_grid, evaluate_loss, fit_nrtl
from .vle import (
    BinarySystem,
    ConsistencyReport,
    EquilibriumPoint,
    VleDiagram,
    build_diagram,
    bubble_point,
    check_consistency,
    detect_azeotropes,
    dew_point,
    ensure_consistent,
)

__version__ = "0.1.0"

__all__ = [
    "ActivityCurve",
    "AntoineParameterSet",
    "BinarySystem",
    "Component",
    "ConsistencyReport",
    "EquilibriumPoint",
    "FitGrid",
    "FitResult",
    "IdealModel",
    "NrtlModel",
    "NrtlParameterSet",
    "ProviderRegistry",
    "StateSpec",
    "UnifacModel",
    "UnifacParameterTable",
    "VleDiagram",
    "activity_curve",
    "boiling_temperature",
    "bubble_point",
    "build_diagram",
    "build_fit_grid",
    "canonical_smiles",
    "check_consistency",
    "detect_azeotropes",
    "dew_point",
    "ensure_consistent",
    "errors",
    "evaluate_loss",
    "export_csv",
    "fit_nrtl",
    "ln_gamma",
    "load_unifac_tables",
    "parse_smiles",
    "range_check",
    "register_component",
    "resolve_activity_model",
    "resolve_antoine",
    "vapor_pressure",
    "__version__",
]
