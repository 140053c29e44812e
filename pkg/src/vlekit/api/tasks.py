"""Task requests shared by the CLI and the HTTP service.

Both front ends translate their input into a :class:`TaskRequest`, call
:func:`run_task`, and serialize the identical result objects, which is what
keeps the two surfaces byte-for-byte interchangeable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..activity import ActivityCurve, activity_curve
from ..antoine import boiling_temperature, range_check, vapor_pressure
from ..core import (
    ProviderRegistry,
    StateSpec,
    register_component,
    resolve_activity_model,
    resolve_antoine,
)
from ..fit import FitGrid, FitResult, build_fit_grid, fit_nrtl, target_curves_from_model
from ..vle import BinarySystem, VleDiagram, build_diagram

VALIDATE = "validate"
VAPOR_PRESSURE = "vapor_pressure"
BOILING_TEMPERATURE = "boiling_temperature"
ACTIVITY = "activity"
VLE = "vle"
NRTL_FIT = "nrtl_fit"

TASKS = (VALIDATE, VAPOR_PRESSURE, BOILING_TEMPERATURE, ACTIVITY, VLE, NRTL_FIT)


@dataclass(frozen=True)
class TaskRequest:
    task: str
    smiles: tuple[str, ...]
    model: str | None = None
    T: float | None = None
    p: float | None = None
    variant: int | None = None
    T_range: tuple[float, float] | None = None

    def __post_init__(self):
        if self.task not in TASKS:
            raise ValueError(f"unknown task {self.task!r}")
        if self.task in (VAPOR_PRESSURE, BOILING_TEMPERATURE) and len(self.smiles) != 1:
            raise ValueError(f"task {self.task} takes exactly one SMILES")
        if self.task in (ACTIVITY, VLE, NRTL_FIT) and len(self.smiles) != 2:
            raise ValueError(f"task {self.task} takes exactly two SMILES")
        if self.task == VALIDATE and not self.smiles:
            raise ValueError("validate takes at least one SMILES")
        if self.task in (ACTIVITY, VLE, NRTL_FIT) and not self.model:
            raise ValueError(f"task {self.task} needs a model name")


@dataclass(frozen=True)
class FitOutcome:
    """A fit result together with the grid it was computed on."""

    result: FitResult
    grid: FitGrid
    target_model: str


def run_task(request: TaskRequest, registry: ProviderRegistry):
    """Execute a task against a registry; returns the result object."""
    if request.task == VALIDATE:
        out = []
        for s in request.smiles:
            comp = register_component(s, registry)
            out.append(
                {
                    "input": comp.input_smiles,
                    "canonical": comp.canonical_smiles,
                    "groups": comp.group_counts() or None,
                    "antoine_covered": comp.antoine is not None,
                }
            )
        return {"components": out}

    if request.task == VAPOR_PRESSURE:
        if request.T is None:
            raise ValueError("vapor_pressure needs a temperature")
        comp = register_component(request.smiles[0], registry)
        params = resolve_antoine(comp, registry)
        p = vapor_pressure(params, request.T)
        warnings = range_check(params, request.T)
        return {
            "smiles": comp.canonical_smiles,
            "T_K": request.T,
            "p_Pa": p,
            "warnings": [{"code": w.code, "message": w.message} for w in warnings],
        }

    if request.task == BOILING_TEMPERATURE:
        if request.p is None:
            raise ValueError("boiling_temperature needs a pressure")
        comp = register_component(request.smiles[0], registry)
        params = resolve_antoine(comp, registry)
        T = boiling_temperature(params, request.p)
        warnings = range_check(params, T)
        return {
            "smiles": comp.canonical_smiles,
            "p_Pa": request.p,
            "T_K": T,
            "warnings": [{"code": w.code, "message": w.message} for w in warnings],
        }

    c1 = register_component(request.smiles[0], registry)
    c2 = register_component(request.smiles[1], registry)

    if request.task == ACTIVITY:
        if request.T is None:
            raise ValueError("activity needs a temperature")
        model = resolve_activity_model(request.model, (c1, c2), registry)
        return activity_curve(model, request.T)

    if request.task == VLE:
        if (request.T is None) == (request.p is None):
            raise ValueError("vle needs exactly one of temperature or pressure")
        state = (
            StateSpec.isothermal(request.T)
            if request.T is not None
            else StateSpec.isobaric(request.p)
        )
        system = BinarySystem.from_components(c1, c2, request.model, registry)
        return build_diagram(system, state)

    # NRTL fit: tabulate the target model on the variant's grid, then fit
    if request.variant is None:
        raise ValueError("nrtl_fit needs a variant (3, 6, or 10)")
    grid = build_fit_grid(request.variant, T=request.T, T_range=request.T_range)
    model = resolve_activity_model(request.model, (c1, c2), registry)
    targets = target_curves_from_model(model, grid)
    result = fit_nrtl(targets, grid)
    return FitOutcome(result=result, grid=grid, target_model=request.model)


# ---------------------------------------------------------------------------
# JSON shapes shared by the CLI (--json) and the HTTP service


def curve_to_jsonable(curve: ActivityCurve) -> dict:
    return {
        "model": curve.model_name,
        "T_K": curve.T,
        "x1": list(curve.x1),
        "ln_gamma1": list(curve.ln_gamma1),
        "ln_gamma2": list(curve.ln_gamma2),
    }


def _point_to_jsonable(pt) -> dict:
    return {
        "x1": pt.x1,
        "y1": pt.y1,
        "T_K": pt.T,
        "p_Pa": pt.p,
        "gamma1": pt.gamma1,
        "gamma2": pt.gamma2,
    }


def report_to_jsonable(report) -> dict:
    def check(c):
        out = {"verdict": c.verdict}
        if c.detail:
            out["detail"] = c.detail
        if c.location is not None:
            out["location"] = c.location
        if c.residuals is not None:
            out["residuals"] = list(c.residuals)
        return out

    return {
        "passed": report.passed,
        "merge_at_pure": check(report.merge_at_pure),
        "slope_sign_agreement": check(report.slope_sign_agreement),
        "ordering": check(report.ordering),
        "azeotrope_coincidence": check(report.azeotrope_coincidence),
    }


def diagram_to_jsonable(diagram: VleDiagram) -> dict:
    return {
        "mode": diagram.mode,
        "T_K": diagram.T,
        "p_Pa": diagram.p,
        "bubble": [_point_to_jsonable(pt) for pt in diagram.bubble],
        "dew": [_point_to_jsonable(pt) for pt in diagram.dew],
        "azeotropes": [_point_to_jsonable(pt) for pt in diagram.azeotropes],
        "consistency": (
            report_to_jsonable(diagram.consistency) if diagram.consistency else None
        ),
    }


def fit_to_jsonable(outcome: FitOutcome) -> dict:
    result = outcome.result
    params = result.params
    return {
        "target_model": outcome.target_model,
        "variant": params.variant,
        "params": {
            c: getattr(params, c)
            for c in ("a12", "a21", "b12", "b21", "e12", "e21", "f12", "f21", "c12", "d12")
        },
        "loss": result.loss,
        "n_starts": result.n_starts,
        "start_losses": [None if math.isinf(v) else v for v in result.start_losses],
        "converged": result.converged,
        "equations": result.equations,
        "grid": {
            "compositions": list(outcome.grid.compositions),
            "temperatures": list(outcome.grid.temperatures),
        },
    }


def result_to_jsonable(result) -> dict:
    """Uniform JSON shape for any task result."""
    if isinstance(result, dict):
        return result
    if isinstance(result, ActivityCurve):
        return curve_to_jsonable(result)
    if isinstance(result, VleDiagram):
        return diagram_to_jsonable(result)
    if isinstance(result, FitOutcome):
        return fit_to_jsonable(result)
    raise TypeError(f"no JSON form for {type(result).__name__}")
