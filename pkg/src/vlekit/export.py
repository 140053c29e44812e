"""CSV serialization of result objects.

Floats are written with ``repr``, which emits the shortest string that
parses back to the identical double, so a written table can be re-read
without losing a single bit.
"""

from __future__ import annotations

import numpy as np

from .activity import ActivityCurve
from .activity.nrtl import (
    COEFFICIENT_ORDER,
    NrtlParameterSet,
    ln_gamma_from_tau,
    nrtl_tau_alpha,
)
from .fit import FitGrid, FitResult
from .vle import VleDiagram


def _fmt(v: float) -> str:
    return repr(float(v))


def activity_curve_csv(curve: ActivityCurve) -> str:
    lines = ["x1,ln_gamma1,ln_gamma2"]
    for x, a, b in zip(curve.x1, curve.ln_gamma1, curve.ln_gamma2):
        lines.append(f"{_fmt(x)},{_fmt(a)},{_fmt(b)}")
    return "\n".join(lines) + "\n"


def vle_diagram_csv(diagram: VleDiagram) -> str:
    lines = ["x1,y1,T_K,p_Pa,gamma1,gamma2,line"]
    for label, points in (("bubble", diagram.bubble), ("dew", diagram.dew)):
        for pt in points:
            lines.append(
                ",".join(
                    (
                        _fmt(pt.x1),
                        _fmt(pt.y1),
                        _fmt(pt.T),
                        _fmt(pt.p),
                        _fmt(pt.gamma1),
                        _fmt(pt.gamma2),
                        label,
                    )
                )
            )
    return "\n".join(lines) + "\n"


def fit_result_csv(result: FitResult, grid: FitGrid) -> str:
    """Three '#'-separated sections: parameters, per-start losses, and the
    fitted model tabulated back onto the fit grid."""
    lines = ["# parameters", "name,value", f"variant,{result.params.variant}"]
    for coeff in COEFFICIENT_ORDER:
        lines.append(f"{coeff},{_fmt(getattr(result.params, coeff))}")
    lines.append(f"loss,{_fmt(result.loss)}")
    lines.append(f"n_starts,{result.n_starts}")
    lines.append(f"converged,{str(result.converged).lower()}")

    lines.append("# start_losses")
    lines.append("start,loss")
    for k, loss in enumerate(result.start_losses):
        lines.append(f"{k},{_fmt(loss)}")

    lines.append("# curves")
    lines.append("T_K,x1,ln_gamma1,ln_gamma2")
    xs = np.asarray(grid.compositions)
    for T in grid.temperatures:
        tau12, tau21, _, G12, G21 = nrtl_tau_alpha(result.params, T)
        m1, m2 = ln_gamma_from_tau(tau12, tau21, G12, G21, xs)
        for x, a, b in zip(grid.compositions, m1, m2):
            lines.append(f"{_fmt(T)},{_fmt(x)},{_fmt(a)},{_fmt(b)}")
    return "\n".join(lines) + "\n"


def parse_fit_csv(text: str):
    """Inverse of :func:`fit_result_csv` for the parameter/loss sections.

    Returns (params, loss, start_losses).  Used to prove the round trip:
    re-evaluating the parsed parameters must reproduce the stored loss
    bit for bit.
    """
    section = None
    values: dict[str, str] = {}
    start_losses: list[float] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            section = line[1:].strip()
            continue
        if section == "parameters":
            if line == "name,value":
                continue
            name, _, value = line.partition(",")
            values[name] = value
        elif section == "start_losses":
            if line == "start,loss":
                continue
            _, _, value = line.partition(",")
            start_losses.append(float(value))
    params = NrtlParameterSet(
        variant=int(values["variant"]),
        **{c: float(values[c]) for c in COEFFICIENT_ORDER},
    )
    loss = float(values["loss"])
    return params, loss, tuple(start_losses)


def export_csv(obj, grid: FitGrid | None = None) -> str:
    """Serialize any completed result object to CSV."""
    if isinstance(obj, ActivityCurve):
        return activity_curve_csv(obj)
    if isinstance(obj, VleDiagram):
        return vle_diagram_csv(obj)
    if isinstance(obj, FitResult):
        if grid is None:
            raise ValueError("exporting a fit result needs its FitGrid")
        return fit_result_csv(obj, grid)
    raise TypeError(f"no CSV form for {type(obj).__name__}")
