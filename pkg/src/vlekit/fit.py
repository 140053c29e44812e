"""NRTL parameter estimation against tabulated activity curves.

The objective is the mean squared deviation of ln gamma over the fit grid,

    L = 1/(2*N*J) * sum_i sum_j sum_k (ln gamma_k^NRTL - ln gamma_k^target)^2

with N compositions, J temperatures, and k running over both components.
The reported loss is produced by :func:`evaluate_loss`, which accumulates
the squared terms with ``math.fsum`` so the number is exactly rounded and
reproducible regardless of evaluation order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import least_squares
from scipy.stats import qmc

from .activity import ActivityCurve
from .activity.nrtl import (
    FREE_COEFFICIENTS,
    NrtlParameterSet,
    VARIANTS,
    ln_gamma_from_tau,
    nrtl_tau_alpha,
)
from .errors import (
    AllStartsFailed,
    GridMismatch,
    RangeForbidden,
    RangeRequired,
    VlekitError,
)

N_SINGLE_T = 101
N_MULTI_T = 21
J_MULTI_T = 5

N_STARTS = 8
MAX_NFEV = 500
STEP_TOL = 1.0e-10

ALPHA_LO = 0.01
ALPHA_HI = 1.99
BARRIER_SCALE = 10.0

TAU_START_RANGE = (-2.0, 2.0)
ALPHA_START_RANGE = (0.1, 0.9)


@dataclass(frozen=True)
class FitGrid:
    """Composition/temperature sampling implied by the chosen variant."""

    variant: int
    compositions: tuple[float, ...]
    temperatures: tuple[float, ...]

    @property
    def n_compositions(self) -> int:
        return len(self.compositions)

    @property
    def n_temperatures(self) -> int:
        return len(self.temperatures)


def build_fit_grid(
    variant: int,
    T: float | None = None,
    T_range: tuple[float, float] | None = None,
) -> FitGrid:
    """Resolve the sampling grid for a fit request.

    The 3-parameter form is temperature-independent, so it takes a single
    temperature and 101 compositions; handing it a range is an error, not a
    silent collapse.  The 6- and 10-parameter forms need a range, sampled
    at 5 equally spaced temperatures and 21 compositions each.
    """
    if variant not in VARIANTS:
        raise ValueError(f"NRTL variant must be one of {VARIANTS}, got {variant}")
    if variant == 3:
        if T_range is not None:
            raise RangeForbidden(
                "the 3-parameter fit runs at a single temperature; pass T, not a range"
            )
        if T is None:
            raise ValueError("the 3-parameter fit needs a temperature")
        if T <= 0.0:
            raise ValueError(f"temperature must be positive, got {T} K")
        comps = tuple(i / (N_SINGLE_T - 1) for i in range(N_SINGLE_T))
        return FitGrid(3, comps, (float(T),))

    if T_range is None:
        raise RangeRequired(
            f"the {variant}-parameter fit is temperature-dependent and needs a range"
        )
    if T is not None:
        raise ValueError("give either a single temperature or a range, not both")
    lo, hi = float(T_range[0]), float(T_range[1])
    if not 0.0 < lo < hi:
        raise ValueError(f"temperature range must satisfy 0 < lo < hi, got [{lo}, {hi}]")
    comps = tuple(i / (N_MULTI_T - 1) for i in range(N_MULTI_T))
    temps = tuple(lo + (hi - lo) * j / (J_MULTI_T - 1) for j in range(J_MULTI_T))
    return FitGrid(variant, comps, temps)


def _normalized_targets(targets, grid: FitGrid) -> tuple[ActivityCurve, ...]:
    if isinstance(targets, ActivityCurve):
        targets = (targets,)
    targets = tuple(targets)
    if len(targets) != grid.n_temperatures:
        raise GridMismatch(
            f"expected {grid.n_temperatures} target curve(s), got {len(targets)}"
        )
    for j, curve in enumerate(targets):
        if curve.T != grid.temperatures[j]:
            raise GridMismatch(
                f"target curve {j} is at T = {curve.T} K, grid expects "
                f"{grid.temperatures[j]} K"
            )
        if curve.x1 != grid.compositions:
            raise GridMismatch(
                f"target curve {j} composition grid does not match the fit grid "
                f"({len(curve.x1)} vs {grid.n_compositions} points)"
            )
    return targets


def evaluate_loss(params: NrtlParameterSet, targets, grid: FitGrid) -> float:
    """Exactly rounded loss of ``params`` against the target curves."""
    targets = _normalized_targets(targets, grid)
    xs = np.asarray(grid.compositions)
    terms: list[float] = []
    for j, T in enumerate(grid.temperatures):
        tau12, tau21, _, G12, G21 = nrtl_tau_alpha(params, T)
        m1, m2 = ln_gamma_from_tau(tau12, tau21, G12, G21, xs)
        d1 = m1 - np.asarray(targets[j].ln_gamma1)
        d2 = m2 - np.asarray(targets[j].ln_gamma2)
        terms.extend(float(v) for v in d1 * d1)
        terms.extend(float(v) for v in d2 * d2)
    return math.fsum(terms) / (2.0 * grid.n_compositions * grid.n_temperatures)


def params_from_theta(variant: int, theta) -> NrtlParameterSet:
    coeffs = dict(zip(FREE_COEFFICIENTS[variant], (float(t) for t in theta)))
    return NrtlParameterSet(variant=variant, **coeffs)


def _tau_alpha_raw(variant: int, theta, T: float):
    """tau/alpha from a raw parameter vector, without the alpha range gate."""
    if variant == 3:
        return theta[0], theta[1], theta[2]
    if variant == 6:
        a12, a21, b12, b21, c12, d12 = theta
        return a12 + b12 / T, a21 + b21 / T, c12 + d12 * (T - 273.15)
    a12, a21, b12, b21, e12, e21, f12, f21, c12, d12 = theta
    lnT = math.log(T)
    return (
        a12 + b12 / T + e12 * lnT + f12 * T,
        a21 + b21 / T + e21 * lnT + f21 * T,
        c12 + d12 * (T - 273.15),
    )


def _residual_function(variant: int, grid: FitGrid, targets):
    xs = np.asarray(grid.compositions)
    t1 = [np.asarray(c.ln_gamma1) for c in targets]
    t2 = [np.asarray(c.ln_gamma2) for c in targets]
    scale = 1.0 / math.sqrt(grid.n_compositions * grid.n_temperatures)

    def residuals(theta):
        parts = []
        for j, T in enumerate(grid.temperatures):
            tau12, tau21, alpha = _tau_alpha_raw(variant, theta, T)
            G12 = math.exp(-alpha * tau12)
            G21 = math.exp(-alpha * tau21)
            m1, m2 = ln_gamma_from_tau(tau12, tau21, G12, G21, xs)
            parts.append((m1 - t1[j]) * scale)
            parts.append((m2 - t2[j]) * scale)
            # hinge barrier keeps the randomness parameter inside (0, 2);
            # exactly zero whenever alpha is feasible, so the converged
            # cost remains the pure loss
            parts.append(
                np.array(
                    [
                        BARRIER_SCALE * max(0.0, ALPHA_LO - alpha),
                        BARRIER_SCALE * max(0.0, alpha - ALPHA_HI),
                    ]
                )
            )
        return np.concatenate(parts)

    return residuals


def _start_vectors(grid: FitGrid, targets) -> list[list[float]]:
    """One heuristic start plus seven low-discrepancy ones, all in tau space."""
    mid = grid.n_temperatures // 2
    tau21_0 = float(targets[mid].ln_gamma1[0])
    tau12_0 = float(targets[mid].ln_gamma2[-1])
    starts = [[tau12_0, tau21_0, 0.3]]

    sampler = qmc.Halton(d=3, scramble=False)
    raw = sampler.random(N_STARTS)[1:]  # drop the origin point
    tlo, thi = TAU_START_RANGE
    alo, ahi = ALPHA_START_RANGE
    for u in raw:
        starts.append(
            [
                tlo + (thi - tlo) * float(u[0]),
                tlo + (thi - tlo) * float(u[1]),
                alo + (ahi - alo) * float(u[2]),
            ]
        )
    return starts


def _expand_start(variant: int, theta3) -> list[float]:
    a12, a21, c12 = theta3
    if variant == 3:
        return [a12, a21, c12]
    if variant == 6:
        return [a12, a21, 0.0, 0.0, c12, 0.0]
    return [a12, a21, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, c12, 0.0]


@dataclass(frozen=True)
class FitOptions:
    n_starts: int = N_STARTS
    max_nfev: int = MAX_NFEV
    tol: float = STEP_TOL


@dataclass(frozen=True)
class FitResult:
    params: NrtlParameterSet
    loss: float
    n_starts: int
    start_losses: tuple[float, ...]
    converged: bool
    equations: str


def render_equations(params: NrtlParameterSet) -> str:
    """Human-readable closed form of the fitted model."""
    lines = [
        "ln gamma1 = x2^2 * ( tau21*(G21/(x1 + x2*G21))^2 + tau12*G12/(x2 + x1*G12)^2 )",
        "ln gamma2 = x1^2 * ( tau12*(G12/(x2 + x1*G12))^2 + tau21*G21/(x1 + x2*G21)^2 )",
        "G12 = exp(-alpha*tau12)    G21 = exp(-alpha*tau21)",
    ]
    if params.variant == 3:
        lines += [
            "tau12 = a12    tau21 = a21    alpha = c12",
        ]
    elif params.variant == 6:
        lines += [
            "tau12 = a12 + b12/T    tau21 = a21 + b21/T",
            "alpha = c12 + d12*(T - 273.15)",
        ]
    else:
        lines += [
            "tau12 = a12 + b12/T + e12*ln(T) + f12*T",
            "tau21 = a21 + b21/T + e21*ln(T) + f21*T",
            "alpha = c12 + d12*(T - 273.15)",
        ]
    for coeff in FREE_COEFFICIENTS[params.variant]:
        lines.append(f"{coeff} = {getattr(params, coeff)!r}")
    return "\n".join(lines)


def fit_nrtl(targets, grid: FitGrid, options: FitOptions | None = None) -> FitResult:
    """Multi-start local least squares for the grid's NRTL variant.

    Eight deterministic starts: one heuristic (infinite-dilution values of
    the mid-temperature target seed tau, alpha = 0.3) and seven Halton
    points.  The temperature-dependent variants first fit the 3-parameter
    form at the middle temperature, then release all coefficients.  The
    best start by exact loss wins; ties keep the earliest start.
    """
    options = options or FitOptions()
    targets = _normalized_targets(targets, grid)
    variant = grid.variant

    full_res = _residual_function(variant, grid, targets)
    mid = grid.n_temperatures // 2
    mid_grid = FitGrid(3, grid.compositions, (grid.temperatures[mid],))
    mid_res = _residual_function(3, mid_grid, (targets[mid],))

    start_losses: list[float] = []
    best: tuple[float, NrtlParameterSet, bool] | None = None
    errors: list[str] = []

    for theta3 in _start_vectors(grid, targets)[: options.n_starts]:
        try:
            if variant == 3:
                theta0 = theta3
            else:
                pre = least_squares(
                    mid_res,
                    theta3,
                    xtol=options.tol,
                    gtol=options.tol,
                    ftol=options.tol,
                    max_nfev=options.max_nfev,
                )
                theta0 = _expand_start(variant, list(pre.x))
            ls = least_squares(
                full_res,
                theta0,
                xtol=options.tol,
                gtol=options.tol,
                ftol=options.tol,
                max_nfev=options.max_nfev,
            )
            params = params_from_theta(variant, ls.x)
            loss = evaluate_loss(params, targets, grid)
        except (VlekitError, ValueError, np.linalg.LinAlgError) as exc:
            start_losses.append(math.inf)
            errors.append(str(exc))
            continue
        if not math.isfinite(loss):
            start_losses.append(math.inf)
            errors.append("non-finite loss")
            continue
        start_losses.append(loss)
        if best is None or loss < best[0]:
            best = (loss, params, bool(ls.success))

    if best is None:
        raise AllStartsFailed(
            f"all {len(start_losses)} starts failed: {'; '.join(errors[:3])}"
        )
    loss, params, success = best
    return FitResult(
        params=params,
        loss=loss,
        n_starts=len(start_losses),
        start_losses=tuple(start_losses),
        converged=success,
        equations=render_equations(params),
    )


def target_curves_from_model(model, grid: FitGrid) -> tuple[ActivityCurve, ...]:
    """Tabulate a model onto the fit grid, one curve per temperature."""
    from .activity import activity_curve

    dx = 1.0 / (grid.n_compositions - 1)
    return tuple(activity_curve(model, T, dx=dx) for T in grid.temperatures)
