"""Binary vapor-liquid equilibrium via extended Raoult's law.

Every equilibrium point satisfies p_i^s(T) * x_i * gamma_i = p * y_i for
both components to within 1e-8 * p.  That bound is enforced by the solvers
when a point is produced; the point type itself stays a plain record so a
diagram can be reassembled or deliberately perturbed for testing the
consistency checks.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass, replace

from scipy.optimize import brentq

from .activity import ActivityModel
from .antoine import AntoineParameterSet, boiling_temperature, vapor_pressure
from .core import ISOBARIC, ISOTHERMAL, Component, ProviderRegistry, StateSpec
from .core import resolve_activity_model, resolve_antoine
from .errors import (
    BracketFailure,
    ConsistencyViolation,
    DiagramPointErrors,
    NoConvergence,
    NonPhysical,
    VlekitError,
)

GRID_STEPS = 100  # 101 points including both pure ends

DEW_DAMPING = 0.5
DEW_TOL = 1.0e-10
DEW_MAX_ITER = 200

BRACKET_PAD_K = 20.0
TEMPERATURE_XTOL = 1.0e-8

RESIDUAL_REL_TOL = 1.0e-8
MERGE_REL_TOL = 1.0e-8
ORDERING_REL_TOL = 1.0e-9
AZEOTROPE_XY_TOL = 1.0e-6
AZEOTROPE_REFINE_TOL = 1.0e-8

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class EquilibriumPoint:
    """One converged phase equilibrium state of a binary mixture."""

    T: float
    p: float
    x1: float
    y1: float
    gamma1: float
    gamma2: float

    def __post_init__(self):
        if not 0.0 <= self.x1 <= 1.0:
            raise NonPhysical(f"x1 must lie in [0, 1], got {self.x1}")
        if not 0.0 <= self.y1 <= 1.0:
            raise NonPhysical(f"y1 must lie in [0, 1], got {self.y1}")
        if self.T <= 0.0:
            raise NonPhysical(f"temperature must be positive, got {self.T} K")
        if self.p <= 0.0:
            raise NonPhysical(f"pressure must be positive, got {self.p} Pa")

    @property
    def x2(self) -> float:
        return 1.0 - self.x1

    @property
    def y2(self) -> float:
        return 1.0 - self.y1


@dataclass(frozen=True)
class BinarySystem:
    """Everything needed to solve equilibria for one binary pair."""

    antoine1: AntoineParameterSet
    antoine2: AntoineParameterSet
    activity: ActivityModel

    @classmethod
    def from_components(
        cls,
        c1: Component,
        c2: Component,
        model_name: str,
        registry: ProviderRegistry,
    ) -> "BinarySystem":
        return cls(
            antoine1=resolve_antoine(c1, registry),
            antoine2=resolve_antoine(c2, registry),
            activity=resolve_activity_model(model_name, (c1, c2), registry),
        )

    def psats(self, T: float) -> tuple[float, float]:
        return vapor_pressure(self.antoine1, T), vapor_pressure(self.antoine2, T)

    def gammas(self, x1: float, T: float) -> tuple[float, float]:
        lg1, lg2 = self.activity.ln_gamma(x1, T)
        return math.exp(lg1), math.exp(lg2)


def raoult_residuals(point: EquilibriumPoint, system: BinarySystem) -> tuple[float, float]:
    """Defects of the equilibrium relation for both components, in Pa."""
    p1s, p2s = system.psats(point.T)
    r1 = p1s * point.x1 * point.gamma1 - point.p * point.y1
    r2 = p2s * point.x2 * point.gamma2 - point.p * point.y2
    return r1, r2


def _checked(system: BinarySystem, T, p, x1, y1, g1, g2, context: str) -> EquilibriumPoint:
    point = EquilibriumPoint(T=T, p=p, x1=x1, y1=y1, gamma1=g1, gamma2=g2)
    r1, r2 = raoult_residuals(point, system)
    tol = RESIDUAL_REL_TOL * p
    worst = max(abs(r1), abs(r2))
    if worst > tol:
        raise NoConvergence(
            f"{context}: equilibrium residual {worst:.3e} Pa exceeds {tol:.3e} Pa"
        )
    return point


# ---------------------------------------------------------------------------
# point solvers


def bubble_point_isothermal(system: BinarySystem, T: float, x1: float) -> EquilibriumPoint:
    if not 0.0 <= x1 <= 1.0:
        raise NonPhysical(f"x1 must lie in [0, 1], got {x1}")
    g1, g2 = system.gammas(x1, T)
    p1s, p2s = system.psats(T)
    x2 = 1.0 - x1
    p = x1 * g1 * p1s + x2 * g2 * p2s
    y1 = x1 * g1 * p1s / p
    return _checked(system, T, p, x1, y1, g1, g2, f"bubble p at x1={x1:g}")


def _dew_composition(system: BinarySystem, T: float, y1: float, x_start: float):
    """Successive substitution for the liquid in equilibrium with vapor y1.

    Returns (p, x1, gamma1, gamma2).  The substitution map keeps iterates
    inside (0, 1) by construction; only the damped convergence is at issue,
    and strongly non-ideal mixtures can defeat it, which surfaces as
    NoConvergence rather than a wrong answer.
    """
    p1s, p2s = system.psats(T)
    y2 = 1.0 - y1
    x = x_start
    for _ in range(DEW_MAX_ITER):
        g1, g2 = system.gammas(x, T)
        p = 1.0 / (y1 / (g1 * p1s) + y2 / (g2 * p2s))
        xn = y1 * p / (g1 * p1s)
        if abs(xn - x) <= DEW_TOL:
            g1, g2 = system.gammas(xn, T)
            p = 1.0 / (y1 / (g1 * p1s) + y2 / (g2 * p2s))
            return p, xn, g1, g2
        x = x + DEW_DAMPING * (xn - x)
    raise NoConvergence(
        f"dew-point substitution did not reach {DEW_TOL:g} within "
        f"{DEW_MAX_ITER} iterations at T={T:g} K, y1={y1:g}"
    )


def dew_point_isothermal(system: BinarySystem, T: float, y1: float) -> EquilibriumPoint:
    if not 0.0 <= y1 <= 1.0:
        raise NonPhysical(f"y1 must lie in [0, 1], got {y1}")
    p1s, p2s = system.psats(T)
    if y1 == 0.0:
        g1, g2 = system.gammas(0.0, T)
        return _checked(system, T, p2s * g2, 0.0, 0.0, g1, g2, "dew p at y1=0")
    if y1 == 1.0:
        g1, g2 = system.gammas(1.0, T)
        return _checked(system, T, p1s * g1, 1.0, 1.0, g1, g2, "dew p at y1=1")
    p, x1, g1, g2 = _dew_composition(system, T, y1, y1)
    return _checked(system, T, p, x1, y1, g1, g2, f"dew p at y1={y1:g}")


def _temperature_bracket(system: BinarySystem, p: float) -> tuple[float, float]:
    tb1 = boiling_temperature(system.antoine1, p)
    tb2 = boiling_temperature(system.antoine2, p)
    lo = max(min(tb1, tb2) - BRACKET_PAD_K, 1.0)
    hi = max(tb1, tb2) + BRACKET_PAD_K
    return lo, hi


def _solve_temperature(f, lo: float, hi: float, context: str) -> float:
    try:
        flo, fhi = f(lo), f(hi)
    except VlekitError as exc:
        raise BracketFailure(f"{context}: bracket endpoint failed: {exc}") from exc
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise BracketFailure(
            f"{context}: no sign change on [{lo:g}, {hi:g}] K "
            f"(f(lo)={flo:.3e}, f(hi)={fhi:.3e})"
        )
    try:
        return brentq(f, lo, hi, xtol=TEMPERATURE_XTOL)
    except RuntimeError as exc:
        raise NoConvergence(f"{context}: {exc}") from exc


def bubble_point_isobaric(system: BinarySystem, p: float, x1: float) -> EquilibriumPoint:
    if not 0.0 <= x1 <= 1.0:
        raise NonPhysical(f"x1 must lie in [0, 1], got {x1}")
    if x1 == 0.0:
        T = boiling_temperature(system.antoine2, p)
        g1, g2 = system.gammas(0.0, T)
        return _checked(system, T, p, 0.0, 0.0, g1, g2, "bubble T at x1=0")
    if x1 == 1.0:
        T = boiling_temperature(system.antoine1, p)
        g1, g2 = system.gammas(1.0, T)
        return _checked(system, T, p, 1.0, 1.0, g1, g2, "bubble T at x1=1")

    x2 = 1.0 - x1

    def f(T: float) -> float:
        g1, g2 = system.gammas(x1, T)
        p1s, p2s = system.psats(T)
        return x1 * g1 * p1s + x2 * g2 * p2s - p

    lo, hi = _temperature_bracket(system, p)
    T = _solve_temperature(f, lo, hi, f"bubble T at x1={x1:g}")
    g1, g2 = system.gammas(x1, T)
    p1s, p2s = system.psats(T)
    p_calc = x1 * g1 * p1s + x2 * g2 * p2s
    y1 = x1 * g1 * p1s / p_calc
    return _checked(system, T, p, x1, y1, g1, g2, f"bubble T at x1={x1:g}")


def dew_point_isobaric(system: BinarySystem, p: float, y1: float) -> EquilibriumPoint:
    if not 0.0 <= y1 <= 1.0:
        raise NonPhysical(f"y1 must lie in [0, 1], got {y1}")
    if y1 == 0.0:
        T = boiling_temperature(system.antoine2, p)
        g1, g2 = system.gammas(0.0, T)
        return _checked(system, T, p, 0.0, 0.0, g1, g2, "dew T at y1=0")
    if y1 == 1.0:
        T = boiling_temperature(system.antoine1, p)
        g1, g2 = system.gammas(1.0, T)
        return _checked(system, T, p, 1.0, 1.0, g1, g2, "dew T at y1=1")

    def h(T: float) -> float:
        p_dew, _, _, _ = _dew_composition(system, T, y1, y1)
        return p_dew - p

    lo, hi = _temperature_bracket(system, p)
    T = _solve_temperature(h, lo, hi, f"dew T at y1={y1:g}")
    _, x1, g1, g2 = _dew_composition(system, T, y1, y1)
    return _checked(system, T, p, x1, y1, g1, g2, f"dew T at y1={y1:g}")


def bubble_point(system: BinarySystem, state: StateSpec, x1: float) -> EquilibriumPoint:
    if state.mode == ISOTHERMAL:
        return bubble_point_isothermal(system, state.T, x1)
    return bubble_point_isobaric(system, state.p, x1)


def dew_point(system: BinarySystem, state: StateSpec, y1: float) -> EquilibriumPoint:
    if state.mode == ISOTHERMAL:
        return dew_point_isothermal(system, state.T, y1)
    return dew_point_isobaric(system, state.p, y1)


# ---------------------------------------------------------------------------
# azeotropes


def _k_difference(system: BinarySystem, state: StateSpec):
    """D(x) = gamma1*p1s - gamma2*p2s along the bubble line.

    Zeros of D in the open interval are azeotropes: relative volatility
    crosses unity there.
    """
    if state.mode == ISOTHERMAL:
        p1s, p2s = system.psats(state.T)

        def D(x1: float) -> float:
            g1, g2 = system.gammas(x1, state.T)
            return g1 * p1s - g2 * p2s

    else:

        def D(x1: float) -> float:
            pt = bubble_point_isobaric(system, state.p, x1)
            p1s, p2s = system.psats(pt.T)
            return pt.gamma1 * p1s - pt.gamma2 * p2s

    return D


def detect_azeotropes(
    system: BinarySystem,
    state: StateSpec,
    bubble: tuple[EquilibriumPoint, ...] | None = None,
) -> tuple[EquilibriumPoint, ...]:
    """All azeotropes found by sign crossings of the K-value difference.

    The 0.01 grid locates candidate cells; bisection then narrows each to
    1e-8 in composition.  Every crossing is reported, in composition order,
    so double azeotropes come back as two points.
    """
    D = _k_difference(system, state)
    xs = [i / GRID_STEPS for i in range(GRID_STEPS + 1)]
    if bubble is not None:
        values = []
        for pt in bubble:
            p1s, p2s = system.psats(pt.T)
            values.append(pt.gamma1 * p1s - pt.gamma2 * p2s)
    else:
        values = [D(x) for x in xs]

    found: list[float] = []
    for i in range(GRID_STEPS):
        d0, d1 = values[i], values[i + 1]
        if d0 == 0.0:
            if 0 < i and d1 != 0.0:  # interior grid node is itself the crossing
                found.append(xs[i])
            continue
        if d0 * d1 < 0.0:
            lo, hi, dlo = xs[i], xs[i + 1], d0
            while hi - lo > AZEOTROPE_REFINE_TOL:
                mid = 0.5 * (lo + hi)
                dm = D(mid)
                if dm == 0.0:
                    lo = hi = mid
                    break
                if (dm > 0.0) == (dlo > 0.0):
                    lo, dlo = mid, dm
                else:
                    hi = mid
            found.append(0.5 * (lo + hi))

    points = []
    for x_az in found:
        pt = bubble_point(system, state, x_az)
        if abs(pt.x1 - pt.y1) > AZEOTROPE_XY_TOL:
            raise NoConvergence(
                f"azeotrope refinement stalled: |x1 - y1| = {abs(pt.x1 - pt.y1):.3e} "
                f"at x1 = {pt.x1:.8f}"
            )
        points.append(pt)
    return tuple(points)


# ---------------------------------------------------------------------------
# diagram assembly and consistency


@dataclass(frozen=True)
class CheckResult:
    verdict: str
    detail: str = ""
    location: float | None = None
    residuals: tuple[float, float] | None = None

    @property
    def ok(self) -> bool:
        return self.verdict != FAIL


@dataclass(frozen=True)
class ConsistencyReport:
    merge_at_pure: CheckResult
    slope_sign_agreement: CheckResult
    ordering: CheckResult
    azeotrope_coincidence: CheckResult

    @property
    def passed(self) -> bool:
        return all(
            c.ok
            for c in (
                self.merge_at_pure,
                self.slope_sign_agreement,
                self.ordering,
                self.azeotrope_coincidence,
            )
        )

    def failures(self) -> list[str]:
        out = []
        for name in (
            "merge_at_pure",
            "slope_sign_agreement",
            "ordering",
            "azeotrope_coincidence",
        ):
            check: CheckResult = getattr(self, name)
            if not check.ok:
                out.append(f"{name}: {check.detail}")
        return out


@dataclass(frozen=True)
class VleDiagram:
    """Bubble and dew lines over the full composition range."""

    mode: str
    T: float | None
    p: float | None
    bubble: tuple[EquilibriumPoint, ...]
    dew: tuple[EquilibriumPoint, ...]
    azeotropes: tuple[EquilibriumPoint, ...] = ()
    consistency: ConsistencyReport | None = None

    @property
    def azeotrope(self) -> EquilibriumPoint | None:
        return self.azeotropes[0] if self.azeotropes else None


def _dependent(diagram: VleDiagram):
    """Accessor for the solved-for variable of each point."""
    if diagram.mode == ISOTHERMAL:
        return lambda pt: pt.p
    return lambda pt: pt.T


def _segment_signs(keys, vals, boundaries, deadband_rel):
    """Per-cell slope signs grouped into azeotrope-bounded sub-domains.

    Cells straddling a boundary are excluded; differences inside the
    deadband count as flat and carry no sign.
    """
    domains: dict[int, list[tuple[float, int]]] = {}
    for i in range(len(keys) - 1):
        a, b = keys[i], keys[i + 1]
        if any(a < bd < b for bd in boundaries):
            continue
        mid = 0.5 * (a + b)
        dom = bisect_left(boundaries, mid)
        diff = vals[i + 1] - vals[i]
        deadband = deadband_rel * max(abs(vals[i]), abs(vals[i + 1]))
        if abs(diff) <= deadband:
            sign = 0
        else:
            sign = 1 if diff > 0.0 else -1
        domains.setdefault(dom, []).append((a, sign))
    return domains


def _dominant_sign(entries) -> int:
    for _, sign in entries:
        if sign != 0:
            return sign
    return 0


def check_consistency(diagram: VleDiagram) -> ConsistencyReport:
    """Run the four-part validation battery on an assembled diagram.

    The checks only look at the stored line data, never at the model, so a
    diagram reconstructed or perturbed by hand is checked on its own merits.
    """
    val = _dependent(diagram)
    bub = diagram.bubble
    dew = diagram.dew
    bkeys = [pt.x1 for pt in bub]
    dkeys = [pt.y1 for pt in dew]

    # 1. both lines merge at the pure ends
    res_lo = abs(val(bub[0]) - val(dew[0]))
    res_hi = abs(val(bub[-1]) - val(dew[-1]))
    rel_lo = res_lo / abs(val(bub[0]))
    rel_hi = res_hi / abs(val(bub[-1]))
    if rel_lo <= MERGE_REL_TOL and rel_hi <= MERGE_REL_TOL:
        merge = CheckResult(PASS, residuals=(res_lo, res_hi))
    else:
        merge = CheckResult(
            FAIL,
            f"pure-end mismatch: relative residuals {rel_lo:.3e} (x=0), {rel_hi:.3e} (x=1)",
            residuals=(res_lo, res_hi),
        )

    # 2. bubble stays on the correct side of dew everywhere
    #    (above in an isothermal p-x-y, below in an isobaric T-x-y)
    ordering = CheckResult(PASS)
    for i, (b, d) in enumerate(zip(bub, dew)):
        tol = ORDERING_REL_TOL * abs(val(b))
        gap = val(b) - val(d)
        bad = gap < -tol if diagram.mode == ISOTHERMAL else gap > tol
        if bad:
            side = "below" if diagram.mode == ISOTHERMAL else "above"
            ordering = CheckResult(
                FAIL,
                f"bubble line falls {side} the dew line at composition {bkeys[i]:g}",
                location=bkeys[i],
            )
            break

    # 3. slope signs agree between the lines within each azeotrope-bounded domain
    boundaries = sorted(pt.x1 for pt in diagram.azeotropes if 0.0 < pt.x1 < 1.0)
    bub_domains = _segment_signs(bkeys, [val(p) for p in bub], boundaries, ORDERING_REL_TOL)
    dew_domains = _segment_signs(dkeys, [val(p) for p in dew], boundaries, ORDERING_REL_TOL)
    slope = CheckResult(PASS)
    for dom in sorted(set(bub_domains) | set(dew_domains)):
        problem = None
        for label, entries in (("bubble", bub_domains.get(dom, [])),
                               ("dew", dew_domains.get(dom, []))):
            signs = {s for _, s in entries if s != 0}
            if len(signs) > 1:
                flip_at = next(a for a, s in entries if s != 0 and s != _dominant_sign(entries))
                problem = f"{label} line changes direction inside a domain at {flip_at:g}"
                break
        if problem is None:
            sb = _dominant_sign(bub_domains.get(dom, []))
            sd = _dominant_sign(dew_domains.get(dom, []))
            if sb != 0 and sd != 0 and sb != sd:
                problem = (
                    f"bubble and dew slopes disagree in domain {dom} "
                    f"({'rising' if sb > 0 else 'falling'} vs {'rising' if sd > 0 else 'falling'})"
                )
        if problem is not None:
            slope = CheckResult(FAIL, problem)
            break

    # 4. azeotropes: composition equality and an extremum on both lines
    if not diagram.azeotropes:
        azeo = CheckResult(NOT_APPLICABLE, "no azeotrope detected")
    else:
        azeo = CheckResult(PASS)
        for k, pt in enumerate(diagram.azeotropes):
            if abs(pt.x1 - pt.y1) > AZEOTROPE_XY_TOL:
                azeo = CheckResult(
                    FAIL,
                    f"x and y differ by {abs(pt.x1 - pt.y1):.3e} at the azeotrope "
                    f"near x1 = {pt.x1:g}",
                    location=pt.x1,
                )
                break
            left, right = k, k + 1
            sb_l = _dominant_sign(bub_domains.get(left, []))
            sb_r = _dominant_sign(bub_domains.get(right, []))
            sd_l = _dominant_sign(dew_domains.get(left, []))
            sd_r = _dominant_sign(dew_domains.get(right, []))
            if sb_l == 0 or sb_r == 0 or sb_l == sb_r or sd_l == 0 or sd_r == 0 or sd_l == sd_r:
                azeo = CheckResult(
                    FAIL,
                    f"no derivative sign change across the azeotrope at x1 = {pt.x1:g}",
                    location=pt.x1,
                )
                break

    return ConsistencyReport(
        merge_at_pure=merge,
        slope_sign_agreement=slope,
        ordering=ordering,
        azeotrope_coincidence=azeo,
    )


def ensure_consistent(diagram: VleDiagram) -> VleDiagram:
    """Re-run the battery on ``diagram`` and raise unless everything passes."""
    report = check_consistency(diagram)
    if not report.passed:
        raise ConsistencyViolation(
            "; ".join(report.failures()) or "consistency check failed", report=report
        )
    return replace(diagram, consistency=report)


def build_diagram(system: BinarySystem, state: StateSpec) -> VleDiagram:
    """Solve both lines on the 0.01 grid, locate azeotropes, and validate.

    A diagram that fails validation is withheld: the ConsistencyViolation
    carries the full report instead.
    """
    grid = [i / GRID_STEPS for i in range(GRID_STEPS + 1)]
    failures: list[tuple[str, float, VlekitError]] = []
    bubble: list[EquilibriumPoint] = []
    dew: list[EquilibriumPoint] = []
    for x in grid:
        try:
            bubble.append(bubble_point(system, state, x))
        except VlekitError as exc:
            failures.append(("bubble", x, exc))
    for y in grid:
        try:
            dew.append(dew_point(system, state, y))
        except VlekitError as exc:
            failures.append(("dew", y, exc))
    if failures:
        line, loc, first = failures[0]
        raise DiagramPointErrors(
            f"{len(failures)} grid point(s) failed; first: {line} line at "
            f"composition {loc:g}: {first}",
            failures=failures,
        )

    azeotropes = detect_azeotropes(system, state, tuple(bubble))
    diagram = VleDiagram(
        mode=state.mode,
        T=state.T,
        p=state.p,
        bubble=tuple(bubble),
        dew=tuple(dew),
        azeotropes=azeotropes,
    )
    report = check_consistency(diagram)
    if not report.passed:
        raise ConsistencyViolation(
            "; ".join(report.failures()) or "consistency check failed", report=report
        )
    return replace(diagram, consistency=report)
