"""Acceptance gate: every release criterion in one module.

Each test exercises one contract end to end and records a single PASS/FAIL
line (printed in the terminal summary), so a full run reads as a checklist.
Tolerances are pinned here on purpose; loosening one is a release decision,
not a test fix.
"""

import dataclasses
import importlib
import pkgutil
import random
import sys
import time
from contextlib import contextmanager
from types import SimpleNamespace

import pytest

from vlekit.activity import activity_curve
from vlekit.activity.nrtl import NrtlModel, NrtlParameterSet
from vlekit.antoine import AntoineParameterSet, boiling_temperature, vapor_pressure
from vlekit.chem import canonical_smiles, parse_smiles
from vlekit.core import StateSpec, register_component, resolve_activity_model
from vlekit.errors import ConsistencyViolation
from vlekit.fit import build_fit_grid, evaluate_loss, fit_nrtl, target_curves_from_model
from vlekit.vle import (
    BinarySystem,
    build_diagram,
    bubble_point_isobaric,
    bubble_point_isothermal,
    detect_azeotropes,
    dew_point_isobaric,
    dew_point_isothermal,
    ensure_consistent,
)

from conftest import BENZENE_ANTOINE, HEXANE_ANTOINE, antoine_bar

SEED = 20260822


@pytest.fixture
def criterion(request):
    @contextmanager
    def record(label):
        lines = getattr(request.config, "_criterion_lines", None)
        if lines is None:
            lines = []
            request.config._criterion_lines = lines
        try:
            yield
        except BaseException:
            lines.append(f"{label}: FAIL")
            raise
        lines.append(f"{label}: PASS")

    return record


def _swap_point(line, index, **changes):
    pts = list(line)
    pts[index] = dataclasses.replace(pts[index], **changes)
    return tuple(pts)


def _gibbs_duhem_worst(model, T):
    """Largest |x1 d(ln g1)/dx1 + x2 d(ln g2)/dx1| on the interior grid,
    derivatives by central differences with spacing 1e-4."""
    h = 1.0e-4
    worst = 0.0
    for j in range(1, 100):
        x = j / 100
        a1p, a2p = model.ln_gamma(x + h, T)
        a1m, a2m = model.ln_gamma(x - h, T)
        d1 = (a1p - a1m) / (2.0 * h)
        d2 = (a2p - a2m) / (2.0 * h)
        worst = max(worst, abs(x * d1 + (1.0 - x) * d2))
    return worst


def test_c01_antoine_inverse_roundtrip(criterion):
    with criterion("C1 Antoine T->p->T roundtrip, 1000 random sets, rel 1e-9, <1 s"):
        rng = random.Random(SEED)
        cases = []
        for _ in range(1000):
            A = rng.uniform(8.0, 11.0)
            B = rng.uniform(500.0, 2500.0)
            C = rng.uniform(-100.0, 50.0)
            ps = AntoineParameterSet.from_declared(A, B, C, 200.0, 600.0, "Pa")
            T = rng.uniform(max(1.0, -C) + 5.0, 600.0)
            cases.append((ps, T))
        t0 = time.perf_counter()
        worst = 0.0
        for ps, T in cases:
            back = boiling_temperature(ps, vapor_pressure(ps, T))
            worst = max(worst, abs(back - T) / T)
        elapsed = time.perf_counter() - t0
        assert worst <= 1.0e-9, f"worst relative error {worst:.3e}"
        assert elapsed < 1.0, f"took {elapsed:.2f} s"


def test_c02_gibbs_duhem_residuals(criterion, registry):
    with criterion("C2 Gibbs-Duhem residual <= 1e-6, 50 NRTL + 5 UNIFAC pairs, <10 s"):
        t0 = time.perf_counter()
        rng = random.Random(SEED)
        worst = 0.0
        for _ in range(50):
            params = NrtlParameterSet.three_parameter(
                rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5), rng.uniform(0.2, 0.6)
            )
            worst = max(worst, _gibbs_duhem_worst(NrtlModel(params), 350.0))
        pairs = (
            ("CCCCCC", "CCO"),
            ("CCCCCC", "c1ccccc1"),
            ("c1ccccc1", "CCO"),
            ("Cc1ccccc1", "CC(C)O"),
            ("Oc1ccccc1", "CCCc1ccccc1N"),
        )
        for s1, s2 in pairs:
            comp = (register_component(s1, registry), register_component(s2, registry))
            for name in ("unifac", "unifac-modified"):
                model = resolve_activity_model(name, comp, registry)
                worst = max(worst, _gibbs_duhem_worst(model, 350.0))
        elapsed = time.perf_counter() - t0
        assert worst <= 1.0e-6, f"worst residual {worst:.3e}"
        assert elapsed < 10.0, f"took {elapsed:.2f} s"


def test_c03_ideal_mixture_reduction(criterion, hexane_antoine, ethanol_antoine):
    with criterion("C3 zero-tau bubble line equals Raoult line, rel 1e-12, all 101 points"):
        system = BinarySystem(
            hexane_antoine,
            ethanol_antoine,
            NrtlModel(NrtlParameterSet.three_parameter(0.0, 0.0, 0.3)),
        )
        diagram = build_diagram(system, StateSpec.isothermal(400.0))
        p1 = vapor_pressure(hexane_antoine, 400.0)
        p2 = vapor_pressure(ethanol_antoine, 400.0)
        assert len(diagram.bubble) == 101
        for pt in diagram.bubble:
            expected = pt.x1 * p1 + (1.0 - pt.x1) * p2
            assert abs(pt.p - expected) <= 1.0e-12 * expected


def test_c04_bubble_dew_duality(criterion, hexane_antoine, ethanol_antoine):
    with criterion("C4 dew re-solve reproduces every bubble point to 1e-6, 20 systems, <30 s"):
        rng = random.Random(SEED)
        grid = [i / 100 for i in range(101)]
        t0 = time.perf_counter()
        for k in range(20):
            params = NrtlParameterSet.three_parameter(
                rng.uniform(0.2, 0.8), rng.uniform(0.2, 0.8), rng.uniform(0.25, 0.45)
            )
            system = BinarySystem(hexane_antoine, ethanol_antoine, NrtlModel(params))
            if k < 10:
                for x in grid:
                    bp = bubble_point_isothermal(system, 400.0, x)
                    dp = dew_point_isothermal(system, 400.0, bp.y1)
                    assert abs(dp.x1 - x) <= 1.0e-6
                    assert abs(dp.p - bp.p) <= 1.0e-6 * bp.p
            else:
                for x in grid:
                    bp = bubble_point_isobaric(system, 300000.0, x)
                    dp = dew_point_isobaric(system, 300000.0, bp.y1)
                    assert abs(dp.x1 - x) <= 1.0e-6
                    assert abs(dp.T - bp.T) <= 1.0e-6
        elapsed = time.perf_counter() - t0
        assert elapsed < 30.0, f"took {elapsed:.2f} s"


def test_c05_offset_target_prefactor_identity(criterion):
    with criterion("C5 flat-offset targets give loss == delta^2 exactly"):
        params = NrtlParameterSet.three_parameter(0.0, 0.0, 0.3)
        grid = build_fit_grid(3, T=350.0)
        n = grid.n_compositions
        for delta in (0.1, 0.5, 1.0):
            target = SimpleNamespace(
                T=350.0,
                x1=grid.compositions,
                ln_gamma1=(delta,) * n,
                ln_gamma2=(delta,) * n,
            )
            loss = evaluate_loss(params, (target,), grid)
            assert loss == delta * delta, f"delta {delta}: loss {loss!r}"


def test_c06_fit_self_consistency(criterion):
    with criterion("C6 self-fits: 3-param loss <= 1e-12 in 8 starts; 6/10-param <= 1e-10"):
        rng = random.Random(SEED)
        grid3 = build_fit_grid(3, T=340.0)
        for _ in range(20):
            truth = NrtlModel(
                NrtlParameterSet.three_parameter(
                    rng.uniform(-1.2, 1.2), rng.uniform(-1.2, 1.2), rng.uniform(0.25, 0.5)
                )
            )
            res = fit_nrtl(target_curves_from_model(truth, grid3), grid3)
            assert res.n_starts == 8
            assert res.loss <= 1.0e-12, f"loss {res.loss:.3e}"
        truth6 = NrtlModel(
            NrtlParameterSet(a12=0.3, a21=-0.2, b12=120.0, b21=-80.0, c12=0.35, variant=6)
        )
        grid6 = build_fit_grid(6, T_range=(310.0, 390.0))
        assert fit_nrtl(target_curves_from_model(truth6, grid6), grid6).loss <= 1.0e-10
        truth10 = NrtlModel(
            NrtlParameterSet(
                a12=0.3, a21=-0.2, b12=120.0, b21=-80.0, e12=0.02, e21=-0.05,
                f12=0.0005, f21=-0.0002, c12=0.35, d12=0.001, variant=10,
            )
        )
        grid10 = build_fit_grid(10, T_range=(310.0, 390.0))
        assert fit_nrtl(target_curves_from_model(truth10, grid10), grid10).loss <= 1.0e-10


def test_c07_grid_contracts(criterion, surrogate_system):
    with criterion("C7 grids: curves and VLE lines 101 points; 6/10 fits N=21, J=5"):
        curve = activity_curve(surrogate_system.activity, 400.0)
        assert len(curve) == 101
        diagram = build_diagram(surrogate_system, StateSpec.isothermal(400.0))
        assert len(diagram.bubble) == 101
        assert len(diagram.dew) == 101
        g3 = build_fit_grid(3, T=340.0)
        assert g3.n_compositions == 101 and g3.n_temperatures == 1
        for variant in (6, 10):
            g = build_fit_grid(variant, T_range=(300.0, 400.0))
            assert g.n_compositions == 21
            assert g.n_temperatures == 5


def test_c08_consistency_gate_fault_injection(criterion, surrogate_system):
    with criterion("C8 each injected fault trips its named check and withholds the diagram"):
        state = StateSpec.isothermal(400.0)
        clean = build_diagram(surrogate_system, state)
        monotone_system = BinarySystem(
            antoine_bar(HEXANE_ANTOINE),
            antoine_bar(BENZENE_ANTOINE),
            NrtlModel(NrtlParameterSet.three_parameter(0.1, 0.1, 0.3)),
        )
        monotone = build_diagram(monotone_system, state)

        # pure ends stop merging
        bad = dataclasses.replace(
            clean, dew=_swap_point(clean.dew, 0, p=clean.dew[0].p * (1.0 - 1.0e-6))
        )
        report = _expect_withheld(bad)
        assert not report.merge_at_pure.ok
        assert report.slope_sign_agreement.ok and report.ordering.ok
        assert report.azeotrope_coincidence.ok

        # bubble falls below dew in one interior cell
        bad = dataclasses.replace(
            clean, dew=_swap_point(clean.dew, 43, p=clean.bubble[43].p * (1.0 + 1.0e-6))
        )
        report = _expect_withheld(bad)
        assert not report.ordering.ok
        assert report.merge_at_pure.ok and report.slope_sign_agreement.ok

        # slope direction flips without a recorded azeotrope
        rise = abs(monotone.bubble[51].p - monotone.bubble[49].p)
        bad = dataclasses.replace(
            monotone,
            bubble=_swap_point(monotone.bubble, 50, p=monotone.bubble[50].p + 2.0 * rise),
        )
        report = _expect_withheld(bad)
        assert not report.slope_sign_agreement.ok
        assert report.ordering.ok

        # azeotrope record stops coinciding with the diagonal
        az = clean.azeotropes[0]
        bad = dataclasses.replace(
            clean, azeotropes=(dataclasses.replace(az, y1=az.y1 + 2.0e-6),)
        )
        report = _expect_withheld(bad)
        assert not report.azeotrope_coincidence.ok
        assert report.merge_at_pure.ok and report.ordering.ok


def _expect_withheld(diagram):
    with pytest.raises(ConsistencyViolation) as e:
        ensure_consistent(diagram)
    return e.value.report


def test_c09_azeotrope_localization(criterion, ethanol_antoine, surrogate_system):
    with criterion("C9 azeotropes: symmetric at 0.5 +- 1e-8; surrogate within 1e-6 of scan"):
        symmetric = BinarySystem(
            ethanol_antoine,
            ethanol_antoine,
            NrtlModel(NrtlParameterSet.three_parameter(0.7, 0.7, 0.35)),
        )
        state = StateSpec.isothermal(400.0)
        found = detect_azeotropes(symmetric, state)
        assert len(found) == 1
        assert abs(found[0].x1 - 0.5) <= 1.0e-8
        assert abs(found[0].y1 - found[0].x1) <= 1.0e-8

        found = detect_azeotropes(surrogate_system, state)
        assert len(found) == 1

        def diagonal_gap(x):
            return bubble_point_isothermal(surrogate_system, 400.0, x).y1 - x

        # brute-force scan at 1e-5 spacing: bracket the sign change coarsely
        # first, then walk the aligned fine grid across that bracket
        coarse = [k / 1000 for k in range(1, 1000)]
        cell = next(
            x for x, nxt in zip(coarse, coarse[1:])
            if diagonal_gap(x) > 0.0 >= diagonal_gap(nxt)
        )
        k_lo, k_hi = int(round((cell - 0.002) * 1e5)), int(round((cell + 0.003) * 1e5))
        reference = None
        prev_k, prev_f = k_lo, diagonal_gap(k_lo * 1.0e-5)
        for k in range(k_lo + 1, k_hi + 1):
            f = diagonal_gap(k * 1.0e-5)
            if prev_f > 0.0 >= f:
                x0, x1 = prev_k * 1.0e-5, k * 1.0e-5
                reference = x0 + (x1 - x0) * prev_f / (prev_f - f)
                break
            prev_k, prev_f = k, f
        assert reference is not None
        assert abs(found[0].x1 - reference) <= 1.0e-6


def test_c10_figure_shape(criterion, surrogate_system, hexane_antoine, ethanol_antoine):
    with criterion("C10 positive-deviation p-x-y: one bubble maximum, merged ends, one crossing"):
        diagram = build_diagram(surrogate_system, StateSpec.isothermal(400.0))
        assert len(diagram.azeotropes) == 1

        pressures = [pt.p for pt in diagram.bubble]
        peak = pressures.index(max(pressures))
        assert 0 < peak < 100
        assert all(a < b for a, b in zip(pressures[: peak + 1], pressures[1 : peak + 1]))
        assert all(a > b for a, b in zip(pressures[peak:], pressures[peak + 1 :]))
        assert max(pressures) > vapor_pressure(hexane_antoine, 400.0)
        assert max(pressures) > vapor_pressure(ethanol_antoine, 400.0)

        for i in (0, 100):
            assert abs(diagram.bubble[i].p - diagram.dew[i].p) <= 1.0e-9 * diagram.bubble[i].p

        gaps = [pt.y1 - pt.x1 for pt in diagram.bubble[1:-1]]
        flips = sum(
            1 for a, b in zip(gaps, gaps[1:]) if a > 0.0 >= b or a < 0.0 <= b
        )
        assert flips == 1


def test_c11_smiles_corpus(criterion, registry):
    with criterion("C11 corpus parses, canonicalizes idempotently, fragments as expected"):
        corpus = ("CCCCCC", "CCO", "Oc1ccccc1", "CCCc1ccccc1N")
        for s in corpus:
            canonical = canonical_smiles(parse_smiles(s))
            assert canonical_smiles(parse_smiles(canonical)) == canonical

        names = {p.gid: p.name for p in registry.group_patterns}
        hexane = register_component("CCCCCC", registry)
        counts = {names[g]: n for g, n in hexane.group_counts().items()}
        assert counts == {"CH3": 2, "CH2": 4}
        ethanol = register_component("CCO", registry)
        counts = {names[g]: n for g, n in ethanol.group_counts().items()}
        assert counts == {"CH3": 1, "CH2": 1, "OH": 1}


def test_c12_primary_stands_alone(criterion):
    with criterion("C12 engine imports and runs with no web client present"):
        import vlekit

        for info in pkgutil.walk_packages(vlekit.__path__, prefix="vlekit."):
            importlib.import_module(info.name)
        foreign = [
            m for m in sys.modules
            if m == "frontend" or m.startswith("frontend.")
        ]
        assert foreign == []
        # and the suite's own dependencies stay server-side
        assert "nodejs" not in sys.modules
