#!/usr/bin/env python3
"""
Bubble and dew lines with the consistency gate
==============================================

Build a positive-deviation isothermal diagram and a maximum-boiling
isobaric one, report their azeotropes, and show what the consistency
battery checks before a diagram is released.  Both tables are written
next to this script as CSV.
"""

from pathlib import Path

from vlekit.api.config import demo_registry
from vlekit.core import StateSpec, register_component
from vlekit.export import export_csv
from vlekit.vle import BinarySystem, build_diagram

registry = demo_registry()
out_dir = Path(__file__).resolve().parent

# ----------------------------------------------------------------------
# Hexane/ethanol at 400 K with the demonstration NRTL parameters: strong
# positive deviation, so the bubble line climbs above both pure vapor
# pressures and the mixture shows a pressure-maximum azeotrope.

hexane = register_component("CCCCCC", registry)
ethanol = register_component("CCO", registry)
system = BinarySystem.from_components(hexane, ethanol, "nrtl-demo", registry)
diagram = build_diagram(system, StateSpec.isothermal(400.0))

print("hexane(1) / ethanol(2), isothermal 400 K")
print(f"  pure ethanol  p = {diagram.bubble[0].p / 1e5:.4f} bar")
print(f"  pure hexane   p = {diagram.bubble[-1].p / 1e5:.4f} bar")
for az in diagram.azeotropes:
    print(
        f"  azeotrope at x1 = y1 = {az.x1:.6f}, p = {az.p / 1e5:.4f} bar, "
        f"gamma = ({az.gamma1:.4f}, {az.gamma2:.4f})"
    )

report = diagram.consistency
print("  consistency:")
for check in ("merge_at_pure", "slope_sign_agreement", "ordering", "azeotrope_coincidence"):
    print(f"    {check:<24} {getattr(report, check).verdict}")

path = out_dir / "hexane_ethanol_400K.csv"
path.write_text(export_csv(diagram))
print(f"  wrote {path.name}")

# ----------------------------------------------------------------------
# Phenol/2-propylaniline at 0.6 bar: negative deviation strong enough
# for a temperature-maximum azeotrope, the classic shape for this pair.

phenol = register_component("Oc1ccccc1", registry)
aniline_pr = register_component("CCCc1ccccc1N", registry)
system = BinarySystem.from_components(phenol, aniline_pr, "nrtl", registry)
diagram = build_diagram(system, StateSpec.isobaric(60000.0))

print("\nphenol(1) / 2-propylaniline(2), isobaric 0.6 bar")
print(f"  pure 2-propylaniline boils at {diagram.bubble[0].T:.3f} K")
print(f"  pure phenol boils at          {diagram.bubble[-1].T:.3f} K")
for az in diagram.azeotropes:
    print(f"  azeotrope at x1 = y1 = {az.x1:.6f}, T = {az.T:.3f} K (maximum boiling)")

path = out_dir / "phenol_propylaniline_0p6bar.csv"
path.write_text(export_csv(diagram))
print(f"  wrote {path.name}")

# ----------------------------------------------------------------------
# The gate is not decorative.  Corrupt one dew point by a part per
# million and the diagram no longer leaves the kitchen.

import dataclasses

from vlekit.errors import ConsistencyViolation
from vlekit.vle import ensure_consistent

good = build_diagram(
    BinarySystem.from_components(hexane, ethanol, "nrtl-demo", registry),
    StateSpec.isothermal(400.0),
)
dew = list(good.dew)
dew[0] = dataclasses.replace(dew[0], p=dew[0].p * (1.0 - 1.0e-6))
corrupted = dataclasses.replace(good, dew=tuple(dew))

print("\ntampering with one dew point by 1 ppm:")
try:
    ensure_consistent(corrupted)
except ConsistencyViolation as exc:
    print(f"  rejected: {exc}")
