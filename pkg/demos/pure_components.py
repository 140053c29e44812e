#!/usr/bin/env python3
"""
Pure-component property walk-through
====================================

Parse a few species from SMILES, look at their canonical forms and
structural groups, then tabulate vapor pressures and boiling points
from the bundled Antoine table.
"""

from vlekit.antoine import boiling_temperature, range_check, vapor_pressure
from vlekit.api.config import demo_registry
from vlekit.core import register_component, resolve_antoine

registry = demo_registry()

# ----------------------------------------------------------------------
# SMILES in, canonical form and structural groups out.  Spelling does not
# matter: OCC and CCO are the same molecule and land on the same record.

species = ["OCC", "CCCCCC", "Oc1ccccc1", "CCCc1ccccc1N", "O"]

print("input            canonical        groups")
for s in species:
    comp = register_component(s, registry)
    names = {p.gid: p.name for p in registry.group_patterns}
    groups = comp.group_counts()
    shown = (
        " + ".join(f"{n}x{names[g]}" for g, n in sorted(groups.items()))
        if groups
        else "(none)"
    )
    print(f"{s:<16} {comp.canonical_smiles:<16} {shown}")

# ----------------------------------------------------------------------
# Vapor pressure of ethanol across its fitted range.  The correlation
# answers outside the range too, but flags the extrapolation.

ethanol = register_component("CCO", registry)
params = resolve_antoine(ethanol, registry)

print("\nethanol vapor pressure")
print("T/K      p/kPa      notes")
for T in (270.0, 300.0, 330.0, 350.0, 366.0):
    p = vapor_pressure(params, T)
    warnings = range_check(params, T)
    note = "; ".join(w.code for w in warnings) or "ok"
    print(f"{T:<8.1f} {p / 1e3:<10.3f} {note}")

# ----------------------------------------------------------------------
# The inverse direction: at what temperature does each species reach
# atmospheric pressure?  Water should land a hair above 373.15 K with
# this table.

print("\nnormal boiling points at 101325 Pa")
for s in ("O", "CCO", "CCCCCC"):
    comp = register_component(s, registry)
    T = boiling_temperature(resolve_antoine(comp, registry), 101325.0)
    print(f"{comp.canonical_smiles:<10} {T:9.3f} K")
