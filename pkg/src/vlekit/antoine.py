"""Antoine vapor pressure correlation.

Parameters are stored on a log10(p/Pa) basis regardless of the unit they
were declared in; ``from_declared`` applies the exact base-10 offset
(+5 for bar, +3 for kPa), so evaluation always yields pascal directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NonPhysical, SingularPressure, SingularTemperature

PRESSURE_UNITS = {"Pa": 1.0, "kPa": 1.0e3, "bar": 1.0e5}

EXTRAPOLATED_TEMPERATURE = "extrapolated_temperature"
LOW_PRESSURE_REGIME = "low_pressure_regime"

LOW_PRESSURE_THRESHOLD_PA = 1000.0


@dataclass(frozen=True)
class RangeWarning:
    code: str
    message: str


@dataclass(frozen=True)
class AntoineParameterSet:
    """Coefficients of log10(p/Pa) = A - B/(T + C), valid on [t_min, t_max]."""

    A: float
    B: float
    C: float
    t_min: float
    t_max: float
    declared_unit: str = "Pa"

    def __post_init__(self):
        for name in ("A", "B", "C", "t_min", "t_max"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"Antoine coefficient {name} must be finite, got {v!r}")
        if not self.t_min < self.t_max:
            raise ValueError(
                f"Antoine validity range requires t_min < t_max, got [{self.t_min}, {self.t_max}]"
            )
        if self.declared_unit not in PRESSURE_UNITS:
            raise ValueError(f"unknown pressure unit {self.declared_unit!r}")

    @classmethod
    def from_declared(
        cls, A: float, B: float, C: float, t_min: float, t_max: float, unit: str
    ) -> "AntoineParameterSet":
        """Build a set from coefficients declared on a bar/kPa/Pa basis."""
        if unit not in PRESSURE_UNITS:
            raise ValueError(f"unknown pressure unit {unit!r}")
        return cls(A + math.log10(PRESSURE_UNITS[unit]), B, C, t_min, t_max, unit)


def vapor_pressure(params: AntoineParameterSet, T: float) -> float:
    """Saturation pressure in Pa at temperature ``T`` in K."""
    if T <= 0.0:
        raise NonPhysical(f"temperature must be positive, got {T} K")
    denom = T + params.C
    if denom == 0.0:
        raise SingularTemperature(
            f"T + C = 0 at T = {T} K (C = {params.C}); the correlation is singular here"
        )
    return 10.0 ** (params.A - params.B / denom)


def boiling_temperature(params: AntoineParameterSet, p: float) -> float:
    """Invert the correlation: temperature in K at pressure ``p`` in Pa."""
    if p <= 0.0:
        raise NonPhysical(f"pressure must be positive, got {p} Pa")
    denom = params.A - math.log10(p)
    if denom == 0.0:
        raise SingularPressure(
            f"A - log10(p) = 0 at p = {p} Pa; the inversion is singular here"
        )
    return params.B / denom - params.C


def range_check(params: AntoineParameterSet, T: float) -> tuple[RangeWarning, ...]:
    """Non-fatal flags for a vapor pressure evaluation at ``T``.

    Extrapolation outside the declared validity range and results in the
    low-pressure regime (below 1 kPa) both degrade accuracy without
    invalidating the number, so they are surfaced as warnings rather than
    errors.
    """
    flags = []
    if T < params.t_min or T > params.t_max:
        flags.append(
            RangeWarning(
                EXTRAPOLATED_TEMPERATURE,
                f"T = {T} K lies outside the validity range "
                f"[{params.t_min}, {params.t_max}] K",
            )
        )
    p = vapor_pressure(params, T)
    if p < LOW_PRESSURE_THRESHOLD_PA:
        flags.append(
            RangeWarning(
                LOW_PRESSURE_REGIME,
                f"vapor pressure {p:.6g} Pa is below {LOW_PRESSURE_THRESHOLD_PA:.0f} Pa; "
                "the correlation loses accuracy in this regime",
            )
        )
    return tuple(flags)
