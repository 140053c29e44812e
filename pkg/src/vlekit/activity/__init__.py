"""Activity coefficient models and the shared curve type."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol, runtime_checkable

from ..errors import VlekitError

ENDPOINT_TOL = 1.0e-10


@runtime_checkable
class ActivityModel(Protocol):
    name: str

    def ln_gamma(self, x1: float, T: float) -> tuple[float, float]: ...


class IdealModel:
    """Raoult baseline: both activity coefficients are unity everywhere."""

    name = "ideal"

    def ln_gamma(self, x1: float, T: float) -> tuple[float, float]:
        if not 0.0 <= x1 <= 1.0:
            raise ValueError(f"x1 must lie in [0, 1], got {x1}")
        return 0.0, 0.0


def ln_gamma(model: ActivityModel, x1: float, T: float) -> tuple[float, float]:
    """Evaluate one composition point after validating the inputs."""
    if not 0.0 <= x1 <= 1.0:
        raise ValueError(f"x1 must lie in [0, 1], got {x1}")
    if T <= 0.0:
        raise ValueError(f"temperature must be positive, got {T} K")
    return model.ln_gamma(x1, T)


@dataclass(frozen=True)
class ActivityCurve:
    """ln gamma for both components over a closed [0, 1] composition grid."""

    T: float
    x1: tuple[float, ...]
    ln_gamma1: tuple[float, ...]
    ln_gamma2: tuple[float, ...]
    model_name: str

    def __post_init__(self):
        n = len(self.x1)
        if n < 2 or len(self.ln_gamma1) != n or len(self.ln_gamma2) != n:
            raise ValueError("curve arrays must share one length of at least 2")
        if self.x1[0] != 0.0 or self.x1[-1] != 1.0:
            raise ValueError("composition grid must span [0, 1] inclusive")
        for a, b in zip(self.x1, self.x1[1:]):
            if not a < b:
                raise ValueError("composition grid must be strictly increasing")
        if abs(self.ln_gamma1[-1]) > ENDPOINT_TOL or abs(self.ln_gamma2[0]) > ENDPOINT_TOL:
            raise ValueError(
                "pure-component normalization violated: ln gamma must vanish "
                "for the component approaching mole fraction 1"
            )

    def __len__(self) -> int:
        return len(self.x1)


def activity_curve(model: ActivityModel, T: float, dx: float = 0.01) -> ActivityCurve:
    """Evaluate ``model`` on the uniform grid 0, dx, ..., 1.

    ``dx`` must divide the unit interval evenly.  Model errors are re-raised
    unchanged in type but annotated with the composition that failed.
    """
    if T <= 0.0:
        raise ValueError(f"temperature must be positive, got {T} K")
    if not 0.0 < dx <= 1.0:
        raise ValueError(f"dx must lie in (0, 1], got {dx}")
    steps = round(1.0 / dx)
    if steps < 1 or abs(steps * dx - 1.0) > 1.0e-9:
        raise ValueError(f"dx = {dx} does not evenly divide [0, 1]")
    grid = tuple(i / steps for i in range(steps + 1))

    g1, g2 = [], []
    for x in grid:
        try:
            a, b = model.ln_gamma(x, T)
        except VlekitError as exc:
            exc.args = (f"{exc.args[0]} (while evaluating x1 = {x:g})",) + exc.args[1:]
            raise
        g1.append(float(a))
        g2.append(float(b))
    return ActivityCurve(T, grid, tuple(g1), tuple(g2), model.name)
