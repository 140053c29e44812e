"""NRTL activity coefficients for binary mixtures.

Temperature dependence follows the extended form

    tau_ij  = a_ij + b_ij/T + e_ij*ln(T) + f_ij*T
    alpha   = c12 + d12*(T - 273.15)
    G_ij    = exp(-alpha*tau_ij)

with three named truncations: the 3-parameter form (a12, a21, c12), the
6-parameter form (adds b12, b21, d12), and the full 10-parameter form.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from ..errors import AlphaOutOfRange, ConfigError, InvalidSmiles, NotCovered
from ..chem import canonical_smiles

VARIANTS = (3, 6, 10)

# coefficients that must stay zero in each truncated variant
_FROZEN = {
    3: ("b12", "b21", "e12", "e21", "f12", "f21", "d12"),
    6: ("e12", "e21", "f12", "f21"),
    10: (),
}

FREE_COEFFICIENTS = {
    3: ("a12", "a21", "c12"),
    6: ("a12", "a21", "b12", "b21", "c12", "d12"),
    10: ("a12", "a21", "b12", "b21", "e12", "e21", "f12", "f21", "c12", "d12"),
}

COEFFICIENT_ORDER = ("a12", "a21", "b12", "b21", "e12", "e21", "f12", "f21", "c12", "d12")


@dataclass(frozen=True)
class NrtlParameterSet:
    a12: float = 0.0
    a21: float = 0.0
    b12: float = 0.0
    b21: float = 0.0
    e12: float = 0.0
    e21: float = 0.0
    f12: float = 0.0
    f21: float = 0.0
    c12: float = 0.3
    d12: float = 0.0
    variant: int = 10

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"NRTL variant must be one of {VARIANTS}, got {self.variant}")
        for coeff in _FROZEN[self.variant]:
            if getattr(self, coeff) != 0.0:
                raise ValueError(
                    f"coefficient {coeff} must be zero in the {self.variant}-parameter variant"
                )
        for coeff in COEFFICIENT_ORDER:
            if not math.isfinite(getattr(self, coeff)):
                raise ValueError(f"coefficient {coeff} must be finite")

    @classmethod
    def three_parameter(cls, tau12: float, tau21: float, alpha: float) -> "NrtlParameterSet":
        """Temperature-independent parameters: tau from a, alpha from c12."""
        return cls(a12=tau12, a21=tau21, c12=alpha, variant=3)

    def swapped(self) -> "NrtlParameterSet":
        """The same pair with component indices 1 and 2 exchanged."""
        return NrtlParameterSet(
            a12=self.a21, a21=self.a12,
            b12=self.b21, b21=self.b12,
            e12=self.e21, e21=self.e12,
            f12=self.f21, f21=self.f12,
            c12=self.c12, d12=self.d12,
            variant=self.variant,
        )


def nrtl_tau_alpha(params: NrtlParameterSet, T: float):
    """tau12, tau21, alpha, G12, G21 at temperature ``T`` in K.

    The randomness parameter must lie strictly inside (0, 2); values on or
    outside the boundary make G degenerate, so they are rejected.
    """
    if T <= 0.0:
        raise ValueError(f"temperature must be positive, got {T} K")
    lnT = math.log(T)
    tau12 = params.a12 + params.b12 / T + params.e12 * lnT + params.f12 * T
    tau21 = params.a21 + params.b21 / T + params.e21 * lnT + params.f21 * T
    alpha = params.c12 + params.d12 * (T - 273.15)
    if not 0.0 < alpha < 2.0:
        raise AlphaOutOfRange(
            f"alpha = {alpha:.6g} at T = {T} K lies outside the open interval (0, 2)"
        )
    G12 = math.exp(-alpha * tau12)
    G21 = math.exp(-alpha * tau21)
    return tau12, tau21, alpha, G12, G21


def ln_gamma_from_tau(tau12, tau21, G12, G21, x1):
    """Binary NRTL working equations; accepts scalars or numpy arrays."""
    x2 = 1.0 - x1
    t21 = G21 / (x1 + x2 * G21)
    t12 = G12 / (x2 + x1 * G12)
    ln_g1 = x2 * x2 * (tau21 * t21 * t21 + tau12 * G12 / ((x2 + x1 * G12) ** 2))
    ln_g2 = x1 * x1 * (tau12 * t12 * t12 + tau21 * G21 / ((x1 + x2 * G21) ** 2))
    return ln_g1, ln_g2


def nrtl_ln_gamma(params: NrtlParameterSet, x1: float, T: float):
    """ln gamma1, ln gamma2 at liquid mole fraction ``x1`` and ``T`` in K."""
    if not 0.0 <= x1 <= 1.0:
        raise ValueError(f"x1 must lie in [0, 1], got {x1}")
    tau12, tau21, _, G12, G21 = nrtl_tau_alpha(params, T)
    return ln_gamma_from_tau(tau12, tau21, G12, G21, x1)


def nrtl_infinite_dilution(params: NrtlParameterSet, T: float):
    """ln gamma1 at x1 -> 0 and ln gamma2 at x2 -> 0, in closed form."""
    tau12, tau21, alpha, G12, G21 = nrtl_tau_alpha(params, T)
    ln_g1_inf = tau21 + tau12 * math.exp(-alpha * tau12)
    ln_g2_inf = tau12 + tau21 * math.exp(-alpha * tau21)
    return ln_g1_inf, ln_g2_inf


class NrtlModel:
    """Activity model wrapper around one parameter set."""

    def __init__(self, params: NrtlParameterSet, name: str = "nrtl"):
        self.params = params
        self.name = name

    def ln_gamma(self, x1: float, T: float):
        return nrtl_ln_gamma(self.params, x1, T)


class NrtlPairStore:
    """CSV-backed binary NRTL parameters keyed by canonical SMILES pairs.

    Expected header:
    smiles1,smiles2,variant,a12,a21,b12,b21,e12,e21,f12,f21,c12,d12

    Lookup is symmetric: asking for (B, A) returns the stored (A, B) set
    with the indices swapped.
    """

    REQUIRED = ("smiles1", "smiles2", "variant") + COEFFICIENT_ORDER

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._table: dict[tuple[str, str], NrtlParameterSet] = {}
        try:
            with open(self.path, newline="") as fh:
                reader = csv.DictReader(fh)
                header = reader.fieldnames or []
                missing = [c for c in self.REQUIRED if c not in header]
                if missing:
                    raise ConfigError(f"{self.path}: missing column(s) {', '.join(missing)}")
                for ln, row in enumerate(reader, start=2):
                    try:
                        key = (
                            canonical_smiles(row["smiles1"].strip()),
                            canonical_smiles(row["smiles2"].strip()),
                        )
                        params = NrtlParameterSet(
                            variant=int(row["variant"]),
                            **{c: float(row[c]) for c in COEFFICIENT_ORDER},
                        )
                    except (ValueError, InvalidSmiles) as exc:
                        raise ConfigError(f"{self.path}:{ln}: {exc}") from exc
                    self._table[key] = params
        except OSError as exc:
            raise ConfigError(f"cannot read NRTL pair table {self.path}: {exc}") from exc

    def lookup(self, canonical1: str, canonical2: str) -> NrtlParameterSet:
        params = self._table.get((canonical1, canonical2))
        if params is not None:
            return params
        swapped = self._table.get((canonical2, canonical1))
        if swapped is not None:
            return swapped.swapped()
        raise NotCovered(
            f"no NRTL parameters on file for the pair {canonical1} / {canonical2}"
        )

    def pairs(self) -> Iterable[tuple[str, str]]:
        return list(self._table)
