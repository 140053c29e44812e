"""UNIFAC group-contribution activity coefficients, original and modified.

The combinatorial part is Staverman-Guggenheim with z = 10; the modified
(Dortmund) variant swaps the first volume ratio for the 3/4-power form and
uses temperature-dependent interaction coefficients a + b*T + c*T^2 in the
group-energy term.  The residual part is the usual solution-of-groups
construction.  Interactions are directional and keyed by main group; a
missing pair is a hard gap and is never silently treated as zero.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

from ..chem import GroupPattern
from ..errors import ConfigError, MissingGroupData, ParameterGap

ORIGINAL = "original"
MODIFIED = "modified"


@dataclass(frozen=True)
class UnifacGroup:
    gid: int
    name: str
    main: int
    R: float
    Q: float


@dataclass
class UnifacParameterTable:
    variant: str
    groups: dict[int, UnifacGroup]
    interactions: dict[tuple[int, int], tuple[float, ...]]

    def __post_init__(self):
        if self.variant not in (ORIGINAL, MODIFIED):
            raise ValueError(f"unknown UNIFAC variant {self.variant!r}")

    def psi(self, main_m: int, main_n: int, T: float) -> float:
        """Group interaction factor between two main groups."""
        if main_m == main_n:
            return 1.0
        coeffs = self.interactions.get((main_m, main_n))
        if coeffs is None:
            raise ParameterGap(
                f"no {self.variant} interaction parameters for main groups "
                f"({main_m}, {main_n})",
                pair=(main_m, main_n),
            )
        if self.variant == ORIGINAL:
            return math.exp(-coeffs[0] / T)
        a, b, c = coeffs
        return math.exp(-(a + b * T + c * T * T) / T)

    def require_coverage(self, gids) -> None:
        """Raise ParameterGap for the first missing directional main pair."""
        mains = sorted({self._group(g).main for g in gids})
        for m in mains:
            for n in mains:
                if m != n and (m, n) not in self.interactions:
                    raise ParameterGap(
                        f"no {self.variant} interaction parameters for main groups ({m}, {n})",
                        pair=(m, n),
                    )

    def _group(self, gid: int) -> UnifacGroup:
        g = self.groups.get(gid)
        if g is None:
            raise MissingGroupData(f"group id {gid} is not in the {self.variant} table")
        return g


def molecule_rq(groups: dict[int, int], table: UnifacParameterTable) -> tuple[float, float]:
    """Van der Waals volume and surface sums for one molecule."""
    if not groups:
        raise MissingGroupData("empty group multiset")
    r = 0.0
    q = 0.0
    for gid, count in sorted(groups.items()):
        if count <= 0:
            raise ValueError(f"group count for id {gid} must be positive, got {count}")
        g = table._group(gid)
        r += count * g.R
        q += count * g.Q
    return r, q


def unifac_combinatorial(
    groups1: dict[int, int],
    groups2: dict[int, int],
    table: UnifacParameterTable,
    x1: float,
) -> tuple[float, float]:
    """Size/shape contribution ln gamma^C for both components."""
    if not 0.0 <= x1 <= 1.0:
        raise ValueError(f"x1 must lie in [0, 1], got {x1}")
    x2 = 1.0 - x1
    r1, q1 = molecule_rq(groups1, table)
    r2, q2 = molecule_rq(groups2, table)

    rsum = r1 * x1 + r2 * x2
    qsum = q1 * x1 + q2 * x2
    V1, V2 = r1 / rsum, r2 / rsum
    F1, F2 = q1 / qsum, q2 / qsum

    if table.variant == MODIFIED:
        p1, p2 = r1 ** 0.75, r2 ** 0.75
        psum = p1 * x1 + p2 * x2
        W1, W2 = p1 / psum, p2 / psum
    else:
        W1, W2 = V1, V2

    ln_c1 = 1.0 - W1 + math.log(W1) - 5.0 * q1 * (1.0 - V1 / F1 + math.log(V1 / F1))
    ln_c2 = 1.0 - W2 + math.log(W2) - 5.0 * q2 * (1.0 - V2 / F2 + math.log(V2 / F2))
    return ln_c1, ln_c2


def _ln_Gamma(
    fractions: list[tuple[int, float]], table: UnifacParameterTable, T: float
) -> dict[int, float]:
    """Group residual contributions ln Gamma_k for one phase composition.

    ``fractions`` holds (gid, mole fraction of group) in a fixed order so
    that identical inputs sum in the identical order.
    """
    total_q = 0.0
    for gid, X in fractions:
        total_q += table._group(gid).Q * X
    theta = [(gid, table._group(gid).Q * X / total_q) for gid, X in fractions]

    # denominators S_m = sum_n theta_n psi(n, m), shared by every k
    S: dict[int, float] = {}
    for gid_m, _ in fractions:
        main_m = table._group(gid_m).main
        s = 0.0
        for gid_n, th_n in theta:
            s += th_n * table.psi(table._group(gid_n).main, main_m, T)
        S[gid_m] = s

    out: dict[int, float] = {}
    for gid_k, _ in fractions:
        gk = table._group(gid_k)
        second = 0.0
        for gid_m, th_m in theta:
            main_m = table._group(gid_m).main
            second += th_m * table.psi(gk.main, main_m, T) / S[gid_m]
        out[gid_k] = gk.Q * (1.0 - math.log(S[gid_k]) - second)
    return out


def unifac_residual(
    groups1: dict[int, int],
    groups2: dict[int, int],
    table: UnifacParameterTable,
    x1: float,
    T: float,
) -> tuple[float, float]:
    """Energetic contribution ln gamma^R via solution of groups.

    At x1 = 0 or x1 = 1 the mixture collapses onto the pure-component
    composition term by term, so the surviving component's value is exactly
    zero in floating point, not merely close to it.
    """
    if not 0.0 <= x1 <= 1.0:
        raise ValueError(f"x1 must lie in [0, 1], got {x1}")
    if T <= 0.0:
        raise ValueError(f"temperature must be positive, got {T} K")
    x2 = 1.0 - x1

    union = sorted(set(groups1) | set(groups2))
    table.require_coverage(union)

    def pure_fractions(groups: dict[int, int]) -> list[tuple[int, float]]:
        total = float(sum(groups.values()))
        return [(gid, groups.get(gid, 0) / total) for gid in union]

    total_mix = (sum(groups1.values())) * x1 + (sum(groups2.values())) * x2
    mix = [
        (gid, (groups1.get(gid, 0) * x1 + groups2.get(gid, 0) * x2) / total_mix)
        for gid in union
    ]

    ln_G_mix = _ln_Gamma(mix, table, T)
    ln_G_1 = _ln_Gamma(pure_fractions(groups1), table, T)
    ln_G_2 = _ln_Gamma(pure_fractions(groups2), table, T)

    r1 = 0.0
    for gid, count in sorted(groups1.items()):
        r1 += count * (ln_G_mix[gid] - ln_G_1[gid])
    r2 = 0.0
    for gid, count in sorted(groups2.items()):
        r2 += count * (ln_G_mix[gid] - ln_G_2[gid])
    return r1, r2


class UnifacModel:
    """Predictive activity model for one decomposed binary pair."""

    def __init__(
        self,
        groups1: dict[int, int],
        groups2: dict[int, int],
        table: UnifacParameterTable,
        name: str | None = None,
    ):
        if not groups1 or not groups2:
            raise MissingGroupData("both components need a non-empty group multiset")
        self.groups1 = dict(sorted(groups1.items()))
        self.groups2 = dict(sorted(groups2.items()))
        self.table = table
        self.name = name or ("unifac" if table.variant == ORIGINAL else "unifac-modified")
        for gid in list(self.groups1) + list(self.groups2):
            table._group(gid)  # raises MissingGroupData on unknown ids
        table.require_coverage(set(self.groups1) | set(self.groups2))

    def ln_gamma(self, x1: float, T: float):
        c1, c2 = unifac_combinatorial(self.groups1, self.groups2, self.table, x1)
        r1, r2 = unifac_residual(self.groups1, self.groups2, self.table, x1, T)
        return c1 + r1, c2 + r2


def load_unifac_tables(
    groups_csv: str | Path, interactions_csv: str | Path, variant: str
) -> tuple[UnifacParameterTable, list[GroupPattern]]:
    """Read a group table and its interaction matrix from CSV files.

    groups.csv: id,name,main,R,Q,pattern,priority
    interactions.csv: main_m,main_n,a (original) or main_m,main_n,a,b,c (modified)
    """
    groups: dict[int, UnifacGroup] = {}
    patterns: list[GroupPattern] = []
    gpath = Path(groups_csv)
    try:
        with open(gpath, newline="") as fh:
            reader = csv.DictReader(fh)
            needed = ("id", "name", "main", "R", "Q", "pattern", "priority")
            missing = [c for c in needed if c not in (reader.fieldnames or [])]
            if missing:
                raise ConfigError(f"{gpath}: missing column(s) {', '.join(missing)}")
            for ln, row in enumerate(reader, start=2):
                try:
                    gid = int(row["id"])
                    groups[gid] = UnifacGroup(
                        gid, row["name"].strip(), int(row["main"]),
                        float(row["R"]), float(row["Q"]),
                    )
                    patterns.append(
                        GroupPattern(
                            gid, row["name"].strip(), row["pattern"].strip(),
                            int(row["priority"]),
                        )
                    )
                except ValueError as exc:
                    raise ConfigError(f"{gpath}:{ln}: {exc}") from exc
    except OSError as exc:
        raise ConfigError(f"cannot read UNIFAC groups {gpath}: {exc}") from exc

    interactions: dict[tuple[int, int], tuple[float, ...]] = {}
    ipath = Path(interactions_csv)
    try:
        with open(ipath, newline="") as fh:
            reader = csv.DictReader(fh)
            names = reader.fieldnames or []
            base = ("main_m", "main_n", "a")
            missing = [c for c in base if c not in names]
            if missing:
                raise ConfigError(f"{ipath}: missing column(s) {', '.join(missing)}")
            wants_bc = variant == MODIFIED
            if wants_bc and ("b" not in names or "c" not in names):
                raise ConfigError(f"{ipath}: modified tables need columns a,b,c")
            for ln, row in enumerate(reader, start=2):
                try:
                    key = (int(row["main_m"]), int(row["main_n"]))
                    if wants_bc:
                        coeffs = (float(row["a"]), float(row["b"]), float(row["c"]))
                    else:
                        coeffs = (float(row["a"]),)
                except ValueError as exc:
                    raise ConfigError(f"{ipath}:{ln}: {exc}") from exc
                if key[0] == key[1]:
                    raise ConfigError(f"{ipath}:{ln}: self-interaction {key} is implicit")
                if key in interactions:
                    raise ConfigError(f"{ipath}:{ln}: duplicate pair {key}")
                interactions[key] = coeffs
    except OSError as exc:
        raise ConfigError(f"cannot read UNIFAC interactions {ipath}: {exc}") from exc

    return UnifacParameterTable(variant, groups, interactions), patterns
