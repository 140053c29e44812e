"""Functional-group decomposition by exact cover.

Group patterns are short chains written in a bracket-per-atom notation,
e.g. ``[CH3]`` or ``[cH0][CH2]`` (lowercase element = aromatic).  An atom
spec may pin the hydrogen count; omitting ``H`` leaves it free.  Every
heavy atom must be claimed by exactly one group occurrence.  The search
picks the lowest-index uncovered atom, tries matching groups in priority
order (high first, group id as tie break), and backtracks on dead ends.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from ..errors import DecompositionFailed
from .parser import MolecularGraph

_ATOM_SPEC_RE = re.compile(r"\[(Cl|Br|[BCNOPSFI]|[bcnops])(?:H(\d+))?\]")


@dataclass(frozen=True)
class GroupPattern:
    """A named group with its structural pattern and search priority."""

    gid: int
    name: str
    pattern: str
    priority: int


@lru_cache(maxsize=256)
def _parse_pattern(pattern: str) -> tuple[tuple[str, bool, int | None], ...]:
    specs = []
    pos = 0
    for m in _ATOM_SPEC_RE.finditer(pattern):
        if m.start() != pos:
            raise ValueError(f"malformed group pattern {pattern!r}")
        symbol = m.group(1)
        aromatic = symbol.islower()
        element = symbol.capitalize() if len(symbol) == 1 else symbol
        hcount = int(m.group(2)) if m.group(2) is not None else None
        specs.append((element, aromatic, hcount))
        pos = m.end()
    if pos != len(pattern) or not specs:
        raise ValueError(f"malformed group pattern {pattern!r}")
    return tuple(specs)


def _spec_matches(spec, atom) -> bool:
    element, aromatic, hcount = spec
    if atom.element != element or atom.aromatic != aromatic:
        return False
    if atom.charge != 0:
        return False
    return hcount is None or atom.hcount == hcount


def _chain_matches(graph: MolecularGraph, specs) -> list[tuple[int, ...]]:
    """All paths of distinct bonded atoms matching the spec sequence."""
    results: list[tuple[int, ...]] = []

    def extend(path: tuple[int, ...]) -> None:
        k = len(path)
        if k == len(specs):
            results.append(path)
            return
        for j, _ in graph.neighbors(path[-1]):
            if j not in path and _spec_matches(specs[k], graph.atoms[j]):
                extend(path + (j,))

    for i in range(len(graph.atoms)):
        if _spec_matches(specs[0], graph.atoms[i]):
            extend((i,))
    return results


def decompose(graph: MolecularGraph, patterns: list[GroupPattern]) -> dict[int, int]:
    """Partition the heavy atoms of ``graph`` into group occurrences.

    Returns ``{group id: count}`` with strictly positive counts.  Raises
    :class:`vlekit.errors.DecompositionFailed` listing the atoms that could
    not be covered when no exact cover exists.
    """
    n = len(graph.atoms)
    ordered = sorted(patterns, key=lambda p: (-p.priority, p.gid))

    candidates: list[tuple[int, frozenset[int], tuple[int, ...]]] = []
    for rank, pat in enumerate(ordered):
        specs = _parse_pattern(pat.pattern)
        seen: set[frozenset[int]] = set()
        for chain in _chain_matches(graph, specs):
            atoms = frozenset(chain)
            if atoms not in seen:
                seen.add(atoms)
                candidates.append((rank, atoms, chain))
    candidates.sort(key=lambda c: (c[0], c[2]))

    by_atom: dict[int, list[int]] = {i: [] for i in range(n)}
    for ci, (_, atoms, _) in enumerate(candidates):
        for a in atoms:
            by_atom[a].append(ci)

    orphans = sorted(a for a in range(n) if not by_atom[a])
    if orphans:
        raise DecompositionFailed(
            f"no group pattern matches atom(s) {orphans}", uncovered=tuple(orphans)
        )

    best_remaining: list[frozenset[int]] = [frozenset(range(n))]
    dead_ends: set[frozenset[int]] = set()

    def cover(avail: frozenset[int]) -> Counter | None:
        if not avail:
            return Counter()
        if avail in dead_ends:
            return None
        target = min(avail)
        for ci in by_atom[target]:
            rank, atoms, _ = candidates[ci]
            if not atoms <= avail:
                continue
            sub = cover(avail - atoms)
            if sub is not None:
                sub[ordered[rank].gid] += 1
                return sub
        dead_ends.add(avail)
        if len(avail) < len(best_remaining[0]):
            best_remaining[0] = avail
        return None

    result = cover(frozenset(range(n)))
    if result is None:
        left = sorted(best_remaining[0])
        raise DecompositionFailed(
            f"no exact group cover; atom(s) {left} left uncovered in the best attempt",
            uncovered=tuple(left),
        )
    return dict(sorted(result.items()))
