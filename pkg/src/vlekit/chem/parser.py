"""SMILES parsing for a pragmatic organic subset.

Supported grammar: bare organic-subset atoms (B, C, N, O, P, S, F, Cl, Br, I
and aromatic b, c, n, o, p, s), bracket atoms with explicit H count and
charge, single/double/triple bonds, branches, and ring closures (single
digit and ``%nn``).  Stereo markers and isotopes are accepted, warned about,
and discarded.  Hydrogens are implicit; the graph holds heavy atoms only.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field

from ..errors import ParseError

ORGANIC_ALIPHATIC = {"B", "C", "N", "O", "P", "S", "F", "Cl", "Br", "I"}
ORGANIC_AROMATIC = {"b", "c", "n", "o", "p", "s"}

# Allowed total valences per element, lowest preferred when inferring
# implicit hydrogens.
VALENCES = {
    "B": (3,),
    "C": (4,),
    "N": (3, 5),
    "O": (2,),
    "P": (3, 5),
    "S": (2, 4, 6),
    "F": (1,),
    "Cl": (1,),
    "Br": (1,),
    "I": (1,),
}

BOND_ORDERS = {"-": 1, "=": 2, "#": 3}

_BRACKET_RE = re.compile(
    r"""^\[
        (?P<isotope>\d+)?
        (?P<symbol>Cl|Br|[BCNOPSFI]|[bcnops])
        (?P<chiral>@{1,2})?
        (?P<hcount>H\d*)?
        (?P<charge>\+{1,2}|-{1,2}|[+-]\d+)?
        (?P<cls>:\d+)?
        \]$""",
    re.VERBOSE,
)


@dataclass
class Atom:
    """Heavy atom; ``hcount`` is resolved after parsing completes."""

    element: str
    aromatic: bool
    charge: int = 0
    hcount: int = 0
    explicit_h: bool = False
    offset: int = 0


@dataclass
class Bond:
    i: int
    j: int
    order: int
    aromatic: bool = False


@dataclass
class MolecularGraph:
    """Connected heavy-atom graph with resolved ring closures."""

    atoms: list[Atom] = field(default_factory=list)
    bonds: list[Bond] = field(default_factory=list)

    def neighbors(self, i: int) -> list[tuple[int, Bond]]:
        out = []
        for b in self.bonds:
            if b.i == i:
                out.append((b.j, b))
            elif b.j == i:
                out.append((b.i, b))
        return out

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))

    def heavy_atom_count(self) -> int:
        return len(self.atoms)


def _tokenize(smiles: str):
    """Yield (kind, text, offset) token triples."""
    i, n = 0, len(smiles)
    while i < n:
        ch = smiles[i]
        if ch == "[":
            j = smiles.find("]", i)
            if j < 0:
                raise ParseError(f"unclosed bracket atom at offset {i}", offset=i)
            yield ("atom", smiles[i : j + 1], i)
            i = j + 1
        elif ch in "-=#":
            yield ("bond", ch, i)
            i += 1
        elif ch in "/\\":
            yield ("stereo", ch, i)
            i += 1
        elif ch == "(":
            yield ("open", ch, i)
            i += 1
        elif ch == ")":
            yield ("close", ch, i)
            i += 1
        elif ch == "%":
            if i + 2 >= n or not smiles[i + 1 : i + 3].isdigit():
                raise ParseError(f"malformed ring closure at offset {i}", offset=i)
            yield ("ring", smiles[i + 1 : i + 3], i)
            i += 3
        elif ch.isdigit():
            yield ("ring", ch, i)
            i += 1
        elif ch in "CB" and i + 1 < n and smiles[i : i + 2] in ("Cl", "Br"):
            yield ("atom", smiles[i : i + 2], i)
            i += 2
        elif ch in ORGANIC_ALIPHATIC or ch in ORGANIC_AROMATIC:
            yield ("atom", ch, i)
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r} at offset {i}", offset=i)


def _parse_bracket(token: str, offset: int) -> Atom:
    m = _BRACKET_RE.match(token)
    if m is None:
        raise ParseError(f"malformed bracket atom {token!r} at offset {offset}", offset=offset)
    if m.group("isotope"):
        warnings.warn(f"isotope label in {token!r} ignored", stacklevel=4)
    if m.group("chiral"):
        warnings.warn(f"stereo descriptor in {token!r} ignored", stacklevel=4)
    if m.group("cls"):
        warnings.warn(f"atom class in {token!r} ignored", stacklevel=4)
    symbol = m.group("symbol")
    aromatic = symbol.islower()
    element = symbol.capitalize() if len(symbol) == 1 else symbol
    hspec = m.group("hcount")
    hcount = 0
    if hspec:
        hcount = int(hspec[1:]) if len(hspec) > 1 else 1
    cspec = m.group("charge")
    charge = 0
    if cspec:
        if cspec in ("+", "++", "-", "--"):
            charge = len(cspec) * (1 if cspec[0] == "+" else -1)
        else:
            charge = int(cspec)
    return Atom(element, aromatic, charge, hcount, explicit_h=True, offset=offset)


def _make_atom(token: str, offset: int) -> Atom:
    if token.startswith("["):
        return _parse_bracket(token, offset)
    aromatic = token.islower()
    element = token.capitalize() if len(token) == 1 else token
    return Atom(element, aromatic, offset=offset)


def _bridges(graph: MolecularGraph) -> set[int]:
    """Indices of bonds that are bridges (not part of any cycle)."""
    n = len(graph.atoms)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for bi, b in enumerate(graph.bonds):
        adj[b.i].append((b.j, bi))
        adj[b.j].append((b.i, bi))
    visited = [False] * n
    disc = [0] * n
    low = [0] * n
    bridges: set[int] = set()
    counter = [0]

    for root in range(n):
        if visited[root]:
            continue
        # iterative DFS to avoid recursion limits on long chains
        stack = [(root, -1, iter(adj[root]))]
        visited[root] = True
        disc[root] = low[root] = counter[0]
        counter[0] += 1
        while stack:
            u, parent_bond, it = stack[-1]
            advanced = False
            for v, bi in it:
                if bi == parent_bond:
                    continue
                if not visited[v]:
                    visited[v] = True
                    disc[v] = low[v] = counter[0]
                    counter[0] += 1
                    stack.append((v, bi, iter(adj[v])))
                    advanced = True
                    break
                low[u] = min(low[u], disc[v])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if low[u] > disc[p]:
                        bridges.add(parent_bond)
        continue
    return bridges


def _resolve_hydrogens(graph: MolecularGraph) -> None:
    for idx, atom in enumerate(graph.atoms):
        if atom.explicit_h:
            continue
        bond_sum = 0
        for _, b in graph.neighbors(idx):
            bond_sum += 1 if b.aromatic else b.order
        slots = VALENCES[atom.element]
        need = bond_sum + (1 if atom.aromatic else 0)
        target = next((v for v in slots if v >= need), None)
        if target is None:
            raise ParseError(
                f"valence violation on {atom.element} at offset {atom.offset}: "
                f"bond order sum {bond_sum} exceeds {max(slots)}",
                offset=atom.offset,
            )
        atom.hcount = target - need


def parse_smiles(smiles: str) -> MolecularGraph:
    """Parse a SMILES string into a :class:`MolecularGraph`.

    Raises :class:`vlekit.errors.ParseError` (with the byte offset) on
    unbalanced parentheses, unpaired ring closures, unknown elements, or
    valence violations.
    """
    if not smiles:
        raise ParseError("empty SMILES string", offset=0)

    graph = MolecularGraph()
    anchor: int | None = None
    pending_bond: tuple[str, int] | None = None
    branch_stack: list[int | None] = []
    open_rings: dict[str, tuple[int, str | None, int]] = {}

    def bond_between(i: int, j: int, symbol: str | None) -> Bond:
        ai, aj = graph.atoms[i], graph.atoms[j]
        if symbol is None:
            if ai.aromatic and aj.aromatic:
                return Bond(i, j, 1, aromatic=True)
            return Bond(i, j, 1)
        return Bond(i, j, BOND_ORDERS[symbol])

    for kind, text, offset in _tokenize(smiles):
        if kind == "atom":
            graph.atoms.append(_make_atom(text, offset))
            idx = len(graph.atoms) - 1
            if anchor is not None:
                symbol = pending_bond[0] if pending_bond else None
                graph.bonds.append(bond_between(anchor, idx, symbol))
            pending_bond = None
            anchor = idx
        elif kind == "bond":
            if pending_bond is not None:
                raise ParseError(f"two bond symbols in a row at offset {offset}", offset=offset)
            if anchor is None:
                raise ParseError(f"bond symbol before any atom at offset {offset}", offset=offset)
            pending_bond = (text, offset)
        elif kind == "stereo":
            warnings.warn(
                f"stereo bond marker {text!r} at offset {offset} treated as a single bond",
                stacklevel=3,
            )
        elif kind == "open":
            if anchor is None:
                raise ParseError(f"branch before any atom at offset {offset}", offset=offset)
            branch_stack.append(anchor)
        elif kind == "close":
            if not branch_stack:
                raise ParseError(f"unbalanced parenthesis at offset {offset}", offset=offset)
            if pending_bond is not None:
                raise ParseError(
                    f"dangling bond before ')' at offset {offset}", offset=offset
                )
            if branch_stack[-1] == anchor:
                raise ParseError(f"empty branch at offset {offset}", offset=offset)
            anchor = branch_stack.pop()
        elif kind == "ring":
            if anchor is None:
                raise ParseError(f"ring closure before any atom at offset {offset}", offset=offset)
            symbol = pending_bond[0] if pending_bond else None
            pending_bond = None
            if text in open_rings:
                other, other_symbol, other_offset = open_rings.pop(text)
                if other == anchor:
                    raise ParseError(
                        f"ring closure {text} bonds an atom to itself at offset {offset}",
                        offset=offset,
                    )
                if symbol is not None and other_symbol is not None and symbol != other_symbol:
                    raise ParseError(
                        f"conflicting bond orders on ring closure {text} at offset {offset}",
                        offset=offset,
                    )
                chosen = symbol if symbol is not None else other_symbol
                for b in graph.bonds:
                    if {b.i, b.j} == {anchor, other}:
                        raise ParseError(
                            f"duplicate bond via ring closure {text} at offset {offset}",
                            offset=offset,
                        )
                graph.bonds.append(bond_between(other, anchor, chosen))
            else:
                open_rings[text] = (anchor, symbol, offset)

    if branch_stack:
        raise ParseError(
            f"unbalanced parenthesis: {len(branch_stack)} branch(es) left open", offset=len(smiles)
        )
    if pending_bond is not None:
        raise ParseError(f"dangling bond at offset {pending_bond[1]}", offset=pending_bond[1])
    if open_rings:
        label, (_, _, off) = sorted(open_rings.items())[0]
        raise ParseError(f"unpaired ring closure {label} opened at offset {off}", offset=off)

    # Aromatic bonds must participate in a ring; demote bridges written
    # between two aromatic atoms (e.g. the biphenyl inter-ring bond).
    bridges = _bridges(graph)
    for bi in bridges:
        if graph.bonds[bi].aromatic:
            graph.bonds[bi].aromatic = False
            graph.bonds[bi].order = 1

    cycle_atoms: set[int] = set()
    for bi, b in enumerate(graph.bonds):
        if bi not in bridges:
            cycle_atoms.update((b.i, b.j))
    for idx, atom in enumerate(graph.atoms):
        if atom.aromatic and idx not in cycle_atoms:
            raise ParseError(
                f"aromatic atom outside a ring at offset {atom.offset}", offset=atom.offset
            )

    _resolve_hydrogens(graph)
    return graph
