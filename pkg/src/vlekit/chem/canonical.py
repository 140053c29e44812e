"""Canonical SMILES generation.

Atoms are ranked by iterative neighborhood refinement seeded with an
element/degree invariant (carbon sorts first, low degree first, so a plain
alkane canonicalizes to the string people actually write).  Remaining ties
are broken by promoting each candidate atom in turn and keeping the
lexicographically smallest result.  The writer is a deterministic DFS from
the rank-0 atom.
"""

from __future__ import annotations

from .parser import MolecularGraph, VALENCES, parse_smiles

ORGANIC_BARE = {"B", "C", "N", "O", "P", "S", "F", "Cl", "Br", "I"}


def _bond_sort_key(bond) -> int:
    return 4 if bond.aromatic else bond.order


def _initial_keys(graph: MolecularGraph):
    keys = []
    for i, a in enumerate(graph.atoms):
        keys.append(
            (
                0 if a.element == "C" else 1,
                a.element,
                not a.aromatic,
                a.charge,
                graph.degree(i),
                a.hcount,
            )
        )
    return keys


def _dense_ranks(keys) -> list[int]:
    order = {k: r for r, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _refine(graph: MolecularGraph, ranks: list[int]) -> list[int]:
    n = len(ranks)
    while True:
        keys = []
        for i in range(n):
            nbr = sorted((_bond_sort_key(b), ranks[j]) for j, b in graph.neighbors(i))
            keys.append((ranks[i], tuple(nbr)))
        new = _dense_ranks(keys)
        if len(set(new)) == len(set(ranks)):
            return new
        ranks = new


def _first_tied_class(ranks: list[int]) -> list[int] | None:
    by_rank: dict[int, list[int]] = {}
    for i, r in enumerate(ranks):
        by_rank.setdefault(r, []).append(i)
    for r in sorted(by_rank):
        if len(by_rank[r]) > 1:
            return by_rank[r]
    return None


def _canonical_string(graph: MolecularGraph, ranks: list[int]) -> str:
    tied = _first_tied_class(ranks)
    if tied is None:
        return _write(graph, ranks)
    best = None
    for a in tied:
        promoted = [(r, 0 if i == a else 1) for i, r in enumerate(ranks)]
        candidate = _canonical_string(graph, _refine(graph, _dense_ranks(promoted)))
        if best is None or candidate < best:
            best = candidate
    return best


def _inferred_hcount(graph: MolecularGraph, idx: int) -> int | None:
    """Hydrogen count a bare (bracketless) token would imply, or None."""
    a = graph.atoms[idx]
    bond_sum = sum(1 if b.aromatic else b.order for _, b in graph.neighbors(idx))
    need = bond_sum + (1 if a.aromatic else 0)
    target = next((v for v in VALENCES[a.element] if v >= need), None)
    if target is None:
        return None
    return target - need


def _atom_token(graph: MolecularGraph, idx: int) -> str:
    a = graph.atoms[idx]
    symbol = a.element.lower() if a.aromatic else a.element
    if a.charge == 0 and a.element in ORGANIC_BARE and _inferred_hcount(graph, idx) == a.hcount:
        return symbol
    h = "" if a.hcount == 0 else ("H" if a.hcount == 1 else f"H{a.hcount}")
    if a.charge == 0:
        charge = ""
    elif a.charge in (1, -1):
        charge = "+" if a.charge == 1 else "-"
    else:
        charge = f"{a.charge:+d}"
    return f"[{symbol}{h}{charge}]"


def _bond_token(graph: MolecularGraph, bond) -> str:
    if bond.aromatic:
        return ""
    if bond.order == 1:
        ai, aj = graph.atoms[bond.i], graph.atoms[bond.j]
        if ai.aromatic and aj.aromatic:
            return "-"  # explicit single between aromatic atoms
        return ""
    return "=" if bond.order == 2 else "#"


def _write(graph: MolecularGraph, ranks: list[int]) -> str:
    n = len(graph.atoms)
    if n == 1:
        return _atom_token(graph, 0)
    root = ranks.index(0)

    # Plan a DFS: tree children per atom (rank order) and ring-closure bonds.
    visited = [False] * n
    children: dict[int, list[tuple[int, object]]] = {i: [] for i in range(n)}
    closures: list[tuple[int, int, object]] = []  # (descendant, ancestor, bond)
    used_bonds: set[int] = set()
    preorder: list[int] = []

    bond_index = {id(b): k for k, b in enumerate(graph.bonds)}
    visited[root] = True
    order_pos = [0] * n

    def sorted_nbrs(u):
        return sorted(graph.neighbors(u), key=lambda nb: ranks[nb[0]])

    walk = [(root, iter(sorted_nbrs(root)))]
    preorder.append(root)
    order_pos[root] = 0
    while walk:
        u, it = walk[-1]
        advanced = False
        for v, b in it:
            bi = bond_index[id(b)]
            if bi in used_bonds:
                continue
            if visited[v]:
                used_bonds.add(bi)
                closures.append((u, v, b))
            else:
                used_bonds.add(bi)
                visited[v] = True
                children[u].append((v, b))
                preorder.append(v)
                order_pos[v] = len(preorder) - 1
                walk.append((v, iter(sorted_nbrs(v))))
                advanced = True
                break
        if not advanced:
            walk.pop()

    # Assign ring-closure numbers in emission order; a digit is reused once
    # its closing token appears strictly before the new opening token.
    opens: dict[int, list[tuple[int, object]]] = {i: [] for i in range(n)}
    closes: dict[int, list[tuple[int, object]]] = {i: [] for i in range(n)}
    events = sorted(closures, key=lambda c: (order_pos[c[1]], order_pos[c[0]]))
    free: list[int] = []
    next_number = 1
    active: list[tuple[int, int]] = []  # (closing position, number)
    for desc, anc, bond in events:
        open_pos = order_pos[anc]
        still_active = []
        for close_pos, num in active:
            if close_pos < open_pos:
                free.append(num)
            else:
                still_active.append((close_pos, num))
        active = still_active
        if free:
            free.sort()
            number = free.pop(0)
        else:
            number = next_number
            next_number += 1
        opens[anc].append((number, bond))
        closes[desc].append((number, bond))
        active.append((order_pos[desc], number))

    def ring_digit(number: int) -> str:
        return str(number) if number < 10 else f"%{number:02d}"

    out: list[str] = []

    def emit(u: int) -> None:
        out.append(_atom_token(graph, u))
        for number, bond in sorted(opens[u]):
            out.append(ring_digit(number))
        for number, bond in sorted(closes[u]):
            out.append(_bond_token(graph, bond) + ring_digit(number))
        kids = children[u]
        for k, (v, b) in enumerate(kids):
            if k < len(kids) - 1:
                out.append("(" + _bond_token(graph, b))
                emit(v)
                out.append(")")
            else:
                out.append(_bond_token(graph, b))
                emit(v)

    emit(root)
    return "".join(out)


def canonical_smiles(molecule: str | MolecularGraph) -> str:
    """Return the canonical SMILES for a string or parsed graph."""
    graph = parse_smiles(molecule) if isinstance(molecule, str) else molecule
    ranks = _refine(graph, _dense_ranks(_initial_keys(graph)))
    return _canonical_string(graph, ranks)
