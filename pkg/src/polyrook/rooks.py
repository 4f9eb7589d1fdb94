"""Rook complex, rook polynomial and switch-equivalence of rook placements.

Two rooks attack each other only when they sit in the same maximal run of
consecutive cells of a row or column; a missing cell blocks the attack.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import SwitchBrokeInvariant
from .grid import HORIZONTAL, VERTICAL, Cell, Interval, Polyomino, cell_key, is_inner_interval, maximal_cell_intervals
from .polynomial import IntPolynomial

RookSet = tuple[Cell, ...]


def rook_set(cells) -> RookSet:
    """Canonical (``(y, x)``-sorted) tuple form of a rook placement."""
    return tuple(sorted((Cell(*c) for c in cells), key=cell_key))


@dataclass(frozen=True)
class RookClass:
    """A switch-equivalence class of k-rook placements."""

    representative: RookSet
    members: tuple[RookSet, ...]

    @property
    def size(self) -> int:
        return len(self.members)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller index wins so roots are stable under any merge order
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def conflict_graph(P: Polyomino) -> dict[Cell, frozenset]:
    """Adjacency map: C ~ D iff they share a maximal horizontal or vertical run."""
    adj: dict[Cell, set] = {c: set() for c in P.cells}
    for direction in (HORIZONTAL, VERTICAL):
        for run in maximal_cell_intervals(P, direction):
            for c in run:
                adj[c].update(d for d in run if d != c)
    return {c: frozenset(nb) for c, nb in adj.items()}


def attacks(P: Polyomino, a, b) -> bool:
    """True if distinct cells ``a`` and ``b`` of P attack each other."""
    a, b = Cell(*a), Cell(*b)
    if a == b:
        return False
    if a.y == b.y:
        lo, hi = sorted((a.x, b.x))
        return all((x, a.y) in P.cell_set for x in range(lo, hi + 1))
    if a.x == b.x:
        lo, hi = sorted((a.y, b.y))
        return all((a.x, y) in P.cell_set for y in range(lo, hi + 1))
    return False


def is_non_attacking(P: Polyomino, rooks: Sequence) -> bool:
    rooks = list(rooks)
    if any(tuple(r) not in P.cell_set for r in rooks) or len(set(map(tuple, rooks))) != len(rooks):
        return False
    return not any(attacks(P, rooks[i], rooks[j]) for i in range(len(rooks)) for j in range(i + 1, len(rooks)))


def rook_levels(P: Polyomino) -> list[list[RookSet]]:
    """All non-attacking placements grouped by size; level 0 is ``[()]``.

    Branches on cells in ``(y, x)`` order, pruning attacked cells, so every
    placement is produced once and already in canonical order.
    """
    cells = P.cells
    index = {c: i for i, c in enumerate(cells)}
    adj = conflict_graph(P)
    blocked_by = [frozenset(index[d] for d in adj[c]) for c in cells]
    levels: list[list[RookSet]] = [[()]]
    chosen: list[Cell] = []

    def extend(start: int, forbidden: frozenset):
        for i in range(start, len(cells)):
            if i in forbidden:
                continue
            chosen.append(cells[i])
            k = len(chosen)
            if len(levels) <= k:
                levels.append([])
            levels[k].append(tuple(chosen))
            extend(i + 1, forbidden | blocked_by[i])
            chosen.pop()

    extend(0, frozenset())
    return levels


def rook_number(P: Polyomino) -> int:
    return len(rook_levels(P)) - 1


def rook_polynomial(P: Polyomino) -> IntPolynomial:
    return IntPolynomial(len(level) for level in rook_levels(P))


def switch_partner(P: Polyomino, r1, r2) -> tuple[Cell, Cell] | None:
    """The opposite corner pair if r1, r2 are (anti)diagonal cells of an inner rectangle."""
    (a, b), (c, d) = r1, r2
    if a == c or b == d:
        return None
    lo = (min(a, c), min(b, d))
    hi = (max(a, c) + 1, max(b, d) + 1)
    if not is_inner_interval(P, Interval(lo, hi)):
        return None
    return Cell(a, d), Cell(c, b)


def switches(P: Polyomino, F: Sequence) -> list[RookSet]:
    """Every placement reachable from F by one switch, in canonical form."""
    F = rook_set(F)
    out = []
    for i in range(len(F)):
        for j in range(i + 1, len(F)):
            partner = switch_partner(P, F[i], F[j])
            if partner is None:
                continue
            G = rook_set([r for k, r in enumerate(F) if k not in (i, j)] + list(partner))
            if not is_non_attacking(P, G):
                raise SwitchBrokeInvariant(f"switching {F[i]}, {F[j]} in {F} gave {G}")
            out.append(G)
    return out


def equivalence_classes(P: Polyomino, k: int, levels: list[list[RookSet]] | None = None) -> list[RookClass]:
    """Connected components of the switch graph on the k-rook placements.

    Classes are returned sorted by representative, which is the least member
    in ``(y, x)`` order; neither depends on traversal order.
    """
    if levels is None:
        levels = rook_levels(P)
    if not 0 <= k < len(levels):
        raise ValueError(f"k={k} outside 0..{len(levels) - 1}")
    level = levels[k]
    index = {F: i for i, F in enumerate(level)}
    uf = _UnionFind(len(level))
    for i, F in enumerate(level):
        for G in switches(P, F):
            j = index.get(G)
            if j is None:
                raise SwitchBrokeInvariant(f"switch target {G} is not a {k}-rook placement")
            uf.union(i, j)
    groups: dict[int, list[RookSet]] = {}
    for i, F in enumerate(level):
        groups.setdefault(uf.find(i), []).append(F)
    classes = []
    for members in groups.values():
        members.sort(key=_rook_sort_key)
        classes.append(RookClass(members[0], tuple(members)))
    classes.sort(key=lambda cl: _rook_sort_key(cl.representative))
    return classes


def _rook_sort_key(F: RookSet):
    return tuple(cell_key(c) for c in F)


def r_tilde_polynomial(P: Polyomino) -> IntPolynomial:
    """Number of switch classes per placement size."""
    levels = rook_levels(P)
    return IntPolynomial(len(equivalence_classes(P, k, levels)) for k in range(len(levels)))


def is_ordered(F: Sequence) -> bool:
    """Lower-left corners strictly increase in both coordinates (in x order)."""
    pts = sorted(F)
    return all(p[0] < q[0] and p[1] < q[1] for p, q in zip(pts, pts[1:]))
