"""The planar distributive lattice on the vertices of a parallelogram polyomino.

Covers in the lattice are unit east/north steps.  The EL-labelling gives the
edges of the uppermost chain the labels ``1..m+n`` and copies the label of
its k-th step to every parallel edge in the same column (east steps) or the
same row (north steps).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import ChainExplosion, Incomparable, NotParallelogram
from .grid import HORIZONTAL, VERTICAL, Cell, Polyomino, maximal_edge_intervals, vertices
from .parallelogram import column_profile

Point = tuple[int, int]
Edge = tuple[Point, Point]

CHAIN_CAP = 10**7


@dataclass(frozen=True)
class PlanarLattice:
    points: frozenset
    m: int
    n: int

    @property
    def min(self) -> Point:
        return (0, 0)

    @property
    def max(self) -> Point:
        return (self.m, self.n)

    @property
    def rank(self) -> int:
        return self.m + self.n

    def __contains__(self, p) -> bool:
        return p in self.points

    def up(self, p: Point) -> list[Point]:
        """Upper covers of p: north first, then east."""
        x, y = p
        return [q for q in ((x, y + 1), (x + 1, y)) if q in self.points]

    def down(self, p: Point) -> list[Point]:
        x, y = p
        return [q for q in ((x, y - 1), (x - 1, y)) if q in self.points]

    def edges(self) -> list[Edge]:
        out = []
        for p in sorted(self.points, key=lambda q: (q[1], q[0])):
            out.extend((p, q) for q in self.up(p))
        return out


def lattice_of(P: Polyomino) -> PlanarLattice:
    if column_profile(P) is None:
        raise NotParallelogram(f"{P!r} is not a parallelogram polyomino")
    pts = vertices(P)
    L = PlanarLattice(frozenset(pts), P.width, P.height)
    for a in pts:
        for b in pts:
            if (max(a[0], b[0]), max(a[1], b[1])) not in pts or (min(a[0], b[0]), min(a[1], b[1])) not in pts:
                raise NotParallelogram("vertex set is not closed under join and meet")
    by_rank: dict[int, int] = {}
    for x, y in pts:
        by_rank[x + y] = by_rank.get(x + y, 0) + 1
    if any(by_rank.get(r, 0) < 2 for r in range(1, L.rank)):
        raise NotParallelogram("lattice is not simple")
    return L


def uppermost_chain(L: PlanarLattice, x: Point, y: Point) -> list[Point]:
    """Chain from x to y in L hugging the upper boundary of ``L ∩ [x, y]``."""
    if not (x[0] <= y[0] and x[1] <= y[1]):
        raise Incomparable(f"{x} is not below {y}")
    if x not in L or y not in L:
        raise ValueError("endpoints must belong to the lattice")
    chain = [x]
    i, j = x
    while (i, j) != y:
        if j < y[1] and (i, j + 1) in L:
            j += 1
        elif i < y[0] and (i + 1, j) in L:
            i += 1
        else:
            raise AssertionError(f"uppermost chain stuck at {(i, j)}")
        chain.append((i, j))
    return chain


@dataclass(frozen=True)
class EdgeLabelling:
    column_labels: tuple[int, ...]
    row_labels: tuple[int, ...]

    def __call__(self, edge: Edge) -> int:
        (x0, y0), (x1, y1) = edge
        if x1 == x0 + 1 and y1 == y0:
            return self.column_labels[x0]
        if y1 == y0 + 1 and x1 == x0:
            return self.row_labels[y0]
        raise ValueError(f"{edge} is not a unit step")

    def as_dict(self, L: PlanarLattice) -> dict[Edge, int]:
        return {e: self(e) for e in L.edges()}


def el_labelling(L: PlanarLattice) -> EdgeLabelling:
    top = uppermost_chain(L, L.min, L.max)
    cols = [0] * L.m
    rows = [0] * L.n
    for t, (p, q) in enumerate(zip(top, top[1:])):
        if q[0] == p[0] + 1:
            cols[p[0]] = t + 1
        else:
            rows[p[1]] = t + 1
    return EdgeLabelling(tuple(cols), tuple(rows))


def maximal_chains(L: PlanarLattice, cap: int = CHAIN_CAP):
    """Yield every maximal chain of L as a tuple of points (depth first)."""
    target = L.max
    path = [L.min]
    count = 0

    def walk(p):
        nonlocal count
        if p == target:
            count += 1
            if count > cap:
                raise ChainExplosion(f"more than {cap} maximal chains; use the cell-chain method")
            yield tuple(path)
            return
        for q in L.up(p):
            path.append(q)
            yield from walk(q)
            path.pop()

    yield from walk(L.min)


def descent_cells(L: PlanarLattice, chain) -> set[Cell]:
    """Cells around which the chain turns east-then-north with the NW corner in L."""
    out = set()
    for a, b, c in zip(chain, chain[1:], chain[2:]):
        if b[0] == a[0] + 1 and c[1] == b[1] + 1 and (a[0], a[1] + 1) in L:
            out.add(Cell(a[0], a[1]))
    return out


def descent_positions(labels: EdgeLabelling, chain) -> list[int]:
    """``D(m)``: indices i with label(x_{i-1} -> x_i) > label(x_i -> x_{i+1})."""
    lab = [labels(e) for e in zip(chain, chain[1:])]
    return [i + 1 for i in range(len(lab) - 1) if lab[i] > lab[i + 1]]


def h_via_descents(L: PlanarLattice, cap: int = CHAIN_CAP, check_labels: bool = True):
    """Histogram of descent counts over all maximal chains of L."""
    from .polynomial import IntPolynomial

    labels = el_labelling(L) if check_labels else None
    hist: list[int] = []
    for chain in maximal_chains(L, cap):
        k = len(descent_cells(L, chain))
        if labels is not None and len(descent_positions(labels, chain)) != k:
            raise AssertionError(f"label descents disagree with cell descents on {chain}")
        while len(hist) <= k:
            hist.append(0)
        hist[k] += 1
    return IntPolynomial(hist)


def count_maximal_chains(L: PlanarLattice) -> int:
    """Number of maximal chains, by dynamic programming over the grid."""
    ways: dict[Point, int] = {L.min: 1}
    for p in sorted(L.points, key=lambda q: q[0] + q[1]):
        if p == L.min:
            continue
        ways[p] = sum(ways.get(q, 0) for q in L.down(p))
    return ways.get(L.max, 0)


def h_via_cell_chains(P: Polyomino):
    """Coefficient k counts k-sets of cells strictly increasing in both coordinates."""
    from .polynomial import IntPolynomial

    if column_profile(P) is None:
        raise NotParallelogram(f"{P!r} is not a parallelogram polyomino")
    cells = sorted(P.cells)
    ending: list[list[int]] = []
    for i, c in enumerate(cells):
        row = [0, 1]
        for j in range(i):
            d = cells[j]
            if d.x < c.x and d.y < c.y:
                prev = ending[j]
                while len(row) < len(prev) + 1:
                    row.append(0)
                for k in range(1, len(prev)):
                    row[k + 1] += prev[k]
        ending.append(row)
    total = [1]
    for row in ending:
        while len(total) < len(row):
            total.append(0)
        for k in range(1, len(row)):
            total[k] += row[k]
    return IntPolynomial(total)


# -- join-irreducibles ---------------------------------------------------------


@dataclass(frozen=True)
class JoinIrreduciblePoset:
    """Join-irreducibles ``h_1..h_n`` (row starts) and ``v_1..v_m`` (column bottoms).

    Order is the componentwise order of the lattice.
    """

    h: tuple[Point, ...]
    v: tuple[Point, ...]

    @property
    def elements(self) -> tuple[Point, ...]:
        return self.h + self.v

    @staticmethod
    def leq(a: Point, b: Point) -> bool:
        return a[0] <= b[0] and a[1] <= b[1]

    @cached_property
    def covers(self) -> dict[Point, list[Point]]:
        els = self.elements
        less = {a: [b for b in els if b != a and self.leq(a, b)] for a in els}
        out = {}
        for a in els:
            out[a] = [b for b in less[a] if not any(c != b and self.leq(c, b) for c in less[a])]
        return out


def join_irreducibles(P: Polyomino) -> JoinIrreduciblePoset:
    if column_profile(P) is None:
        raise NotParallelogram(f"{P!r} is not a parallelogram polyomino")
    horiz = maximal_edge_intervals(P, HORIZONTAL)
    vert = maximal_edge_intervals(P, VERTICAL)
    if len(horiz) != P.height + 1 or len(vert) != P.width + 1:
        raise AssertionError("a parallelogram has one maximal edge interval per grid line")
    h = tuple(I.lo for I in horiz if I.lo[1] > 0)
    v = tuple(I.lo for I in vert if I.lo[0] > 0)
    return JoinIrreduciblePoset(h, v)


def join_irreducible_points(L: PlanarLattice) -> set[Point]:
    """Elements with exactly one lower cover (independent definition)."""
    return {p for p in L.points if p != L.min and len(L.down(p)) == 1}


def poset_chain_lengths(Q: JoinIrreduciblePoset) -> set[int]:
    """Lengths of all maximal chains of Q."""
    covers = Q.covers
    has_lower = {b for bs in covers.values() for b in bs}
    memo: dict[Point, frozenset] = {}

    def lengths_from(a):
        if a not in memo:
            if not covers[a]:
                memo[a] = frozenset([0])
            else:
                memo[a] = frozenset(k + 1 for b in covers[a] for k in lengths_from(b))
        return memo[a]

    out: set[int] = set()
    for a in Q.elements:
        if a not in has_lower:
            out |= lengths_from(a)
    return out


def is_pure(Q: JoinIrreduciblePoset) -> bool:
    return len(poset_chain_lengths(Q)) == 1
