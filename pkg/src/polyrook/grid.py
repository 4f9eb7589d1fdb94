"""Cells, intervals and polyominoes.

A polyomino is stored translation-normalized (minimum x and y are 0) with
its cells sorted by ``(y, x)``.  Everything downstream relies on that order.
"""

from __future__ import annotations

import json
from collections import deque
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import Disconnected, Empty, InvalidPolyomino

MAX_COORD = 2**16 - 1
MAX_RANK = 64

HORIZONTAL = "horizontal"
VERTICAL = "vertical"

Point = tuple[int, int]


class Cell(NamedTuple):
    """Unit square ``[(x, y), (x + 1, y + 1)]`` named by its lower-left corner."""

    x: int
    y: int


def cell_key(c) -> tuple[int, int]:
    return (c[1], c[0])


class Interval(NamedTuple):
    """Lattice interval ``[lo, hi]`` of N^2."""

    lo: Point
    hi: Point

    @property
    def proper(self) -> bool:
        return self.lo[0] < self.hi[0] and self.lo[1] < self.hi[1]

    @property
    def width(self) -> int:
        return self.hi[0] - self.lo[0]

    @property
    def height(self) -> int:
        return self.hi[1] - self.lo[1]

    @property
    def anti_diagonal_corners(self) -> tuple[Point, Point]:
        (i, j), (k, l) = self.lo, self.hi
        return (i, l), (k, j)

    def cells(self) -> list[Cell]:
        (i, j), (k, l) = self.lo, self.hi
        return [Cell(x, y) for y in range(j, l) for x in range(i, k)]

    def vertices(self) -> set[Point]:
        (i, j), (k, l) = self.lo, self.hi
        return {(x, y) for x in range(i, k + 1) for y in range(j, l + 1)}


def _neighbours(c):
    x, y = c
    return ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1))


def _connected(cells: set) -> bool:
    start = next(iter(cells))
    seen = {start}
    queue = deque([start])
    while queue:
        for nb in _neighbours(queue.popleft()):
            if nb in cells and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return len(seen) == len(cells)


class Polyomino:
    """An immutable, normalized, edge-connected set of cells.

    Construct with ``Polyomino(cells)`` or :func:`normalize`; both translate the
    input so that its lower-left corner is the origin.
    """

    def __init__(self, cells: Iterable):
        raw = {(int(c[0]), int(c[1])) for c in cells}
        if not raw:
            raise Empty("a polyomino needs at least one cell")
        if len(raw) > MAX_RANK:
            raise InvalidPolyomino(f"rank {len(raw)} exceeds {MAX_RANK}")
        if not _connected(raw):
            raise Disconnected("cells are not edge-connected")
        mx = min(c[0] for c in raw)
        my = min(c[1] for c in raw)
        shifted = {Cell(x - mx, y - my) for x, y in raw}
        if any(c.x > MAX_COORD or c.y > MAX_COORD for c in shifted):
            raise InvalidPolyomino("coordinates exceed the 16-bit range")
        object.__setattr__(self, "cells", tuple(sorted(shifted, key=cell_key)))
        object.__setattr__(self, "cell_set", frozenset(shifted))

    def __setattr__(self, name, value):
        if name in ("cells", "cell_set"):
            raise AttributeError("Polyomino is immutable")
        object.__setattr__(self, name, value)

    @property
    def rank(self) -> int:
        return len(self.cells)

    @cached_property
    def width(self) -> int:
        return max(c.x for c in self.cells) + 1

    @cached_property
    def height(self) -> int:
        return self.cells[-1].y + 1

    @property
    def bounding_box(self) -> Interval:
        return Interval((0, 0), (self.width, self.height))

    def __contains__(self, c) -> bool:
        return (c[0], c[1]) in self.cell_set

    def __iter__(self):
        return iter(self.cells)

    def __len__(self):
        return len(self.cells)

    def __eq__(self, other):
        return isinstance(other, Polyomino) and self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def __lt__(self, other: Polyomino):
        return self.sort_key < other.sort_key

    @cached_property
    def sort_key(self) -> tuple:
        return tuple(cell_key(c) for c in self.cells)

    @cached_property
    def _prefix(self) -> list[list[int]]:
        w, h = self.width, self.height
        s = [[0] * (w + 1) for _ in range(h + 1)]
        for y in range(h):
            row, above = s[y], s[y + 1]
            acc = 0
            for x in range(w):
                acc += (x, y) in self.cell_set
                above[x + 1] = row[x + 1] + acc
        return s

    def count_cells_in(self, lo: Point, hi: Point) -> int:
        """Number of cells of P inside the box ``[lo, hi]`` (clipped)."""
        i, j = max(lo[0], 0), max(lo[1], 0)
        k, l = min(hi[0], self.width), min(hi[1], self.height)
        if i >= k or j >= l:
            return 0
        s = self._prefix
        return s[l][k] - s[j][k] - s[l][i] + s[j][i]

    def to_list(self) -> list[list[int]]:
        return [[c.x, c.y] for c in self.cells]

    def __repr__(self):
        return f"Polyomino({[tuple(c) for c in self.cells]})"

    def __str__(self):
        return to_grid_text(self)


def normalize(cells: Iterable) -> Polyomino:
    return cells if isinstance(cells, Polyomino) else Polyomino(cells)


def vertices(P: Polyomino) -> frozenset:
    """V(P): the union of the corners of all cells."""
    out = set()
    for x, y in P.cells:
        out.update(((x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)))
    return frozenset(out)


def is_simple(P: Polyomino) -> bool:
    """True iff P has no holes.

    Flood-fills the complement inside the bounding box widened by one cell on
    every side; the margin makes the outer region a single seed.
    """
    w, h = P.width, P.height
    total_empty = (w + 2) * (h + 2) - P.rank
    start = (-1, -1)
    seen = {start}
    queue = deque([start])
    cells = P.cell_set
    while queue:
        for nb in _neighbours(queue.popleft()):
            x, y = nb
            if -1 <= x <= w and -1 <= y <= h and nb not in cells and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return len(seen) == total_empty


def is_inner_interval(P: Polyomino, I: Interval) -> bool:
    if not I.proper:
        return False
    return P.count_cells_in(I.lo, I.hi) == I.width * I.height


def is_rectangle(P: Polyomino) -> bool:
    return P.rank == P.width * P.height


class Convexity(NamedTuple):
    row_convex: bool
    column_convex: bool
    convex: bool


def convexity(P: Polyomino) -> Convexity:
    rows: dict[int, list[int]] = {}
    cols: dict[int, list[int]] = {}
    for x, y in P.cells:
        rows.setdefault(y, []).append(x)
        cols.setdefault(x, []).append(y)
    row = all(max(xs) - min(xs) + 1 == len(xs) for xs in rows.values())
    col = all(max(ys) - min(ys) + 1 == len(ys) for ys in cols.values())
    return Convexity(row, col, row and col)


def maximal_cell_intervals(P: Polyomino, direction: str = HORIZONTAL) -> list[tuple[Cell, ...]]:
    """Maximal runs of consecutive cells in a row (or column) of P."""
    if direction not in (HORIZONTAL, VERTICAL):
        raise ValueError(f"unknown direction {direction!r}")
    horizontal = direction == HORIZONTAL
    order = P.cells if horizontal else sorted(P.cells)
    runs: list[list[Cell]] = []
    for c in order:
        if runs:
            last = runs[-1][-1]
            if horizontal and last.y == c.y and last.x + 1 == c.x:
                runs[-1].append(c)
                continue
            if not horizontal and last.x == c.x and last.y + 1 == c.y:
                runs[-1].append(c)
                continue
        runs.append([c])
    return [tuple(r) for r in runs]


def maximal_edge_intervals(P: Polyomino, direction: str = HORIZONTAL) -> list[Interval]:
    """Maximal horizontal (vertical) edge intervals, ordered by line then start."""
    if direction not in (HORIZONTAL, VERTICAL):
        raise ValueError(f"unknown direction {direction!r}")
    cells = P.cell_set
    out = []
    if direction == HORIZONTAL:
        for y in range(P.height + 1):
            xs = [x for x in range(P.width) if (x, y) in cells or (x, y - 1) in cells]
            for a, b in _runs(xs):
                out.append(Interval((a, y), (b + 1, y)))
    else:
        for x in range(P.width + 1):
            ys = [y for y in range(P.height) if (x, y) in cells or (x - 1, y) in cells]
            for a, b in _runs(ys):
                out.append(Interval((x, a), (x, b + 1)))
    return out


def _runs(values: list[int]) -> list[tuple[int, int]]:
    runs: list[tuple[int, int]] = []
    for v in values:
        if runs and runs[-1][1] + 1 == v:
            runs[-1] = (runs[-1][0], v)
        else:
            runs.append((v, v))
    return runs


_D4 = (
    lambda x, y: (x, y),
    lambda x, y: (-y, x),
    lambda x, y: (-x, -y),
    lambda x, y: (y, -x),
    lambda x, y: (-x, y),
    lambda x, y: (x, -y),
    lambda x, y: (y, x),
    lambda x, y: (-y, -x),
)


def d4_images(P: Polyomino) -> list[Polyomino]:
    """The eight images of P under the symmetries of the square (with repeats)."""
    return [Polyomino(f(x, y) for x, y in P.cells) for f in _D4]


def canonical_key(cells) -> tuple:
    """Sort key of the canonical D4 image, computed without building Polyominoes."""
    best = None
    for f in _D4:
        pts = [f(x, y) for x, y in cells]
        mx = min(p[0] for p in pts)
        my = min(p[1] for p in pts)
        key = tuple(sorted((y - my, x - mx) for x, y in pts))
        if best is None or key < best:
            best = key
    return best


def canonical_form(P: Polyomino) -> Polyomino:
    """Lexicographically least normalized image of P under the 8 symmetries."""
    return Polyomino((x, y) for y, x in canonical_key(P.cells))


def is_canonical(P: Polyomino) -> bool:
    return P.sort_key == canonical_key(P.cells)


# -- text and JSON formats ---------------------------------------------------


def parse_grid_text(text: str) -> Polyomino:
    """Parse lines over ``#``/``.``; the last line is the row y = 0."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise Empty("empty grid")
    cells = []
    for row, line in enumerate(reversed(lines)):
        for x, ch in enumerate(line):
            if ch == "#":
                cells.append((x, row))
            elif ch != ".":
                raise InvalidPolyomino(f"unexpected character {ch!r} in grid")
    return Polyomino(cells)


def to_grid_text(P: Polyomino) -> str:
    rows = []
    for y in reversed(range(P.height)):
        rows.append("".join("#" if (x, y) in P.cell_set else "." for x in range(P.width)))
    return "\n".join(rows)


def parse_json(data) -> Polyomino:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        cells = data["cells"]
        return Polyomino((int(x), int(y)) for x, y in cells)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InvalidPolyomino):
            raise
        raise InvalidPolyomino(f"malformed polyomino JSON: {exc}") from exc


def to_json(P: Polyomino) -> str:
    return json.dumps({"cells": P.to_list()})


def parse_polyomino(text: str) -> Polyomino:
    """Accept either the JSON object format or the ``#``/``.`` grid format."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return parse_json(stripped)
    return parse_grid_text(stripped)


def load_polyomino(path) -> Polyomino:
    with open(path, encoding="utf-8") as fh:
        return parse_polyomino(fh.read())
