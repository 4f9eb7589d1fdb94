"""Parallelogram polyominoes: path pairs, maximal rectangles and Gorensteinness.

A parallelogram polyomino is stored as two binary words of length ``m + n``
(1 = north step, 0 = east step): ``u`` the upper boundary path and ``l`` the
lower one, both running from ``(0, 0)`` to ``(m, n)``.  Detection never
rotates or reflects its input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import EndpointMismatch, IsRectangle, MethodsDisagree, NotParallelogram, PathsCross
from .grid import Cell, Interval, Polyomino, is_inner_interval, is_rectangle


@dataclass(frozen=True)
class PathPair:
    u: str
    l: str

    def __post_init__(self):
        for word in (self.u, self.l):
            if set(word) - {"0", "1"}:
                raise ValueError(f"path words are binary, got {word!r}")

    @property
    def m(self) -> int:
        return self.u.count("0")

    @property
    def n(self) -> int:
        return self.u.count("1")


@dataclass(frozen=True)
class MaxRectangle:
    interval: Interval

    @property
    def size(self) -> tuple[int, int]:
        return (self.interval.width, self.interval.height)

    @property
    def cells(self) -> list[Cell]:
        return self.interval.cells()

    def cell_set(self) -> frozenset:
        return frozenset(self.interval.cells())


@dataclass
class DerivedSequence:
    """Stages ``P_1, P_2, ...`` of repeated min-rectangle removal.

    ``terminal`` is ``"rectangle"`` when the last stage (or P itself) is a
    rectangle, ``"failure"`` when a removal left a non-parallelogram, whose
    cells are then kept in ``remainder``.
    """

    stages: list[Polyomino]
    terminal: str
    removed: list[MaxRectangle] = field(default_factory=list)
    remainder: tuple | None = None

    @property
    def well_shortenable(self) -> bool:
        return self.terminal == "rectangle"


def _columns(cells: Iterable) -> dict[int, list[int]]:
    cols: dict[int, list[int]] = {}
    for x, y in cells:
        cols.setdefault(x, []).append(y)
    return cols


def column_profile(P: Polyomino) -> list[tuple[int, int]] | None:
    """``(bottom, top)`` per column if P is a parallelogram polyomino, else None.

    ``bottom`` is the lowest cell row and ``top`` one past the highest.
    """
    cols = _columns(P.cells)
    profile = []
    for x in range(P.width):
        ys = cols.get(x)
        if not ys:
            return None
        lo, hi = min(ys), max(ys) + 1
        if hi - lo != len(ys):
            return None
        profile.append((lo, hi))
    for (b0, t0), (b1, t1) in zip(profile, profile[1:]):
        # monotone boundaries; b1 < t0 keeps consecutive columns edge-sharing
        if b1 < b0 or t1 < t0 or b1 >= t0:
            return None
    return profile


def is_parallelogram(P: Polyomino) -> bool:
    return column_profile(P) is not None


def detect(P: Polyomino) -> PathPair:
    profile = column_profile(P)
    if profile is None:
        raise NotParallelogram(f"{P!r} is not a parallelogram polyomino")
    u, l = [], []
    prev_top = 0
    prev_bottom = profile[0][0]
    for bottom, top in profile:
        u.append("1" * (top - prev_top) + "0")
        l.append("1" * (bottom - prev_bottom) + "0")
        prev_top, prev_bottom = top, bottom
    l.append("1" * (profile[-1][1] - profile[-1][0]))
    pp = PathPair("".join(u), "".join(l))
    if from_paths(pp) != P:
        raise NotParallelogram("path reconstruction did not round-trip")
    return pp


def _walk(word: str) -> list[tuple[int, int]]:
    pts = [(0, 0)]
    x = y = 0
    for ch in word:
        if ch == "1":
            y += 1
        else:
            x += 1
        pts.append((x, y))
    return pts


def from_paths(pp: PathPair) -> Polyomino:
    """Cells enclosed between the upper and lower paths."""
    u, l = pp.u, pp.l
    if len(u) != len(l) or u.count("1") != l.count("1"):
        raise EndpointMismatch(f"paths {u!r}, {l!r} do not share both endpoints")
    if not u:
        raise EndpointMismatch("empty paths")
    if u == l:
        # includes the length-1 words, where the paths coincide and enclose nothing
        raise PathsCross("paths coincide and enclose no cell")
    up, lo = _walk(u), _walk(l)
    for k in range(1, len(u)):
        # after k steps both points lie on x + y = k; upper must be strictly higher
        if up[k][1] <= lo[k][1]:
            raise PathsCross(f"paths touch or cross after {k} steps")
    m = u.count("0")
    top = [0] * m
    bottom = [None] * m
    for (x0, y0), (x1, y1) in zip(up, up[1:]):
        if x1 > x0:
            top[x0] = y0
    for (x0, y0), (x1, y1) in zip(lo, lo[1:]):
        if x1 > x0:
            bottom[x0] = y0
    cells = [(x, y) for x in range(m) for y in range(bottom[x], top[x])]
    return Polyomino(cells)


# -- maximal rectangles ------------------------------------------------------


def _require_profile(P: Polyomino) -> list[tuple[int, int]]:
    profile = column_profile(P)
    if profile is None:
        raise NotParallelogram(f"{P!r} is not a parallelogram polyomino")
    return profile


def maximal_rectangles(P: Polyomino) -> list[MaxRectangle]:
    """Inclusion-maximal inner rectangles, ordered by lower-left corner ``(y, x)``."""
    profile = _require_profile(P)
    w = len(profile)
    out = []
    for x1 in range(w):
        lo, hi = profile[x1]
        for x2 in range(x1, w):
            lo = max(lo, profile[x2][0])
            hi = min(hi, profile[x2][1])
            if lo >= hi:
                break
            left_ok = x1 == 0 or not (profile[x1 - 1][0] <= lo and profile[x1 - 1][1] >= hi)
            right_ok = x2 == w - 1 or not (profile[x2 + 1][0] <= lo and profile[x2 + 1][1] >= hi)
            if left_ok and right_ok:
                out.append(MaxRectangle(Interval((x1, lo), (x2 + 1, hi))))
    out.sort(key=lambda R: (R.interval.lo[1], R.interval.lo[0], R.interval.hi[1], R.interval.hi[0]))
    return out


def _rectangles_with_vertex(P: Polyomino, v) -> list[MaxRectangle]:
    return [R for R in maximal_rectangles(P) if v in R.interval.vertices()]


def min_rectangle(P: Polyomino) -> MaxRectangle:
    """The unique maximal rectangle having ``(0, 0)`` as a vertex."""
    found = _rectangles_with_vertex(P, (0, 0))
    if len(found) != 1:
        raise AssertionError(f"expected one maximal rectangle at the origin, found {len(found)}")
    return found[0]


def max_rectangle(P: Polyomino) -> MaxRectangle:
    """The unique maximal rectangle having the top-right vertex ``(m, n)``."""
    found = _rectangles_with_vertex(P, (P.width, P.height))
    if len(found) != 1:
        raise AssertionError(f"expected one maximal rectangle at the top corner, found {len(found)}")
    return found[0]


def _private_cells(P: Polyomino, R: MaxRectangle, rects: list[MaxRectangle]) -> frozenset:
    others = set()
    for S in rects:
        if S != R:
            others.update(S.cells)
    return frozenset(c for c in R.cells if c not in others)


def _maximal_subrectangles(region: frozenset, square: bool) -> list[Interval]:
    """Inclusion-maximal rectangles (or squares) made of cells of ``region``."""
    if not region:
        return []
    xs = sorted({c[0] for c in region})
    ys = sorted({c[1] for c in region})
    found = []
    for i in xs:
        for j in ys:
            if (i, j) not in region:
                continue
            for k in range(i + 1, xs[-1] + 2):
                for l in range(j + 1, ys[-1] + 2):
                    if square and k - i != l - j:
                        continue
                    if all((x, y) in region for x in range(i, k) for y in range(j, l)):
                        found.append(Interval((i, j), (k, l)))
    maximal = [
        I
        for I in found
        if not any(
            J != I and J.lo[0] <= I.lo[0] and J.lo[1] <= I.lo[1] and J.hi[0] >= I.hi[0] and J.hi[1] >= I.hi[1]
            for J in found
        )
    ]
    maximal.sort(key=lambda I: (-I.width * I.height, I.lo[1], I.lo[0]))
    return maximal


def single_squares(P: Polyomino, R: MaxRectangle, rects: list[MaxRectangle] | None = None) -> list[Interval]:
    """Inclusion-maximal squares of R sharing no cell with another maximal rectangle.

    Sorted by size descending.  Every smaller single square lies inside one
    of these, so "R has a unique single square" means this list has length 1.
    """
    rects = maximal_rectangles(P) if rects is None else rects
    return _maximal_subrectangles(_private_cells(P, R, rects), square=True)


def single_rectangles(P: Polyomino, R: MaxRectangle, rects: list[MaxRectangle] | None = None) -> list[Interval]:
    """Inclusion-maximal rectangles of R sharing no cell with another maximal rectangle."""
    rects = maximal_rectangles(P) if rects is None else rects
    return _maximal_subrectangles(_private_cells(P, R, rects), square=False)


def has_s_property(P: Polyomino) -> bool:
    """Every maximal rectangle has exactly one (maximal) single square."""
    rects = maximal_rectangles(P)
    return all(len(single_squares(P, R, rects)) == 1 for R in rects)


# -- shortenability and derived sequences ------------------------------------


def _remove(P: Polyomino, R: MaxRectangle) -> Polyomino | None:
    """P minus R as a parallelogram polyomino, or None if it is not one."""
    rest = P.cell_set - R.cell_set()
    if not rest:
        return None
    try:
        Q = Polyomino(rest)
    except ValueError:
        return None
    return Q if is_parallelogram(Q) else None


def _shortenable_by_sizes(P: Polyomino, R0: MaxRectangle) -> bool:
    (s, t) = R0.size
    singles = single_rectangles(P, R0)
    origin = [I for I in singles if I.lo == (0, 0)]
    if len(origin) != 1:
        raise AssertionError(f"min rectangle of {P!r} lacks a unique single rectangle at the origin")
    I = origin[0]
    return I.width == s or I.height == t


def is_shortenable(P: Polyomino) -> bool:
    """P minus its min-corner maximal rectangle is again a parallelogram.

    The direct removal test is cross-checked against the width/height
    criterion on the single rectangle of that min-corner rectangle.
    """
    _require_profile(P)
    if is_rectangle(P):
        raise IsRectangle("shortenability is defined for non-rectangles only")
    R0 = min_rectangle(P)
    direct = _remove(P, R0) is not None
    by_size = _shortenable_by_sizes(P, R0)
    if direct != by_size:
        raise AssertionError(f"shortenability tests disagree on {P!r}: removal={direct}, sizes={by_size}")
    return direct


def derived_sequence(P: Polyomino) -> DerivedSequence:
    _require_profile(P)
    stages: list[Polyomino] = []
    removed: list[MaxRectangle] = []
    current = P
    while not is_rectangle(current):
        R = min_rectangle(current)
        removed.append(R)
        nxt = _remove(current, R)
        if nxt is None:
            rest = tuple(sorted(current.cell_set - R.cell_set(), key=lambda c: (c[1], c[0])))
            return DerivedSequence(stages, "failure", removed, rest)
        stages.append(nxt)
        current = nxt
    return DerivedSequence(stages, "rectangle", removed)


def is_well_shortenable(P: Polyomino) -> bool:
    return not is_rectangle(P) and derived_sequence(P).well_shortenable


# -- Gorenstein decision -----------------------------------------------------

S_PROPERTY = "s_property"
PURITY = "purity"
MOTZKIN = "motzkin"
ALL = "all"
METHODS = (S_PROPERTY, PURITY, MOTZKIN)


def gorenstein_verdicts(P: Polyomino) -> dict[str, bool]:
    """Verdict of each independent test, keyed by method name."""
    from .lattice import is_pure, join_irreducibles
    from .motzkin import encode, gorenstein_blocks

    pp = detect(P)
    return {
        S_PROPERTY: has_s_property(P),
        PURITY: is_pure(join_irreducibles(P)),
        MOTZKIN: gorenstein_blocks(encode(pp)),
    }


def is_gorenstein(P: Polyomino, method: str = S_PROPERTY) -> bool:
    """Gorensteinness of K[P] for a parallelogram polyomino P.

    ``method="all"`` runs the S-property, join-irreducible purity and Motzkin
    block tests and raises MethodsDisagree (with a report) on any split.
    """
    _require_profile(P)
    if method == ALL:
        verdicts = gorenstein_verdicts(P)
        if len(set(verdicts.values())) != 1:
            raise MethodsDisagree(disagreement_report(P, verdicts))
        return verdicts[S_PROPERTY]
    if method == S_PROPERTY:
        return has_s_property(P)
    if method == PURITY:
        from .lattice import is_pure, join_irreducibles

        return is_pure(join_irreducibles(P))
    if method == MOTZKIN:
        from .motzkin import encode, gorenstein_blocks

        return gorenstein_blocks(encode(detect(P)))
    raise ValueError(f"unknown method {method!r}")


def disagreement_report(P: Polyomino, verdicts: dict[str, bool]) -> dict:
    from .lattice import join_irreducibles, poset_chain_lengths
    from .motzkin import encode

    rects = maximal_rectangles(P)
    return {
        "cells": P.to_list(),
        "verdicts": verdicts,
        "single_squares": {
            str(R.interval): [list(map(list, I)) for I in single_squares(P, R, rects)] for R in rects
        },
        "chain_lengths": sorted(poset_chain_lengths(join_irreducibles(P))),
        "word": str(encode(detect(P))),
    }
