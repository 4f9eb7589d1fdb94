"""Exhaustive generation of fixed polyominoes.

Uses Redelmeier's growth scheme: polyominoes are grown from the origin inside
the half-plane ``y > 0 or (y == 0 and x >= 0)``; every cell is offered to the
untried set at most once along a branch, so each fixed polyomino appears
exactly once and no duplicate table is needed.
"""

from __future__ import annotations

from typing import Iterator

from .errors import RankOutOfRange
from .grid import Polyomino, canonical_key, is_simple

MAX_ENUM_RANK = 14

DEDUP_NONE = "none"
DEDUP_D4 = "d4"


def _check_rank(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_ENUM_RANK:
        raise RankOutOfRange(f"rank must be in 1..{MAX_ENUM_RANK}, got {n!r}")


def _redelmeier(n: int) -> Iterator[list[tuple[int, int]]]:
    """Yield the cell list of every fixed n-omino (unnormalized, shared list)."""
    poly: list[tuple[int, int]] = []
    marked = {(0, 0)}

    def grow(untried: list[tuple[int, int]]):
        untried = list(untried)
        while untried:
            c = untried.pop()
            poly.append(c)
            if len(poly) == n:
                yield poly
            else:
                x, y = c
                fresh = []
                for nb in ((x + 1, y), (x, y + 1), (x - 1, y), (x, y - 1)):
                    if (nb[1] > 0 or (nb[1] == 0 and nb[0] >= 0)) and nb not in marked:
                        marked.add(nb)
                        fresh.append(nb)
                yield from grow(untried + fresh)
                for nb in fresh:
                    marked.discard(nb)
            poly.pop()

    yield from grow([(0, 0)])


def enumerate_fixed(n: int, shard: tuple[int, int] = (0, 1)) -> Iterator[Polyomino]:
    """Stream every fixed polyomino of rank ``n`` exactly once.

    ``shard=(i, k)`` keeps only the items whose stream position is ``i`` mod
    ``k``; the k shards partition the full stream.
    """
    _check_rank(n)
    index, count = shard
    if not 0 <= index < count:
        raise ValueError(f"bad shard {shard!r}")
    for pos, cells in enumerate(_redelmeier(n)):
        if pos % count == index:
            yield Polyomino(cells)


def enumerate_simple(
    n: int, dedup: str = DEDUP_NONE, shard: tuple[int, int] = (0, 1)
) -> Iterator[Polyomino]:
    """Stream the simple polyominoes of rank ``n``.

    With ``dedup="d4"`` only the canonical representative of each symmetry
    orbit is emitted; since every fixed polyomino is generated, each orbit's
    canonical member shows up exactly once without keeping a seen-set.
    """
    if dedup not in (DEDUP_NONE, DEDUP_D4):
        raise ValueError(f"unknown dedup mode {dedup!r}")
    for P in enumerate_fixed(n, shard):
        if dedup == DEDUP_D4 and P.sort_key != canonical_key(P.cells):
            continue
        if is_simple(P):
            yield P


def count_fixed(n: int) -> int:
    _check_rank(n)
    return sum(1 for _ in _redelmeier(n))
