"""Hypothesis strategies shared by the test modules."""

from hypothesis import assume
from hypothesis import strategies as st

from polyrook.enumerate import enumerate_fixed
from polyrook.grid import Polyomino, is_simple
from polyrook.parallelogram import is_parallelogram


@st.composite
def polyominoes(draw, min_rank=1, max_rank=8, simple=True):
    """Random growth from one cell; each step adds a frontier cell."""
    n = draw(st.integers(min_rank, max_rank))
    cells = {(0, 0)}
    while len(cells) < n:
        frontier = sorted(
            {(x + dx, y + dy) for x, y in cells for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1))} - cells
        )
        cells.add(draw(st.sampled_from(frontier)))
    P = Polyomino(cells)
    if simple:
        assume(is_simple(P))
    return P


_PARALLELOGRAMS: dict[int, list] = {}


def parallelograms_of_rank(n: int) -> list[Polyomino]:
    if n not in _PARALLELOGRAMS:
        _PARALLELOGRAMS[n] = [P for P in enumerate_fixed(n) if is_parallelogram(P)]
    return _PARALLELOGRAMS[n]


def parallelograms_up_to(n: int) -> list[Polyomino]:
    return [P for k in range(1, n + 1) for P in parallelograms_of_rank(k)]


def parallelograms(max_rank=8):
    return st.integers(1, max_rank).flatmap(lambda k: st.sampled_from(parallelograms_of_rank(k)))
