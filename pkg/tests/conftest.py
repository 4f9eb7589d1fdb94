import pytest
from hypothesis import settings

from polyrook.grid import Polyomino

# strategies build exhaustive pools lazily on first draw, which trips per-example deadlines
settings.register_profile("polyrook", deadline=None, print_blob=True)
settings.load_profile("polyrook")

SHAPES = {
    "CELL": [(0, 0)],
    "DOM": [(0, 0), (1, 0)],
    "SQ2": [(0, 0), (1, 0), (0, 1), (1, 1)],
    "P7": [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (0, 2), (2, 2)],
    "STAIR5": [(0, 0), (1, 0), (2, 0), (2, 1), (2, 2)],
    "PAR8": [(0, 0), (1, 0), (1, 1), (2, 1), (1, 2), (2, 2), (3, 2), (2, 3), (3, 3)],
    "GOR9": [(0, 0), (0, 1), (1, 1), (2, 1), (3, 1), (2, 2), (3, 2), (2, 3), (3, 3)],
    "ZIGZAG5": [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)],
    "RING": [(0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2), (2, 2)],
}


def shape(name: str) -> Polyomino:
    return Polyomino(SHAPES[name])


@pytest.fixture
def shapes():
    return {k: Polyomino(v) for k, v in SHAPES.items()}
