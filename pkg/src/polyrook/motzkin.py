"""Two-coloured Motzkin words of parallelogram polyominoes.

Column k of the matrix with rows (u, l) is coded as
``(1,0) -> R`` (rise), ``(0,1) -> F`` (fall), ``(1,1) -> A`` (alpha
horizontal), ``(0,0) -> B`` (beta horizontal).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, Sequence

from .errors import EndpointMismatch, InvalidPair, InvalidWord, PathsCross
from .parallelogram import PathPair, from_paths


class Step(str, enum.Enum):
    RISE = "R"
    FALL = "F"
    HORIZ_A = "A"
    HORIZ_B = "B"

    @property
    def height_change(self) -> int:
        return {"R": 1, "F": -1}.get(self.value, 0)


_CODE = {("1", "0"): Step.RISE, ("0", "1"): Step.FALL, ("1", "1"): Step.HORIZ_A, ("0", "0"): Step.HORIZ_B}
_DECODE = {s: pair for pair, s in _CODE.items()}
_REFLECT = {Step.RISE: Step.FALL, Step.FALL: Step.RISE, Step.HORIZ_A: Step.HORIZ_A, Step.HORIZ_B: Step.HORIZ_B}

UP_STEPS = frozenset({Step.RISE, Step.HORIZ_A})
DOWN_STEPS = frozenset({Step.FALL, Step.HORIZ_B})


def _as_steps(steps: Iterable) -> tuple[Step, ...]:
    out = []
    for s in steps:
        try:
            out.append(Step(s.value if isinstance(s, Step) else str(s).upper()))
        except ValueError as exc:
            raise InvalidWord(f"unknown Motzkin step {s!r}") from exc
    return tuple(out)


@dataclass(frozen=True)
class MotzkinWord:
    """A word over R, F, A, B whose height never goes negative and ends at 0."""

    steps: tuple[Step, ...]

    def __post_init__(self):
        steps = _as_steps(self.steps)
        object.__setattr__(self, "steps", steps)
        h = 0
        for i, s in enumerate(steps):
            h += s.height_change
            if h < 0:
                raise InvalidWord(f"height drops below zero at step {i + 1}")
        if h != 0:
            raise InvalidWord(f"word ends at height {h}, not 0")

    @classmethod
    def parse(cls, text: str) -> MotzkinWord:
        return cls(tuple(ch for ch in text if not ch.isspace()))

    def __str__(self):
        return "".join(s.value for s in self.steps)

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


def encode(pp: PathPair) -> MotzkinWord:
    if len(pp.u) != len(pp.l):
        raise InvalidPair("paths have different lengths")
    try:
        from_paths(pp)
    except (PathsCross, EndpointMismatch) as exc:
        raise InvalidPair(str(exc)) from exc
    return MotzkinWord(tuple(_CODE[a, b] for a, b in zip(pp.u, pp.l)))


def decode(w: MotzkinWord | str | Sequence) -> PathPair:
    if not isinstance(w, MotzkinWord):
        w = MotzkinWord.parse(w) if isinstance(w, str) else MotzkinWord(tuple(w))
    u = "".join(_DECODE[s][0] for s in w.steps)
    l = "".join(_DECODE[s][1] for s in w.steps)
    pp = PathPair(u, l)
    try:
        from_paths(pp)
    except (PathsCross, EndpointMismatch) as exc:
        raise InvalidWord(f"{w} does not encode a parallelogram polyomino: {exc}") from exc
    return pp


def reflect(w: MotzkinWord | Sequence[Step]) -> tuple[Step, ...]:
    """Mirror through the x-axis: rises and falls swap, colours stay."""
    steps = w.steps if isinstance(w, MotzkinWord) else _as_steps(w)
    return tuple(_REFLECT[s] for s in steps)


def _blocks(steps: Sequence[Step], first: frozenset) -> list[tuple[bool, int]]:
    """Maximal runs as ``(run is drawn from first, length)``."""
    return [(key, len(list(grp))) for key, grp in groupby(steps, key=lambda s: s in first)]


def _paired_runs(steps: Sequence[Step], first: frozenset) -> bool:
    """Each maximal run from ``first`` is followed by an equally long run of the rest."""
    runs = _blocks(steps, first)
    for i, (is_first, k) in enumerate(runs):
        if not is_first:
            continue
        if i + 1 >= len(runs) or runs[i + 1][1] != k:
            return False
    return True


def block_conditions(w: MotzkinWord) -> tuple[bool, bool]:
    """The two block conditions; a run's length counts every step in it."""
    cond1 = _paired_runs(w.steps, UP_STEPS)
    cond2 = _paired_runs(reflect(w), DOWN_STEPS)
    return cond1, cond2


def gorenstein_blocks(w: MotzkinWord) -> bool:
    c1, c2 = block_conditions(w)
    return c1 and c2


def ne_block_conditions(pp: PathPair) -> tuple[bool, bool]:
    """Block conditions read directly on the binary path words.

    Upper path: every maximal run of 1s is followed by a run of 0s of the same
    length.  Lower path: every maximal run of 0s is followed by an equally
    long run of 1s.
    """

    def paired(word: str, lead: str) -> bool:
        runs = [(ch, len(list(g))) for ch, g in groupby(word)]
        for i, (ch, k) in enumerate(runs):
            if ch == lead and (i + 1 >= len(runs) or runs[i + 1][1] != k):
                return False
        return True

    return paired(pp.u, "1"), paired(pp.l, "0")
