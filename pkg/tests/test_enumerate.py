import pytest
from conftest import shape
from oracles import bfs_fixed, complement_components

from polyrook.enumerate import MAX_ENUM_RANK, count_fixed, enumerate_fixed, enumerate_simple
from polyrook.errors import RankOutOfRange
from polyrook.grid import canonical_form, is_simple

FIXED = [1, 2, 6, 19, 63, 216, 760, 2725, 9910]
# free simple polyominoes (rank 7 and up excludes the holed ones)
SIMPLE_D4 = [1, 1, 2, 5, 12, 35, 107, 363]


@pytest.mark.parametrize("n", range(1, 7))
def test_matches_bfs_oracle(n):
    got = [frozenset(map(tuple, P.cells)) for P in enumerate_fixed(n)]
    assert len(got) == len(set(got)) == FIXED[n - 1]
    if n <= 5:
        assert set(got) == bfs_fixed(n)
    else:
        assert len(bfs_fixed(n)) == len(got)


@pytest.mark.parametrize("n,want", list(enumerate(FIXED, start=1)))
def test_fixed_counts(n, want):
    assert count_fixed(n) == want


def test_every_item_has_rank_n():
    for n in range(1, 8):
        assert all(P.rank == n for P in enumerate_fixed(n))


def test_deterministic_order():
    assert list(enumerate_fixed(6)) == list(enumerate_fixed(6))


@pytest.mark.parametrize("n", [0, MAX_ENUM_RANK + 1, -3])
def test_rank_out_of_range(n):
    with pytest.raises(RankOutOfRange):
        list(enumerate_fixed(n))
    with pytest.raises(RankOutOfRange):
        list(enumerate_simple(n))


def test_bad_dedup():
    with pytest.raises(ValueError):
        list(enumerate_simple(3, "c4"))


def test_all_tetrominoes_simple():
    assert sum(1 for _ in enumerate_simple(4)) == 19


def test_simple_filter_is_exact():
    fixed = list(enumerate_fixed(8))
    simple = set(enumerate_simple(8))
    for P in fixed:
        assert (P in simple) == is_simple(P) == (complement_components(P.cells) == 1)


def test_rank_7_contains_p7():
    assert shape("P7") in set(enumerate_simple(7))


@pytest.mark.parametrize("n,want", list(enumerate(SIMPLE_D4, start=1)))
def test_d4_representatives(n, want):
    reps = list(enumerate_simple(n, "d4"))
    assert len(reps) == want
    assert all(canonical_form(P) == P for P in reps)
    orbits = {canonical_form(P) for P in enumerate_simple(n)}
    assert set(reps) == orbits


@pytest.mark.parametrize("k", [1, 2, 3, 5])
def test_shards_partition_stream(k):
    whole = list(enumerate_fixed(7))
    parts = [list(enumerate_fixed(7, (i, k))) for i in range(k)]
    assert sorted(P for part in parts for P in part) == sorted(whole)
    assert sum(map(len, parts)) == len(whole)


def test_bad_shard():
    with pytest.raises(ValueError):
        list(enumerate_fixed(3, (2, 2)))
