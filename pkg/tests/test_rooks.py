import pytest
from conftest import shape
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import brute_r_tilde, brute_rook_counts, oracle_attack, oracle_switches
from strategies import parallelograms, parallelograms_up_to, polyominoes

from polyrook.errors import SwitchBrokeInvariant
from polyrook.grid import Cell, Polyomino
from polyrook.rooks import (
    attacks,
    conflict_graph,
    equivalence_classes,
    is_non_attacking,
    is_ordered,
    r_tilde_polynomial,
    rook_levels,
    rook_number,
    rook_polynomial,
    rook_set,
    switch_partner,
    switches,
)

# letters of the seven-cell example: A B / C D E / F . G
A, B, C, D, E, F, G = (Cell(0, 0), Cell(1, 0), Cell(0, 1), Cell(1, 1), Cell(2, 1), Cell(0, 2), Cell(2, 2))


def is_thin(P):
    return not any(all((x + dx, y + dy) in P.cell_set for dx in (0, 1) for dy in (0, 1)) for x, y in P.cells)


class TestConflicts:
    def test_gap_blocks_attack(self):
        P7 = shape("P7")
        assert not attacks(P7, F, G)
        assert G not in conflict_graph(P7)[F]

    def test_same_column_attacks(self):
        assert attacks(shape("P7"), A, C)

    def test_dom(self):
        assert attacks(shape("DOM"), (0, 0), (1, 0))

    @given(polyominoes(simple=False), st.data())
    def test_matches_oracle(self, P, data):
        a = data.draw(st.sampled_from(P.cells))
        b = data.draw(st.sampled_from(P.cells))
        if a != b:
            assert attacks(P, a, b) == oracle_attack(P.cell_set, a, b)


class TestLevels:
    def test_p7(self):
        levels = rook_levels(shape("P7"))
        assert [len(L) for L in levels] == [1, 7, 12, 5]
        assert levels[0] == [()]
        assert rook_number(shape("P7")) == 3
        assert rook_set([F, G]) in levels[2]

    def test_sq2(self):
        assert [len(L) for L in rook_levels(shape("SQ2"))] == [1, 4, 2]

    def test_single_cell(self):
        assert [len(L) for L in rook_levels(shape("CELL"))] == [1, 1]

    def test_rook_polynomials(self):
        assert rook_polynomial(shape("P7")) == [1, 7, 12, 5]
        assert rook_polynomial(shape("STAIR5")) == [1, 5, 4]
        for n in range(1, 6):
            assert rook_polynomial(Polyomino([(x, 0) for x in range(n)])) == [1, n]

    @settings(max_examples=60)
    @given(polyominoes(max_rank=9))
    def test_matches_brute_force(self, P):
        levels = rook_levels(P)
        assert [len(L) for L in levels] == brute_rook_counts(P.cells)
        for L in levels:
            assert all(is_non_attacking(P, F) for F in L)
            assert len(set(L)) == len(L)


class TestSwitches:
    def test_two_rooks(self):
        assert switches(shape("P7"), rook_set([A, D])) == [rook_set([B, C])]

    def test_three_rooks(self):
        assert switches(shape("P7"), rook_set([A, D, G])) == [rook_set([B, C, G])]

    def test_antidiagonal_in_sq2(self):
        assert switches(shape("SQ2"), rook_set([B, C])) == [rook_set([A, D])]

    def test_partner_needs_inner_rectangle(self):
        # (0,0) and (2,1) span a 3x2 box missing (2,0)
        assert switch_partner(shape("P7"), A, E) is None

    def test_thin_has_no_switches(self):
        for name in ("STAIR5", "ZIGZAG5", "DOM"):
            P = shape(name)
            for level in rook_levels(P):
                assert all(switches(P, F) == [] for F in level)

    @settings(max_examples=60)
    @given(polyominoes(max_rank=9))
    def test_matches_oracle(self, P):
        for level in rook_levels(P):
            for Fs in level:
                got = {frozenset(G) for G in switches(P, Fs)}
                assert got == oracle_switches(P.cell_set, Fs)

    def test_invalid_switch_target_is_reported(self, monkeypatch):
        import polyrook.rooks as rooks

        monkeypatch.setattr(rooks, "is_non_attacking", lambda P, F: False)
        with pytest.raises(SwitchBrokeInvariant):
            rooks.switches(shape("SQ2"), rook_set([A, D]))


class TestClasses:
    def test_p7(self):
        P7 = shape("P7")
        assert len(equivalence_classes(P7, 2)) == 11
        assert len(equivalence_classes(P7, 3)) == 4
        assert r_tilde_polynomial(P7) == [1, 7, 11, 4]

    def test_sq2(self):
        (cl,) = equivalence_classes(shape("SQ2"), 2)
        assert cl.size == 2
        assert cl.representative == rook_set([A, D])
        assert r_tilde_polynomial(shape("SQ2")) == [1, 4, 1]

    def test_stair5(self):
        assert r_tilde_polynomial(shape("STAIR5")) == [1, 5, 4]

    def test_bad_k(self):
        with pytest.raises(ValueError):
            equivalence_classes(shape("SQ2"), 3)

    @settings(max_examples=60)
    @given(polyominoes(max_rank=9))
    def test_matches_bfs_oracle(self, P):
        assert r_tilde_polynomial(P).to_list() == brute_r_tilde(P.cells)

    @settings(max_examples=80)
    @given(polyominoes(max_rank=10))
    def test_basic_relations(self, P):
        r, rt = rook_polynomial(P), r_tilde_polynomial(P)
        assert rt.degree == r.degree == rook_number(P)
        assert rt[0] == r[0] == 1
        assert rt[1] == r[1] == P.rank
        assert all(rt[k] <= r[k] for k in range(len(r)))
        if is_thin(P):
            assert rt == r

    @settings(max_examples=40)
    @given(polyominoes(max_rank=9), st.randoms(use_true_random=False))
    def test_representatives_do_not_depend_on_order(self, P, rnd):
        levels = rook_levels(P)
        shuffled = [rnd.sample(L, len(L)) for L in levels]
        for k in range(len(levels)):
            a = equivalence_classes(P, k, levels)
            b = equivalence_classes(P, k, shuffled)
            assert [c.representative for c in a] == [c.representative for c in b]
            assert [set(c.members) for c in a] == [set(c.members) for c in b]
            for c in a:
                assert c.representative == min(c.members, key=lambda F: [(r.y, r.x) for r in F])

    def test_classes_closed_under_switch(self):
        P = shape("PAR8")
        levels = rook_levels(P)
        for k in range(len(levels)):
            for cl in equivalence_classes(P, k, levels):
                members = set(cl.members)
                for F in cl.members:
                    assert set(switches(P, F)) <= members


def test_each_parallelogram_class_has_one_ordered_member():
    for P in parallelograms_up_to(7):
        levels = rook_levels(P)
        for k in range(len(levels)):
            for cl in equivalence_classes(P, k, levels):
                assert sum(is_ordered(F) for F in cl.members) == 1


@settings(max_examples=40)
@given(parallelograms(max_rank=9))
def test_ordered_member_unique_random(P):
    levels = rook_levels(P)
    for k in range(len(levels)):
        for cl in equivalence_classes(P, k, levels):
            assert sum(is_ordered(F) for F in cl.members) == 1
