from fractions import Fraction
from itertools import product

import pytest

from wmatch.graphs import BipartiteGraph, WeightAssignment
from wmatch.isolation import (
    enumerate_nonisolating,
    is_nonisolating,
    nonisolating_fraction,
    nonisolating_witness,
)
from wmatch.oracle import BudgetExceededError, brute_min_weight_pms

K22 = BipartiteGraph.complete(2)
DIAG2 = BipartiteGraph.from_rows([[1, 0], [0, 1]])
# three-vertex graph with exactly two perfect matchings (identity and
# the 0<->1 swap); edge (2, 2) is in both.
SWAP3 = BipartiteGraph.from_rows([[1, 1, 0], [1, 1, 0], [0, 0, 1]])


def assignments(g, k):
    for values in product(range(1, k + 1), repeat=g.num_edges):
        yield WeightAssignment.from_edge_values(g, values)


def oracle_bad(g, w):
    return len(brute_min_weight_pms(g, w).matchings) >= 2


class TestIsNonisolating:
    def test_unique_pm_never_bad(self):
        for w in assignments(DIAG2, 2):
            assert not is_nonisolating(DIAG2, w, 2)

    def test_equal_weights_tie(self):
        w = WeightAssignment.from_grid([[1, 1], [1, 1]])
        assert is_nonisolating(K22, w, 1)

    def test_pm_free_graph_never_bad(self):
        g = BipartiteGraph.from_rows([[0, 0], [1, 1]])
        for w in assignments(g, 2):
            assert not is_nonisolating(g, w, 2)

    def test_matches_oracle_exhaustively_k3(self):
        for w in assignments(K22, 3):
            assert is_nonisolating(K22, w, 3) == oracle_bad(K22, w)

    def test_weight_out_of_range(self):
        with pytest.raises(ValueError):
            is_nonisolating(K22, WeightAssignment.from_grid([[0, 1], [1, 1]]), 2)
        with pytest.raises(ValueError):
            is_nonisolating(K22, WeightAssignment.from_grid([[3, 1], [1, 1]]), 2)


ALL_ONES = WeightAssignment.from_grid([[1, 1], [1, 1]])


class TestWitness:
    def test_hand_example_splice(self):
        # e_0 = (0,0), remaining weights all 1: the minimum matching of
        # K22 minus e_0 weighs 2, the one left after deleting both
        # endpoints weighs 1, so weight 1 is spliced in.
        out = nonisolating_witness(K22, 2, 0, (1, 1, 1), ALL_ONES)
        assert out == ALL_ONES
        assert is_nonisolating(K22, out, 2)

    def test_dummy_when_deletion_kills_pms(self):
        dummy = WeightAssignment.from_grid(
            [[1, 1, 0], [1, 1, 0], [0, 0, 1]]
        )
        assert is_nonisolating(SWAP3, dummy, 2)
        i = SWAP3.edge_list().index((2, 2))
        out = nonisolating_witness(SWAP3, 2, i, (1, 1, 1, 1), dummy)
        assert out == dummy

    def test_dummy_when_splice_out_of_range(self):
        # weights force w(M') - w(M1) = 0, outside [1, k].
        out = nonisolating_witness(K22, 2, 0, (1, 1, 2), ALL_ONES)
        assert out == ALL_ONES

    def test_bad_edge_index(self):
        with pytest.raises(ValueError):
            nonisolating_witness(K22, 2, 4, (1, 1, 1), ALL_ONES)

    def test_wrong_rest_length(self):
        with pytest.raises(ValueError):
            nonisolating_witness(K22, 2, 0, (1, 1), ALL_ONES)

    def test_rest_out_of_range(self):
        with pytest.raises(ValueError):
            nonisolating_witness(K22, 2, 0, (1, 3, 1), ALL_ONES)

    def test_isolating_dummy_rejected(self):
        isolating = WeightAssignment.from_grid([[1, 2], [2, 1]])
        assert not is_nonisolating(K22, isolating, 2)
        with pytest.raises(ValueError):
            nonisolating_witness(K22, 2, 0, (1, 1, 1), isolating)

    def test_soundness_every_output_bad(self):
        k = 3
        for i in range(4):
            for rest in product(range(1, k + 1), repeat=3):
                out = nonisolating_witness(K22, k, i, rest, ALL_ONES)
                assert is_nonisolating(K22, out, k)

    def test_surjective_k22(self):
        for k in (2, 3):
            bad = set(enumerate_nonisolating(K22, k))
            hits = {
                nonisolating_witness(K22, k, i, rest, ALL_ONES)
                for i in range(4)
                for rest in product(range(1, k + 1), repeat=3)
            }
            assert bad <= hits

    def test_surjective_noncomplete(self):
        k = 2
        bad = list(enumerate_nonisolating(SWAP3, k))
        assert bad
        m = SWAP3.num_edges
        hits = {
            nonisolating_witness(SWAP3, k, i, rest, bad[0])
            for i in range(m)
            for rest in product(range(1, k + 1), repeat=m - 1)
        }
        assert set(bad) <= hits


class TestFraction:
    def test_unique_pm_graph_zero(self):
        assert nonisolating_fraction(DIAG2, 3) == 0

    def test_k22_counts(self):
        # On K22 the minimum ties exactly when the two diagonals weigh
        # the same, giving sum-of-squares counts: frozen anchors below.
        expected = {2: 6, 3: 19, 4: 44}
        for k in (2, 3, 4):
            bad_count = sum(1 for w in assignments(K22, k) if oracle_bad(K22, w))
            assert bad_count == expected[k]
            frac = nonisolating_fraction(K22, k)
            assert frac == Fraction(bad_count, k**4)
            assert frac <= Fraction(4, k)
            assert bad_count <= 4 * k**3

    def test_budget_guard(self):
        with pytest.raises(BudgetExceededError):
            nonisolating_fraction(K22, 100, budget=10)

    def test_enumeration_is_lexicographic(self):
        bad = [w.edge_values(K22) for w in enumerate_nonisolating(K22, 2)]
        assert bad == sorted(bad)
