"""Pair-difference logic and the three counting variants.

The independent counting oracle used throughout: with occupancy indicator
matrices B1 (n1, n_sp) and B2 (n2, n_sp), the number of differing indices
between state i and state j is  N1 + N2 - 2 * (B1 @ B2.T)[i, j]  — a single
matmul replaces all pairwise walks.
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cimotifs.mbstate import make_basis, random_basis
from cimotifs.sparsity import (
    COUNT_VARIANTS,
    InteractionRank,
    PairCounts,
    count_difference,
    count_pairs,
    pair_interacts_bitrep,
)


def occupancy_matrix(basis) -> np.ndarray:
    out = np.zeros((len(basis), basis.n_sp), dtype=np.float32)
    for i, s in enumerate(basis):
        out[i, np.asarray(s.occ) - 1] = 1.0
    return out


def oracle_counts(rows, cols, threshold: int) -> PairCounts:
    """Matmul-based difference counting; float32 is exact at these sizes."""
    b1, b2 = occupancy_matrix(rows), occupancy_matrix(cols)
    shared = b1 @ b2.T
    diff = rows.n_particles + cols.n_particles - 2.0 * shared
    per_row = (diff <= threshold).sum(axis=1).astype(np.int64)
    return PairCounts(per_row=per_row, total=int(per_row.sum()))


occ_pairs = st.tuples(
    st.lists(st.integers(1, 60), min_size=1, max_size=10, unique=True).map(sorted),
    st.lists(st.integers(1, 60), min_size=1, max_size=10, unique=True).map(sorted),
)


class TestCountDifference:
    def test_worked_examples(self):
        assert count_difference((1, 2, 5, 7), (2, 3, 6, 8)) == 6
        assert count_difference((1, 2, 3), (1, 2, 3)) == 0
        assert count_difference((1, 2), (3, 4)) == 4
        # unequal particle numbers: the walk stops when either list runs
        # out, leaving the longer list's tail uncounted
        assert count_difference((1,), (1, 2, 3)) == 0
        assert count_difference((5,), (1, 2)) == 4

    def test_identical_singletons(self):
        assert count_difference((7,), (7,)) == 0

    @given(occ_pairs)
    def test_matches_symmetric_difference_when_equal_n(self, pair):
        occ1, occ2 = pair
        if len(occ1) != len(occ2):
            occ2 = occ2[: len(occ1)]
            if len(occ2) < len(occ1):
                occ1 = occ1[: len(occ2)]
        got = count_difference(tuple(occ1), tuple(occ2))
        assert got == len(set(occ1) ^ set(occ2))

    @given(occ_pairs)
    def test_symmetric_and_even(self, pair):
        occ1, occ2 = tuple(pair[0]), tuple(pair[1])
        d = count_difference(occ1, occ2)
        assert d == count_difference(occ2, occ1)
        assert d % 2 == 0
        assert d >= 0

    def test_accepts_states(self):
        b = make_basis([(1, 2, 5, 7), (2, 3, 6, 8)], 16)
        assert count_difference(b[0], b[1]) == 6


class TestBitrepPredicate:
    def test_examples(self):
        r2 = InteractionRank(2)  # threshold 4
        assert pair_interacts_bitrep(0b111, 0b111, r2)
        assert pair_interacts_bitrep(0b0011, 0b0101, r2)  # differ in 2 bits
        assert not pair_interacts_bitrep(0b001111, 0b110000, r2)  # 6 bits

    @given(st.integers(0, 2**64 - 1), st.integers(0, 2**64 - 1), st.integers(1, 4))
    def test_is_xor_popcount(self, b1, b2, d):
        rank = InteractionRank(d)
        want = (b1 ^ b2).bit_count() <= rank.threshold
        assert pair_interacts_bitrep(b1, b2, rank) == want


class TestInteractionRank:
    def test_threshold_is_twice_rank(self):
        assert InteractionRank().threshold == 4
        assert InteractionRank(1).threshold == 2
        assert InteractionRank(3).threshold == 6

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            InteractionRank(0)


class TestCountPairs:
    def test_tiny_example_all_variants(self):
        # states within the 64-bit window: all variants fully resolved
        rows = make_basis([(1, 2), (1, 3), (5, 6)], 64)
        cols = make_basis([(1, 2), (2, 3), (7, 8)], 64)
        # rank-1 threshold 2; row diffs: (0,2,4), (2,2,4), (4,4,4)
        for variant in COUNT_VARIANTS:
            pc = count_pairs(rows, cols, InteractionRank(1), variant)
            assert pc.per_row.tolist() == [2, 2, 0]
            assert pc.total == 4

    @pytest.mark.parametrize("variant", COUNT_VARIANTS)
    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_against_matmul_oracle(self, variant, d):
        rank = InteractionRank(d)
        rows = random_basis(192, 6, bias=0.15, seed=21)
        cols = random_basis(160, 6, bias=0.15, seed=22)
        got = count_pairs(rows, cols, rank, variant)
        want = oracle_counts(rows, cols, rank.threshold)
        assert got == want

    @settings(max_examples=20)
    @given(
        st.integers(0, 100),
        st.sampled_from([1, 2, 3]),
        st.sampled_from([4, 8]),
    )
    def test_variants_agree(self, seed, d, n_particles):
        rows = random_basis(96, n_particles, bias=0.2, seed=seed)
        cols = random_basis(96, n_particles, bias=0.2, seed=seed + 1)
        rank = InteractionRank(d)
        results = [count_pairs(rows, cols, rank, v) for v in COUNT_VARIANTS]
        assert results[0] == results[1] == results[2]

    def test_worker_count_does_not_change_result(self):
        rows = random_basis(128, 8, bias=0.1, seed=5)
        one = count_pairs(rows, rows, InteractionRank(), "combined", workers=1)
        many = count_pairs(rows, rows, InteractionRank(), "combined", workers=8)
        assert one == many

    def test_diagonal_pairs_always_interact(self):
        b = random_basis(64, 8, seed=9)
        pc = count_pairs(b, b, InteractionRank(), "combined")
        assert np.all(pc.per_row >= 1)
        assert pc.total >= len(b)

    def test_rejects_mismatched_bases(self):
        a = random_basis(8, 4, n_sp=64, seed=0)
        b = random_basis(8, 5, n_sp=64, seed=0)
        c = random_basis(8, 4, n_sp=128, seed=0)
        with pytest.raises(ValueError):
            count_pairs(a, b, InteractionRank(), "combined")
        with pytest.raises(ValueError):
            count_pairs(a, c, InteractionRank(), "combined")

    def test_rejects_unknown_variant(self):
        a = random_basis(8, 4, seed=0)
        with pytest.raises(ValueError):
            count_pairs(a, a, InteractionRank(), "fastest")

    def test_bitrep_only_needs_two_words(self):
        a = random_basis(8, 4, n_sp=129, seed=0)
        with pytest.raises(ValueError):
            count_pairs(a, a, InteractionRank(), "bitrep_only")
        # but the exact variants handle any width
        count_pairs(a, a, InteractionRank(), "mbs_only")
        count_pairs(a, a, InteractionRank(), "combined")


class TestPairCounts:
    def test_validates_total(self):
        with pytest.raises(ValueError):
            PairCounts(per_row=np.array([1, 2], dtype=np.int64), total=4)
        with pytest.raises(ValueError):
            PairCounts(per_row=np.array([-1], dtype=np.int64), total=-1)

    def test_equality_semantics(self):
        a = PairCounts(per_row=np.array([1, 2], dtype=np.int64), total=3)
        b = PairCounts(per_row=np.array([1, 2], dtype=np.int64), total=3)
        c = PairCounts(per_row=np.array([2, 1], dtype=np.int64), total=3)
        assert a == b
        assert a != c
