"""
Tests for slice domains, points and the colex rank.
"""

import numpy as np
import pytest

import slicejunta.core.domain as domain_module
from slicejunta.core.domain import (
    SliceDomain,
    SlicePoint,
    colex_supports,
    coordinate_pairs,
    point_matrix,
    ranks_of,
    slice_rank,
    slice_unrank,
    transposition_permutation,
    transposition_permutations,
    transposition_table,
)
from slicejunta.exceptions import PreconditionError


class TestSliceDomain:

    def test_size_and_max_degree(self):
        domain = SliceDomain(6, 2)
        assert domain.size == 15
        assert domain.max_degree == 2
        assert SliceDomain(7, 5).max_degree == 2

    @pytest.mark.parametrize("n,k", [(0, 0), (3, 4), (3, -1)])
    def test_invalid_domain(self, n, k):
        with pytest.raises(PreconditionError):
            SliceDomain(n, k)

    def test_points_in_rank_order(self, c42):
        supports = [p.support for p in c42.points()]
        assert supports == [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]


class TestRank:

    def test_colex_ranks_of_c42(self, c42):
        for expected, support in enumerate([(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]):
            assert slice_rank(SlicePoint(4, support), c42) == expected

    def test_first_point_has_rank_zero(self):
        assert slice_rank(SlicePoint(4, (1, 2))) == 0

    def test_unrank_inverts_rank(self, c63):
        for r in range(c63.size):
            assert slice_rank(slice_unrank(c63, r), c63) == r
        for support in colex_supports(6, 3):
            point = SlicePoint(6, support)
            assert slice_unrank(c63, slice_rank(point)) == point

    def test_rank_out_of_range(self, c42):
        with pytest.raises(PreconditionError):
            slice_unrank(c42, 6)
        with pytest.raises(PreconditionError):
            slice_unrank(c42, -1)

    def test_wrong_weight(self, c42):
        with pytest.raises(PreconditionError):
            slice_rank(SlicePoint(4, (1, 2, 3)), c42)

    def test_vectorised_ranks(self, c63):
        matrix = point_matrix(c63)
        assert ranks_of(matrix).tolist() == list(range(c63.size))


class TestPoints:

    def test_from_bits_and_back(self):
        point = SlicePoint.from_bits([0, 1, 1, 0, 1])
        assert point.support == (2, 3, 5)
        assert point.bits == (0, 1, 1, 0, 1)
        assert point.weight == 3

    def test_transpose(self):
        point = SlicePoint(4, (1, 3))
        assert point.transpose(1, 2).support == (2, 3)
        assert point.transpose(1, 3) == point

    def test_rejects_repeated_coordinates(self):
        with pytest.raises(PreconditionError):
            SlicePoint(4, (2, 2))


class TestTranspositions:

    def test_permutation_is_involution(self, c63):
        perm = transposition_permutation(c63, 2, 5)
        assert np.array_equal(perm[perm], np.arange(c63.size))

    def test_permutation_matches_point_swap(self, c52):
        perm = transposition_permutation(c52, 1, 4)
        for r, point in enumerate(c52.points()):
            assert perm[r] == slice_rank(point.transpose(1, 4))

    def test_same_coordinate_rejected(self, c42):
        with pytest.raises(PreconditionError):
            transposition_permutation(c42, 2, 2)

    def test_table_shape(self, c63):
        assert coordinate_pairs(4) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
        assert transposition_table(c63).shape == (15, 20)
        assert transposition_table(SliceDomain(1, 1)).shape == (0, 1)

    @pytest.mark.parametrize("stacked_entries", [1 << 24, 0])
    def test_permutations_match_table(self, monkeypatch, c63, stacked_entries):
        monkeypatch.setattr(domain_module, 'STACKED_TABLE_ENTRIES', stacked_entries)
        permutations = list(transposition_permutations(c63))
        assert np.array_equal(np.stack(permutations), transposition_table(c63))
