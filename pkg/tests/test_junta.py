"""
Tests for zero-influence partitions, minimal juntas and the junta arguments.
"""

import pytest

from slicejunta.analysis import (
    induction_union,
    is_junta,
    junta_table,
    matching_cover,
    minimal_junta,
    partition_from_zero_pairs,
    restriction_witnesses,
    zero_influence_partition,
)
from slicejunta.core import SliceDomain, SliceFunction
from slicejunta.exceptions import ClaimViolation


class TestPartition:

    def test_dictator_classes(self, dictator42):
        partition = zero_influence_partition(dictator42)
        assert partition.classes == ((1,), (2, 3, 4))
        assert partition.largest_size == 3
        assert partition.class_of(3) == (2, 3, 4)

    def test_non_transitive_zero_pairs(self):
        with pytest.raises(ClaimViolation):
            partition_from_zero_pairs(3, [(1, 2), (2, 3)])

    def test_singletons(self):
        partition = partition_from_zero_pairs(3, [])
        assert partition.classes == ((1,), (2,), (3,))


class TestMinimalJunta:

    def test_dictator(self, dictator42):
        certificate = minimal_junta(dictator42)
        assert certificate.witness == (1,)
        assert certificate.table == (0, 1)
        assert certificate.size == 1
        assert certificate.relevant() == (1,)

    def test_constant(self, c63):
        certificate = minimal_junta(SliceFunction.constant(c63, 1))
        assert certificate.witness == ()
        assert certificate.table == (1,)

    def test_tie_takes_smallest_witness(self, c42):
        f = SliceFunction.from_callable(c42, lambda p: sum(1 for s in p.support if s <= 2))
        certificate = minimal_junta(f)
        assert certificate.witness == (1, 2)
        assert certificate.table == (0, 1, 1, 2)
        assert certificate.value([1, 1]) == 2

    def test_unrealised_patterns(self):
        f = SliceFunction.dictator(SliceDomain(4, 1), 1)
        table = junta_table(f, (1, 2))
        assert table == (0, 1, 0, None)

    def test_not_a_junta_on_witness(self, dictator42):
        with pytest.raises(ClaimViolation):
            junta_table(dictator42, (2,))

    def test_is_junta(self, dictator42):
        assert is_junta(dictator42, (1,))
        assert is_junta(dictator42, (1, 3))
        assert not is_junta(dictator42, (2,))

    def test_size_matches_largest_class(self, c63):
        f = SliceFunction.from_callable(c63, lambda p: int(1 in p.support and 2 in p.support))
        certificate = minimal_junta(f)
        assert certificate.size == 6 - certificate.partition.largest_size
        assert certificate.witness == (1, 2)


class TestJuntaArguments:

    def test_restriction_witnesses(self, dictator42):
        witnesses = restriction_witnesses(dictator42, 0)
        assert witnesses[0].witness == ()
        assert witnesses[1].witness == (1,)
        assert witnesses[1].relevant == (1,)

    def test_induction_union(self, dictator42):
        report = induction_union(dictator42, 0)
        assert report.union == (1,)
        assert report.is_junta

    def test_matching_cover(self, dictator42):
        cover = matching_cover(dictator42)
        assert cover.edges == ((1, 2), (1, 3), (1, 4))
        assert cover.matching == ((1, 2),)
        assert cover.cover == (1, 2)
        assert cover.is_junta
        assert cover.edge_lower_bound == 1
        assert cover.counting_bound_holds

    def test_matching_cover_of_constant(self, c42):
        cover = matching_cover(SliceFunction.constant(c42, 0))
        assert cover.edges == ()
        assert cover.cover == ()
        assert cover.is_junta
