"""
Tests for the census harness and the dichotomy scan.
"""

from fractions import Fraction

import numpy as np
import pytest

from slicejunta.config import Capacity, RunConfig
from slicejunta.core import SliceDomain
from slicejunta.exceptions import CapacityError, ClaimViolation, PreconditionError
from slicejunta.verify import (
    AnchorStore,
    CheckpointCache,
    ShardResult,
    ShardTask,
    census,
    census_from_config,
    code_tables,
    degree_one_templates,
    dichotomy_scan,
    run_shard,
    sample_tables,
)


def _without_timing(report):
    data = report.to_dict()
    data.pop('timing')
    return data


class TestShards:

    def test_code_tables(self):
        assert code_tables(5, 7, 3).tolist() == [[1, 0, 1], [0, 1, 1]]

    def test_degree_one_templates(self, c42):
        assert degree_one_templates(c42).shape == (10, 6)

    def test_merge_is_associative(self):
        shards = [run_shard(ShardTask(4, 2, start, start + 16)) for start in range(0, 64, 16)]
        left = shards[0].merge(shards[1]).merge(shards[2].merge(shards[3]))
        right = shards[0].merge(shards[1].merge(shards[2])).merge(shards[3])
        assert left.to_json() == right.to_json()
        assert left.functions == 64

    def test_json_round_trip(self):
        result = run_shard(ShardTask(4, 2, 0, 64))
        assert ShardResult.from_json(result.to_json()).to_json() == result.to_json()

    def test_degree_filter(self):
        result = run_shard(ShardTask(4, 2, 0, 64, max_degree_filter=1))
        assert result.functions == 10
        assert result.degree_one == 10

    def test_chain_holds_on_every_pair(self):
        result = run_shard(ShardTask(4, 2, 0, 64, chain_rho=0.5))
        assert result.chain_pairs > 0
        assert 0 <= result.chain_hypercontractive <= result.chain_pairs
        assert result.chain_failures == 0
        assert result.chain_lower_failures == 0

    def test_chain_is_skipped_without_rho(self):
        result = run_shard(ShardTask(4, 2, 0, 64))
        assert result.chain_pairs == 0

    def test_sample_rows_do_not_depend_on_sharding(self):
        whole = sample_tables(7, 0, 6, 10)
        assert whole.shape == (6, 10)
        assert np.array_equal(sample_tables(7, 2, 5, 10), whole[2:5])
        assert sample_tables(7, 3, 3, 10).shape == (0, 10)


class TestCensus:

    def test_small_slice(self):
        report = census(4, 2)
        assert report.functions == 64
        assert report.degree_one_count == 10
        assert report.theorem_range
        assert report.min_nonzero_influence['1'] == '1/6'
        assert sum(row.count for row in report.counts) == 64
        assert report.eq1_constant == '1/2'
        assert report.passed

    @pytest.mark.parametrize("n,k", [(5, 2), (5, 3), (6, 2), (6, 3), (6, 4)])
    def test_degree_one_count(self, n, k):
        report = census(n, k, max_degree_filter=1)
        assert report.functions == 2 * n + 2
        assert report.degree_one_count == 2 * n + 2
        assert report.claims['degree_one_classified']
        assert report.claims['degree_one_count']

    def test_degree_one_counts_match_anchors(self):
        anchors = AnchorStore()
        for n, k in [(4, 2), (5, 2), (5, 3), (6, 2), (6, 3), (6, 4)]:
            assert anchors.degree_one_count(n, k) == 2 * n + 2

    def test_outside_theorem_range(self):
        report = census(4, 1)
        assert not report.theorem_range
        assert 'degree_one_count' not in report.claims
        assert report.passed

    def test_same_result_for_any_sharding(self):
        serial = census(5, 2, shard_size=1024)
        parallel = census(5, 2, workers=2, shard_size=100)
        assert _without_timing(serial) == {**_without_timing(parallel), 'shards': serial.shards}
        assert parallel.shards == 11

    def test_checkpoints_are_reused(self, tmp_path):
        first = census(4, 2, shard_size=16, checkpoint_dir=str(tmp_path))
        assert len(list(tmp_path.glob('*.json'))) == 4
        second = census(4, 2, shard_size=16, checkpoint_dir=str(tmp_path))
        assert _without_timing(first) == _without_timing(second)
        assert CheckpointCache(str(tmp_path)).clear() == 4

    def test_sample_mode(self):
        first = census(6, 3, mode='sample', samples=200, seed=4)
        second = census(6, 3, mode='sample', samples=200, seed=4)
        assert first.functions == 200
        assert first.seed == 4
        assert _without_timing(first) == _without_timing(second)

    def test_sample_mode_ignores_shard_size(self):
        small = census(6, 3, mode='sample', samples=50, seed=3, shard_size=7)
        large = census(6, 3, mode='sample', samples=50, seed=3, shard_size=50)
        assert small.shards == 8
        assert _without_timing(small) == {**_without_timing(large), 'shards': small.shards}

    def test_sample_mode_beyond_the_exact_capacity(self):
        report = census(16, 8, mode='sample', samples=2, seed=1, chain_rho=None)
        assert report.functions == 2
        assert report.eq1_constant is None
        assert sum(row.count for row in report.counts) == 2
        assert report.claims['total_influence_at_most_degree']

    def test_census_capacity(self):
        with pytest.raises(CapacityError):
            census(6, 3, mode='sample', samples=1, capacity=Capacity(census_points=10))

    def test_chain_claim(self):
        report = census(4, 2, chain_rho=0.5)
        assert report.chain_rho == 0.5
        assert report.chain_pairs > 0
        assert report.claims['dichotomy_chain'] is True
        assert report.passed

    def test_chain_can_be_skipped(self):
        report = census(4, 2, chain_rho=None)
        assert report.chain_rho is None
        assert report.chain_pairs == 0
        assert 'dichotomy_chain' not in report.claims

    def test_chain_rho_is_validated(self):
        with pytest.raises(PreconditionError):
            census(4, 2, chain_rho=1.5)

    def test_degree_one_count_is_compared_with_anchors(self):
        assert census(4, 2).claims['anchor_degree_one_count'] is True
        assert 'anchor_degree_one_count' not in census(4, 2, mode='sample', samples=10).claims

    def test_from_config(self):
        config = RunConfig(command='census', seed=0, workers=1, shard_size=32)
        report = census_from_config(config, 4, 2)
        assert report.shards == 2
        assert report.functions == 64

    def test_capacity(self):
        with pytest.raises(CapacityError):
            census(6, 3, capacity=Capacity(exhaustive_points=10))

    def test_unknown_mode(self):
        with pytest.raises(PreconditionError):
            census(4, 2, mode='everything')


class TestDichotomyScan:

    def test_small_slice(self):
        table = dichotomy_scan(4, 2, 2)
        assert [row.min_nonzero_influence for row in table.rows] == ['1/6', '1/12']
        assert [row.functions for row in table.rows] == [10, 64]
        assert table.anchors_match is True

    def test_minima_are_nonincreasing(self):
        table = dichotomy_scan(5, 2, 2)
        values = [Fraction(row.min_nonzero_influence) for row in table.rows]
        assert values == sorted(values, reverse=True)
        assert values == [Fraction(3, 20), Fraction(1, 20)]

    def test_mismatching_anchor(self, tmp_path):
        path = tmp_path / 'anchors.json'
        path.write_text('{"dichotomy": {"4,2,1": "1/7"}}')
        table = dichotomy_scan(4, 2, 1, anchors=AnchorStore(str(path)))
        assert table.anchors_match is False

    def test_without_anchor(self, tmp_path):
        table = dichotomy_scan(4, 2, 1, anchors=AnchorStore(str(tmp_path / 'missing.json')))
        assert table.anchors_match is None

    def test_degree_bound(self):
        with pytest.raises(PreconditionError):
            dichotomy_scan(4, 2, 0)

    def test_middle_slice_of_six_against_anchors(self):
        table = dichotomy_scan(6, 3, 3)
        assert table.rows[0].min_nonzero_influence == '3/20'
        assert table.rows[0].functions == 14
        assert table.rows[-1].min_nonzero_influence == '1/40'
        assert table.rows[-1].functions == 1 << 20
        assert table.anchors_match is True
        assert table.rows[1].min_nonzero_influence == '1/20'

    def test_record_freezes_minima(self, tmp_path):
        path = tmp_path / 'anchors.json'
        path.write_text('{"dichotomy": {"4,2,1": "1/6"}}')
        table = dichotomy_scan(4, 2, 2, anchors=AnchorStore(str(path)), record=True)
        assert table.anchors_match is True
        stored = AnchorStore(str(path))
        assert stored.dichotomy(4, 2, 1) == Fraction(1, 6)
        assert stored.dichotomy(4, 2, 2) == Fraction(1, 12)

    def test_record_refuses_a_conflict(self, tmp_path):
        path = tmp_path / 'anchors.json'
        path.write_text('{"dichotomy": {"4,2,1": "1/7"}}')
        with pytest.raises(ClaimViolation):
            dichotomy_scan(4, 2, 2, anchors=AnchorStore(str(path)), record=True)
        assert AnchorStore(str(path)).dichotomy(4, 2, 2) is None
