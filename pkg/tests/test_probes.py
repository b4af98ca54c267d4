"""
Tests for the total-influence probe, the hypercontractivity scan and the anchor store.
"""

import json

import pytest

from slicejunta.exceptions import ClaimViolation, PreconditionError
from slicejunta.verify import AnchorStore, CheckpointCache, eq1_constant_probe, hyper_base, hyper_scan


class TestEq1Probe:

    def test_exhaustive_small_slice(self):
        report = eq1_constant_probe([(4, 2)])
        assert report.constant == '1/2'
        assert report.consistent
        assert report.dictator_total_influence == '1/8'
        assert report.dictator_level_value == '1/4'
        assert report.rows[0].source.startswith('code:')
        assert {row.ratio for row in report.rows} == {'1/2'}

    def test_sampled_domains(self):
        report = eq1_constant_probe([(5, 2), (6, 3)], samples=10, seed=1)
        assert report.constant == '1/2'
        assert {row.source.split(':')[0] for row in report.rows} == {'sample'}
        assert {(row.n, row.k) for row in report.rows} == {(5, 2), (6, 3)}

    def test_needs_a_domain(self):
        with pytest.raises(PreconditionError):
            eq1_constant_probe([])


class TestHyperScan:

    def test_base(self):
        assert hyper_base(6, 3) == pytest.approx(0.6)
        with pytest.raises(PreconditionError):
            hyper_base(1, 0)

    def test_deterministic(self):
        first = hyper_scan(4, 2, exponents=(2.0, 0.5), samples=50, seed=3)
        second = hyper_scan(4, 2, exponents=(2.0, 0.5), samples=50, seed=3)
        assert first.to_dict() == second.to_dict()
        assert [row.exponent for row in first.rows] == [0.5, 2.0]

    def test_ratio_falls_with_the_exponent(self):
        table = hyper_scan(5, 2, samples=100, seed=0)
        ratios = [row.max_ratio for row in table.rows]
        assert all(a >= b - 1e-12 for a, b in zip(ratios, ratios[1:]))
        if table.smallest_passing_exponent is not None:
            assert table.smallest_passing_exponent in [row.exponent for row in table.rows]

    def test_needs_samples(self):
        with pytest.raises(PreconditionError):
            hyper_scan(4, 2, samples=0)


class TestAnchorStore:

    def test_packaged_anchors(self):
        anchors = AnchorStore()
        assert str(anchors.dichotomy(4, 2, 1)) == '1/6'
        assert anchors.dichotomy(9, 4, 1) is None
        assert anchors.check_dichotomy(4, 2, 2, None) is False

    def test_record_and_conflict(self, tmp_path):
        path = tmp_path / 'anchors.json'
        anchors = AnchorStore(str(path))
        anchors.record_dichotomy(4, 2, 1, '1/6')
        assert json.loads(path.read_text())['dichotomy'] == {'4,2,1': '1/6'}
        anchors.record_dichotomy(4, 2, 1, '2/12')
        with pytest.raises(ClaimViolation):
            anchors.record_dichotomy(4, 2, 1, '1/5')


class TestCheckpointCache:

    def test_round_trip(self, tmp_path):
        cache = CheckpointCache(str(tmp_path / 'shards'))
        key = CheckpointCache.shard_key(n=4, k=2, start=0, end=16)
        assert cache.get(key) is None
        cache.set(key, {'functions': 16})
        assert cache.get(key) == {'functions': 16}

    def test_key_ignores_argument_order(self):
        assert CheckpointCache.shard_key(n=4, k=2) == CheckpointCache.shard_key(k=2, n=4)
        assert CheckpointCache.shard_key(n=4, k=2) != CheckpointCache.shard_key(n=4, k=1)


def test_eq1_constant_on_acceptance_domains():
    report = eq1_constant_probe([(4, 2), (6, 3)], samples=100, seed=0)
    assert report.consistent
    assert report.constant == '1/2'
    assert {(row.n, row.k) for row in report.rows} == {(4, 2), (6, 3)}


def test_hyper_scan_on_middle_slice_of_six():
    table = hyper_scan(6, 3, samples=1000, seed=0)
    assert table.base == pytest.approx(0.6)
    assert [row.exponent for row in table.rows] == [0.5, 1.0, 2.0, 4.0]
    assert table.rows[-1].max_ratio <= 1 + 1e-9
    assert table.smallest_passing_exponent is not None
    assert table.to_dict() == hyper_scan(6, 3, samples=1000, seed=0).to_dict()
