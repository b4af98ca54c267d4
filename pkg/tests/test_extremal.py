"""
Tests for eta(d), the long-prefix constructions and gamma(d).
"""

import pytest

from slicejunta.analysis import minimal_junta
from slicejunta.config import Capacity
from slicejunta.core import degree
from slicejunta.exceptions import PreconditionError
from slicejunta.extremal import (
    eta,
    eta_bounds_check,
    fd_construction,
    gamma_bounds,
    lower_bound,
    pd_polynomial,
    upper_bound,
)
from slicejunta.extremal.constructions import degree_one_theorem_applies, zeta_xi_definitions
from slicejunta.extremal.eta import eta_bruteforce, extend_sequence, is_realizable
from slicejunta.extremal.gamma import nisan_szegedy_bound


class TestEta:

    @pytest.mark.parametrize("d,expected", [(1, 2), (2, 4), (7, 9), (12, 16)])
    def test_known_values(self, d, expected):
        assert eta(d).eta == expected

    def test_witness_is_lexicographically_smallest(self):
        assert eta(1).witness == [0, 1]
        assert eta(2).witness == [0, 1, 1, 0]

    @pytest.mark.parametrize("d", range(1, 13))
    def test_bounds(self, d):
        lower, upper, value = eta_bounds_check(d)
        assert lower == lower_bound(d) == 2 * ((d + 2) // 2)
        assert upper == upper_bound(d) == 2 * d
        assert lower <= value <= upper

    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_matches_full_enumeration(self, d):
        assert eta_bruteforce(d, 2 * d + 1) == eta(d).eta

    def test_witness_is_realisable(self):
        result = eta(7)
        assert len(result.witness) == 9
        assert is_realizable(result.witness, 7)
        assert set(result.witness) == {0, 1}

    def test_sequence_helpers(self):
        assert extend_sequence([0, 1], 1, 4) == [0, 1, 2, 3]
        assert is_realizable([1, 0, 0, 1], 2)
        assert not is_realizable([1, 0, 1, 0], 2)

    def test_degree_range(self):
        with pytest.raises(PreconditionError):
            eta(0)
        with pytest.raises(PreconditionError):
            eta(5, Capacity(eta_max_degree=4))


class TestConstructions:

    @pytest.mark.parametrize("d", range(1, 15))
    def test_pd_prefix(self, d):
        values = pd_polynomial(d).values(lower_bound(d))
        assert values[0] == 1
        assert set(values) <= {0, 1}
        assert pd_polynomial(d).degree == d

    def test_fd_is_large_junta(self):
        f = fd_construction(2, 8, 3)
        assert f.is_boolean
        assert degree(f) == 2
        certificate = minimal_junta(f)
        assert certificate.size == 4
        assert certificate.partition.classes == ((1, 2, 3, 4), (5, 6, 7, 8))

    def test_fd_needs_small_weight(self):
        with pytest.raises(PreconditionError):
            fd_construction(2, 8, 4)

    def test_theorem_range(self):
        assert degree_one_theorem_applies(4, 2)
        assert not degree_one_theorem_applies(4, 1)
        assert not degree_one_theorem_applies(3, 2)

    def test_threshold_definitions(self):
        definitions = zeta_xi_definitions()
        assert set(definitions) == {"zeta", "xi", "relations"}
        assert "gamma(d)-junta" in definitions["xi"]


class TestGamma:

    def test_degree_one(self):
        report = gamma_bounds(1)
        assert report.ns_upper == 1
        assert report.bruteforce == 1
        assert report.attained
        assert report.witness == [1, 0]

    def test_degree_two(self):
        report = gamma_bounds(2)
        assert report.ns_upper == 4
        assert report.bruteforce == 4
        assert report.attained

    def test_larger_degree_only_reports_the_cap(self):
        report = gamma_bounds(3)
        assert report.ns_upper == nisan_szegedy_bound(3) == 12
        assert report.bruteforce is None
        assert report.notice

    def test_invalid_degree(self):
        with pytest.raises(PreconditionError):
            gamma_bounds(0)
