"""
Tests for the Laplacian level projectors.
"""

from fractions import Fraction

import numpy as np
import pytest

from conftest import random_boolean_functions
from slicejunta.core import (
    LevelProjectors,
    SliceDomain,
    SliceFunction,
    decompose,
    degree,
    level_eigenvalue,
    level_projectors,
    point_matrix,
)
from slicejunta.exceptions import CapacityError


class TestLevelProjectors:

    def test_eigenvalues(self, c63):
        assert level_eigenvalue(6, 2) == 10
        assert level_projectors(c63).eigenvalues == [0, 6, 10, 12]

    def test_constant_and_zero_have_degree_zero(self, c42):
        assert degree(SliceFunction.constant(c42, 0)) == 0
        assert degree(SliceFunction.constant(c42, 5)) == 0

    def test_dictator(self, dictator42):
        assert degree(dictator42) == 1

    def test_batch_degrees_match_decomposition(self, c52):
        functions = random_boolean_functions(c52, 40, seed=11)
        batch = np.array([[int(v) for v in f.values] for f in functions], dtype=np.int64)
        degrees = LevelProjectors(c52).degrees(batch)
        assert degrees.tolist() == [decompose(f).degree for f in functions]

    def test_levels_sum_to_function(self, c63):
        f = random_boolean_functions(c63, 1, seed=5)[0]
        levels = level_projectors(c63).levels(f)
        total = levels[0]
        for level in levels[1:]:
            total = total + level
        assert total == f

    def test_levels_match_harmonic_levels(self, c52):
        f = SliceFunction(c52, [Fraction(r, 3) for r in range(c52.size)])
        projectors = level_projectors(c52)
        decomposition = decompose(f)
        for d in range(c52.max_degree + 1):
            assert projectors.level_values(f, d) == decomposition.level_function(d)
        assert projectors.level_norms(f) == decomposition.level_norms()

    def test_level_outside_range_is_zero(self, dictator42):
        assert level_projectors(dictator42.domain).level_values(dictator42, 7).is_constant

    def test_level_numerators_match_level_values(self, c63):
        functions = random_boolean_functions(c63, 3, seed=8)
        batch = np.array([[int(v) for v in f.values] for f in functions], dtype=np.int64)
        projectors = level_projectors(c63)
        numerators, denominators = projectors.level_numerators(batch)
        assert len(numerators) == len(denominators) == c63.max_degree + 1
        for row, f in enumerate(functions):
            for d, (numerator, denominator) in enumerate(zip(numerators, denominators)):
                expected = [Fraction(int(v), denominator) for v in numerator[row]]
                assert projectors.level_values(f, d) == SliceFunction(c63, expected)

    def test_degrees_beyond_the_exact_capacity(self):
        domain = SliceDomain(16, 8)
        columns = point_matrix(domain).astype(np.int64).T
        projectors = LevelProjectors(domain)
        batch = np.stack([columns[0], columns[0] * columns[1], np.ones(domain.size, dtype=np.int64)])
        assert projectors.degrees(batch).tolist() == [1, 2, 0]
        with pytest.raises(CapacityError):
            projectors.level_values(SliceFunction.dictator(domain, 1), 1)

    def test_degrees_widen_before_overflow(self, c63):
        f = random_boolean_functions(c63, 1, seed=2)[0]
        row = np.array([int(v) for v in f.values], dtype=np.int64)
        huge = np.array([row * (1 << 60)], dtype=object)
        assert LevelProjectors(c63).degrees(huge).tolist() == [degree(f)]
