"""
Tests for slice functions, norms, transpositions and restrictions.
"""

from fractions import Fraction

import pytest

from slicejunta.core import SliceDomain, SliceFunction, degree
from slicejunta.core.functions import (
    apply_transposition,
    inner_product,
    norm2_squared,
    p_norm,
    restrict,
)
from slicejunta.exceptions import DomainMismatchError, PreconditionError

from conftest import random_boolean_functions


class TestSliceFunction:

    def test_dictator_values(self, dictator42):
        assert dictator42.values == tuple(Fraction(v) for v in (1, 1, 0, 1, 0, 0))
        assert dictator42.is_boolean
        assert not dictator42.is_constant

    def test_code_round_trip(self, c42):
        f = SliceFunction.from_code(c42, 0b101101)
        assert f.to_code() == 0b101101

    def test_wrong_length(self, c42):
        with pytest.raises(PreconditionError):
            SliceFunction(c42, [0, 1])

    def test_rational_values_are_exact(self, c42):
        f = SliceFunction(c42, ["1/3", 0, 1, 2, "-5/7", 1])
        assert f.is_exact
        assert not f.is_boolean
        assert f.values[0] == Fraction(1, 3)

    def test_arithmetic(self, c42):
        x1 = SliceFunction.dictator(c42, 1)
        not_x1 = SliceFunction.anti_dictator(c42, 1)
        assert x1 + not_x1 == SliceFunction.constant(c42, 1)
        assert (x1 * not_x1).is_constant
        assert x1.scale(2) - x1 == x1

    def test_domain_mismatch(self, c42, c52):
        with pytest.raises(DomainMismatchError):
            inner_product(SliceFunction.constant(c42), SliceFunction.constant(c52))


class TestNorms:

    def test_dictator_norm(self, dictator42):
        assert norm2_squared(dictator42) == Fraction(1, 2)

    def test_boolean_norm_counts_ones(self, c63):
        for f in random_boolean_functions(c63, 10, seed=3):
            ones = sum(1 for v in f.values if v == 1)
            assert norm2_squared(f) == Fraction(ones, c63.size)

    def test_signed_difference_norms(self, c63):
        for f in random_boolean_functions(c63, 10, seed=4):
            h = f - apply_transposition(f, 1, 2)
            assert p_norm(h, 4 / 3) ** (4 / 3) == pytest.approx(float(norm2_squared(h)), abs=1e-12)

    def test_p_below_one_rejected(self, dictator42):
        with pytest.raises(PreconditionError):
            p_norm(dictator42, 0.5)


class TestTransposition:

    def test_constant_unchanged(self, c42):
        f = SliceFunction.constant(c42, 3)
        assert apply_transposition(f, 1, 4) == f

    def test_dictator_moves(self, c42, dictator42):
        assert apply_transposition(dictator42, 1, 2) == SliceFunction.dictator(c42, 2)

    def test_involution(self, c52):
        for f in random_boolean_functions(c52, 20, seed=5):
            assert apply_transposition(apply_transposition(f, 2, 5), 2, 5) == f

    def test_preserves_degree(self, c63):
        for f in random_boolean_functions(c63, 5, seed=6):
            assert degree(apply_transposition(f, 1, 6)) == degree(f)


class TestRestrict:

    def test_dictator_fixed_to_one(self, dictator42):
        g = restrict(dictator42, 1, 1)
        assert g.domain == SliceDomain(3, 1)
        assert g == SliceFunction.constant(SliceDomain(3, 1), 1)

    def test_dictator_keeps_shape(self, dictator42):
        g = restrict(dictator42, 4, 0)
        assert g == SliceFunction.dictator(SliceDomain(3, 2), 1)
        assert degree(g) == 1

    def test_degenerate_target(self):
        f = SliceFunction.constant(SliceDomain(3, 0), 1)
        with pytest.raises(PreconditionError):
            restrict(f, 1, 1)
        with pytest.raises(PreconditionError):
            restrict(SliceFunction.constant(SliceDomain(3, 3), 1), 2, 0)

    def test_commutes_with_transposition(self, c63):
        i, j, fixed = 2, 5, 4
        for f in random_boolean_functions(c63, 5, seed=7):
            for b in (0, 1):
                left = restrict(apply_transposition(f, i, j), fixed, b)
                right = apply_transposition(restrict(f, fixed, b), i, j - 1)
                assert left == right

    def test_degree_does_not_grow(self, c63):
        x = lambda p, i: int(i in p.support)
        candidates = [
            lambda p: x(p, 1) * x(p, 2),
            lambda p: (x(p, 1) + x(p, 2)) % 2,
            lambda p: x(p, 1) * (1 - x(p, 3)),
            lambda p: int(x(p, 1) + x(p, 2) + x(p, 3) in (0, 3)),
        ]
        for fn in candidates:
            f = SliceFunction.from_callable(c63, fn)
            d = degree(f)
            assert d <= 2
            for i in range(1, 7):
                for b in (0, 1):
                    assert degree(restrict(f, i, b)) <= d
