"""
Tests for the noise operator and hypercontractivity ratios.
"""

import numpy as np
import pytest

from conftest import random_boolean_functions
from slicejunta.analysis import (
    NoiseSpectrum,
    check_rho,
    hypercontractivity_ratio,
    noise,
    noise_exponent,
    noise_monte_carlo,
)
from slicejunta.core import SliceFunction, SlicePoint
from slicejunta.exceptions import PreconditionError


class TestNoiseOperator:

    def test_exponents(self):
        assert noise_exponent(4, 1) == 1.0
        assert noise_exponent(6, 2) == pytest.approx(10 / 6)

    def test_rho_one_is_identity(self, c63):
        f = SliceFunction(c63, [r % 3 for r in range(c63.size)])
        assert np.max(np.abs(noise(f, 1.0).as_array() - f.as_array())) <= 1e-12

    def test_dictator(self, dictator42):
        # level 1 of x_1 on C(4,2) is x_1 - 1/2, scaled by rho
        expected = [0.5 + 0.3 * (v - 0.5) for v in dictator42.as_array()]
        assert np.allclose(noise(dictator42, 0.3).as_array(), expected)
        assert not noise(dictator42, 0.3).is_exact

    @pytest.mark.parametrize("rho", [0.0, -0.2, 1.5])
    def test_invalid_rho(self, dictator42, rho):
        with pytest.raises(PreconditionError):
            noise(dictator42, rho)

    def test_check_rho(self):
        assert check_rho(1) == 1.0
        assert isinstance(check_rho(1), float)
        assert check_rho(0.25) == 0.25
        with pytest.raises(PreconditionError):
            check_rho(0)


class TestMonteCarlo:

    def test_agrees_with_exact_operator(self, dictator42, rng):
        x = SlicePoint(4, (1, 2))
        estimate = noise_monte_carlo(dictator42, 0.5, x, 20000, rng)
        assert abs(estimate.estimate - 0.75) <= 4 * estimate.stderr
        assert estimate.mean_steps == pytest.approx(1.5 * np.log(2), rel=0.05)

    def test_constant(self, c42, rng):
        estimate = noise_monte_carlo(SliceFunction.constant(c42, 1), 0.2, SlicePoint(4, (3, 4)), 10, rng)
        assert estimate.estimate == 1.0
        assert estimate.stderr == 0.0

    def test_needs_samples(self, dictator42, rng):
        with pytest.raises(PreconditionError):
            noise_monte_carlo(dictator42, 0.5, SlicePoint(4, (1, 2)), 0, rng)


class TestHypercontractivity:

    def test_constant_and_zero(self, c42):
        assert hypercontractivity_ratio(SliceFunction.constant(c42, 1), 0.4) == 1.0
        assert hypercontractivity_ratio(SliceFunction.constant(c42, 0), 0.4) == 0.0

    def test_nondecreasing_in_rho(self, dictator42):
        spectrum = NoiseSpectrum(dictator42)
        ratios = [spectrum.ratio(rho) for rho in (0.05, 0.2, 0.5, 0.8, 1.0)]
        assert all(a <= b + 1e-12 for a, b in zip(ratios, ratios[1:]))

    def test_rho_one_ratio_of_boolean_function(self, dictator42):
        # ||f||_2 / ||f||_{4/3} = (1/2)^{1/2} / (1/2)^{3/4}
        assert hypercontractivity_ratio(dictator42, 1.0) == pytest.approx(0.5 ** -0.25)

    def test_nondecreasing_in_rho_for_random_functions(self, c63):
        grid = [r / 10 for r in range(1, 11)]
        for f in random_boolean_functions(c63, 100, seed=31):
            ratios = [hypercontractivity_ratio(f, rho) for rho in grid]
            assert all(a <= b + 1e-12 for a, b in zip(ratios, ratios[1:]))


def test_monte_carlo_over_random_triples(c63):
    generator = np.random.default_rng(99)
    points = list(c63.points())
    for _ in range(20):
        f = SliceFunction(c63, generator.integers(0, 2, size=c63.size).tolist())
        rank = int(generator.integers(0, c63.size))
        rho = float(generator.uniform(0.2, 0.95))
        exact = noise(f, rho).values[rank]
        estimate = noise_monte_carlo(f, rho, points[rank], 100000, generator)
        assert abs(estimate.estimate - exact) <= 4 * estimate.stderr + 1e-12
