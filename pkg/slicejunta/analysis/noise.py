"""
Noise operator on the slice and hypercontractivity ratios.

T_rho multiplies the d-th level by rho^{d(1-(d-1)/n)} = rho^{d(n+1-d)/n}. The same
operator is realised by applying N ~ Po((n-1)/2 * log(1/rho)) uniformly random
transpositions, which is what noise_monte_carlo samples.
"""

import logging
from dataclasses import dataclass
from math import comb, log, sqrt

import numpy as np

from ..core.domain import SliceDomain, SlicePoint, slice_rank, transposition_table
from ..core.functions import SliceFunction
from ..core.projectors import level_eigenvalue, level_projectors
from ..exceptions import PreconditionError

logger = logging.getLogger(__name__)


def check_rho(rho: float) -> float:
    """Validate a noise correlation and return it as a float in (0, 1]."""
    rho = float(rho)
    if not 0.0 < rho <= 1.0:
        raise PreconditionError(f"rho must lie in (0, 1], got {rho}")
    return rho


def noise_exponent(n: int, d: int) -> float:
    """Exponent of rho on level d."""
    return level_eigenvalue(n, d) / n


class NoiseSpectrum:
    """Float level tables of a function, reusable across many values of rho."""

    def __init__(self, f: SliceFunction):
        self.domain: SliceDomain = f.domain
        projectors = level_projectors(f.domain)
        self.levels = np.array([
            [float(v) for v in level.values] for level in projectors.levels(f)
        ])
        self.exponents = np.array([
            noise_exponent(f.domain.n, d) for d in range(self.levels.shape[0])
        ])
        self.values = f.as_array(float)
        self.is_constant = f.is_constant

    def apply(self, rho: float) -> np.ndarray:
        """Values of T_rho f in rank order."""
        rho = check_rho(rho)
        return (rho ** self.exponents) @ self.levels

    def ratio(self, rho: float) -> float:
        """||T_rho f||_2 / ||f||_{4/3}."""
        rho = check_rho(rho)
        denominator = float(np.mean(np.abs(self.values) ** (4.0 / 3.0)) ** 0.75)
        if denominator == 0.0:
            return 0.0
        if self.is_constant:
            return 1.0
        noisy = self.apply(rho)
        return float(np.sqrt(np.mean(noisy ** 2))) / denominator


def noise(f: SliceFunction, rho: float) -> SliceFunction:
    """
    Apply the noise operator T_rho.

    Args:
        f: Function with exact values
        rho: Correlation in (0, 1]

    Returns:
        Float-valued SliceFunction
    """
    return SliceFunction(f.domain, NoiseSpectrum(f).apply(rho).tolist())


@dataclass(frozen=True)
class MonteCarloEstimate:
    """Sample mean of f after Poisson-many random transpositions."""

    estimate: float
    stderr: float
    samples: int
    mean_steps: float


def noise_monte_carlo(
    f: SliceFunction,
    rho: float,
    x: SlicePoint,
    samples: int,
    rng: np.random.Generator
) -> MonteCarloEstimate:
    """
    Estimate (T_rho f)(x) by random transpositions.

    Args:
        f: Function on the slice
        rho: Correlation in (0, 1]
        x: Starting point
        samples: Number of independent walks
        rng: Seeded generator

    Returns:
        MonteCarloEstimate with the sample mean and its standard error
    """
    rho = check_rho(rho)
    if samples < 1:
        raise PreconditionError(f"samples must be >= 1, got {samples}")
    start = slice_rank(x, f.domain)
    if f.is_constant:
        return MonteCarloEstimate(float(f.values[0]), 0.0, samples, 0.0)

    n = f.domain.n
    rate = (n - 1) / 2.0 * log(1.0 / rho)
    steps = rng.poisson(rate, size=samples)
    table = transposition_table(f.domain)
    ranks = np.full(samples, start, dtype=np.int64)
    for step in range(int(steps.max()) if samples else 0):
        active = steps > step
        pairs = rng.integers(0, comb(n, 2), size=int(active.sum()))
        ranks[active] = table[pairs, ranks[active]]

    values = f.as_array(float)[ranks]
    stderr = float(np.std(values, ddof=1) / sqrt(samples)) if samples > 1 else 0.0
    logger.debug("monte carlo: rate %.4f, %d samples, mean steps %.3f",
                 rate, samples, float(steps.mean()))
    return MonteCarloEstimate(float(values.mean()), stderr, samples, float(steps.mean()))


def hypercontractivity_ratio(f: SliceFunction, rho: float) -> float:
    """
    ||T_rho f||_2 / ||f||_{4/3} in floating point.

    The zero function has ratio 0 and a nonzero constant has ratio exactly 1. The ratio is
    nondecreasing in rho.
    """
    return NoiseSpectrum(f).ratio(rho)
