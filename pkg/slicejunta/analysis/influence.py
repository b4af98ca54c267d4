"""
Influences of coordinate pairs, total influence and the bootstrapping chain.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from ..core.domain import SliceDomain, coordinate_pairs, transposition_permutation
from ..core.functions import SliceFunction, apply_transposition, norm2_squared
from ..core.projectors import degree, level_eigenvalue, level_projectors
from ..exceptions import PreconditionError
from .noise import NoiseSpectrum, check_rho

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def _ordered(i: int, j: int) -> Pair:
    if i == j:
        raise PreconditionError(f"influence needs two distinct coordinates, got ({i}, {j})")
    return (i, j) if i < j else (j, i)


def influence_probability(f: SliceFunction, i: int, j: int) -> Fraction:
    """(1/4) Pr[f(x) != f(x^(i j))] for a Boolean function."""
    if not f.is_boolean:
        raise PreconditionError("the flip-probability formula needs a Boolean function")
    perm = transposition_permutation(f.domain, *_ordered(i, j))
    bits = np.array([int(v) for v in f.values], dtype=np.int8)
    flips = int(np.count_nonzero(bits != bits[perm]))
    return Fraction(flips, 4 * f.domain.size)


def influence_squared_difference(f: SliceFunction, i: int, j: int):
    """(1/4) E[(f - f^(i j))^2]; exact for exact values."""
    g = f - apply_transposition(f, *_ordered(i, j))
    return norm2_squared(g) / 4


def influence(f: SliceFunction, i: int, j: int):
    """
    The (i, j)-th influence of f.

    Args:
        f: Function on the slice
        i: First coordinate (1-based)
        j: Second coordinate, distinct from i

    Returns:
        Exact Fraction for exact f, float otherwise
    """
    if f.is_boolean:
        return influence_probability(f, i, j)
    return influence_squared_difference(f, i, j)


@dataclass(frozen=True)
class InfluenceProfile:
    """All pairwise influences Inf_ij (i < j) and the total influence."""

    domain: SliceDomain
    pairwise: Dict[Pair, Fraction]
    total: Fraction

    def get(self, i: int, j: int):
        return self.pairwise[_ordered(i, j)]

    def matrix(self) -> np.ndarray:
        """Symmetric n x n object matrix with zero diagonal."""
        n = self.domain.n
        result = np.full((n, n), Fraction(0), dtype=object)
        for (i, j), value in self.pairwise.items():
            result[i - 1, j - 1] = result[j - 1, i - 1] = value
        return result

    def zero_pairs(self) -> List[Pair]:
        return [pair for pair, value in self.pairwise.items() if value == 0]

    def min_nonzero(self) -> Optional[Fraction]:
        positive = [value for value in self.pairwise.values() if value != 0]
        return min(positive) if positive else None

    def to_dataframe(self) -> pd.DataFrame:
        rows = [
            {'i': i, 'j': j, 'influence': str(value)}
            for (i, j), value in sorted(self.pairwise.items())
        ]
        return pd.DataFrame(rows, columns=['i', 'j', 'influence'])


def influence_profile(f: SliceFunction) -> InfluenceProfile:
    """Compute every pairwise influence of f."""
    pairwise = {(i, j): influence(f, i, j) for i, j in coordinate_pairs(f.domain.n)}
    total = sum(pairwise.values(), Fraction(0)) / f.domain.n
    return InfluenceProfile(f.domain, pairwise, total)


def total_influence(f: SliceFunction):
    """Inf[f] = (1/n) sum_{i<j} Inf_ij[f]."""
    return influence_profile(f).total


def level_influence_value(f: SliceFunction) -> Fraction:
    """sum_d [d(n+1-d)/n] ||f^{=d}||_2^2, exactly."""
    n = f.domain.n
    norms = level_projectors(f.domain).level_norms(f)
    return sum(
        (Fraction(level_eigenvalue(n, d), n) * norm for d, norm in enumerate(norms)),
        Fraction(0)
    )


@dataclass(frozen=True)
class DichotomyChain:
    """
    Quantities of the hypercontractive bootstrapping argument for one pair.

    The difference g = f - f^(i j) of a Boolean f is 0/+-1-valued, so
    ||g||_{4/3}^2 = (||g||_2^2)^{3/2} and ||g||_2^2 = 4 Inf_ij[f].
    """

    pair: Pair
    degree: int
    rho: float
    influence: Fraction
    attenuated: float
    noisy: float
    rhs: float
    hypercontractive: bool
    implied_bound: float
    bound_holds: bool
    details: Dict[str, float] = field(default_factory=dict)


def dichotomy_chain(f: SliceFunction, i: int, j: int, rho: float) -> DichotomyChain:
    """
    Evaluate rho^{2d}||g||^2 <= ||T_rho g||^2 <= ||g||_{4/3}^2 for g = f - f^(i j).

    When the second inequality holds, Inf_ij[f] is either 0 or at least rho^{4d}/4.

    Args:
        f: Boolean function
        i: First coordinate
        j: Second coordinate
        rho: Correlation in (0, 1]

    Returns:
        DichotomyChain with each side of the chain
    """
    if not f.is_boolean:
        raise PreconditionError("the bootstrapping chain needs a Boolean function")
    rho = check_rho(rho)
    pair = _ordered(i, j)
    d = degree(f)
    g = f - apply_transposition(f, *pair)
    squared = float(norm2_squared(g))
    inf = influence_probability(f, *pair)

    attenuated = rho ** (2 * d) * squared
    noisy = float(np.mean(NoiseSpectrum(g).apply(rho) ** 2))
    rhs = squared ** 1.5
    hypercontractive = noisy <= rhs * (1 + 1e-12)
    implied = rho ** (4 * d) / 4
    bound_holds = (not hypercontractive) or inf == 0 or float(inf) >= implied * (1 - 1e-12)
    if attenuated > noisy * (1 + 1e-12) + 1e-15:
        logger.warning("noise lower bound failed for pair %s: %r > %r", pair, attenuated, noisy)
    return DichotomyChain(
        pair=pair,
        degree=d,
        rho=rho,
        influence=inf,
        attenuated=attenuated,
        noisy=noisy,
        rhs=rhs,
        hypercontractive=hypercontractive,
        implied_bound=implied,
        bound_holds=bound_holds,
        details={'g_norm2_squared': squared},
    )
