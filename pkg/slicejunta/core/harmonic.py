"""
Harmonic multilinear representation of slice functions.

Every function on C(n,k) is represented uniquely by a multilinear polynomial P of degree
at most D = min(k, n-k) with sum_i dP/dx_i = 0. The coefficients are the solution of one
square exact system:

    unknowns   c_S for |S| <= D
    rows       P(x) = f(x) for every slice point x                 (C(n,k) rows)
               sum_{i not in T} c_{T+i} = 0 for every |T| <= D-1     (harmonicity)

The system is square because C(n,D) = C(n,k). The inverse restricted to the evaluation
rows is computed once per domain and reused.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..config import DEFAULT_CAPACITY, Capacity
from ..exceptions import ClaimViolation, PreconditionError
from .domain import SliceDomain, point_matrix
from .functions import SliceFunction, inner_product, norm2_squared
from .linalg import clear_denominators, exact_rank, solve_fraction_free
from .polynomial import MultilinearPolynomial

logger = logging.getLogger(__name__)


def monomial_basis(n: int, max_degree: int) -> List[Tuple[int, ...]]:
    """All subsets of [n] of size <= max_degree, by size then lexicographically."""
    return [
        subset
        for size in range(max_degree + 1)
        for subset in combinations(range(1, n + 1), size)
    ]


def _masks(subsets: Sequence[Tuple[int, ...]]) -> np.ndarray:
    return np.array([sum(1 << (v - 1) for v in s) for s in subsets], dtype=np.int64)


def point_masks(domain: SliceDomain) -> np.ndarray:
    """Bitmask (bit i-1 = x_i) of every point, in rank order."""
    weights = np.left_shift(np.int64(1), np.arange(domain.n, dtype=np.int64))
    return point_matrix(domain).astype(np.int64) @ weights


def evaluation_matrix(domain: SliceDomain, monomials: Sequence[Tuple[int, ...]]) -> np.ndarray:
    """0/1 matrix E[r, s] = monomial s evaluated at the point of rank r."""
    points = point_masks(domain)[:, np.newaxis]
    masks = _masks(monomials)[np.newaxis, :]
    return ((points & masks) == masks).astype(np.int64)


def harmonicity_matrix(n: int, monomials: Sequence[Tuple[int, ...]], max_degree: int) -> np.ndarray:
    """One row per |T| <= max_degree - 1: coefficients of sum_i dP/dx_i at x_T."""
    index = {frozenset(m): col for col, m in enumerate(monomials)}
    lower = monomial_basis(n, max_degree - 1) if max_degree >= 1 else []
    matrix = np.zeros((len(lower), len(monomials)), dtype=np.int64)
    for row, subset in enumerate(lower):
        members = frozenset(subset)
        for i in range(1, n + 1):
            if i not in members:
                matrix[row, index[members | {i}]] = 1
    return matrix


def harmonic_system(domain: SliceDomain) -> Tuple[np.ndarray, List[Tuple[int, ...]]]:
    """
    Square system matrix of the harmonic solve.

    Returns:
        (matrix, monomials); the first C(n,k) rows are the evaluation rows in rank order
    """
    D = domain.max_degree
    monomials = monomial_basis(domain.n, D)
    matrix = np.concatenate([
        evaluation_matrix(domain, monomials),
        harmonicity_matrix(domain.n, monomials, D)
    ])
    return matrix, monomials


@lru_cache(maxsize=16)
def _synthesis(domain: SliceDomain) -> Tuple[np.ndarray, int, Tuple[Tuple[int, ...], ...]]:
    """(X, det, monomials) with coefficients = X @ values / det."""
    matrix, monomials = harmonic_system(domain)
    size = domain.size
    rhs = np.zeros((matrix.shape[0], size), dtype=np.int64)
    rhs[:size, :size] = np.eye(size, dtype=np.int64)
    logger.info("building harmonic synthesis for %s (%d unknowns)", domain, len(monomials))
    numerators, det = solve_fraction_free(matrix, rhs)
    numerators.setflags(write=False)
    return numerators, det, tuple(monomials)


def _exact_values(f: SliceFunction) -> List[Fraction]:
    if not f.is_exact:
        raise PreconditionError("the harmonic representation needs exact rational values")
    return list(f.values)


def solve_harmonic(f: SliceFunction, row_order: Optional[Sequence[int]] = None) -> MultilinearPolynomial:
    """
    Solve the harmonic system for f directly, without the per-domain cache.

    Args:
        f: Function with exact values
        row_order: Optional permutation of the system rows (equation order)

    Returns:
        The harmonic representation of f
    """
    DEFAULT_CAPACITY.check_exact(f.domain.size)
    matrix, monomials = harmonic_system(f.domain)
    scaled, scale = clear_denominators(_exact_values(f))
    rhs = np.array(scaled + [0] * (matrix.shape[0] - f.domain.size), dtype=object)
    if row_order is not None:
        order = list(row_order)
        if sorted(order) != list(range(matrix.shape[0])):
            raise PreconditionError("row_order must be a permutation of the system rows")
        matrix, rhs = matrix[order], rhs[order]
    numerators, det = solve_fraction_free(matrix, rhs)
    return MultilinearPolynomial(
        f.domain.n,
        {m: Fraction(int(p), det * scale) for m, p in zip(monomials, numerators[:, 0])}
    )


def _check_representation(f: SliceFunction, poly: MultilinearPolynomial) -> None:
    if not poly.is_harmonic():
        raise ClaimViolation(f"representation of {f!r} is not harmonic")
    if poly.degree > f.domain.max_degree:
        raise ClaimViolation(
            f"representation has degree {poly.degree} > min(k, n-k) = {f.domain.max_degree}"
        )
    for rank, point in enumerate(f.domain.points()):
        if poly.evaluate(point.support) != f.values[rank]:
            raise ClaimViolation(f"representation disagrees with f at rank {rank}")


def harmonic_representation(
    f: SliceFunction,
    capacity: Capacity = DEFAULT_CAPACITY,
    check: bool = True
) -> MultilinearPolynomial:
    """
    Unique harmonic multilinear polynomial agreeing with f on the slice.

    Args:
        f: Function with exact values
        capacity: Size limits
        check: Re-verify harmonicity, the degree bound and agreement on every point

    Returns:
        MultilinearPolynomial of degree <= min(k, n-k)
    """
    capacity.check_exact(f.domain.size)
    numerators, det, monomials = _synthesis(f.domain)
    scaled, scale = clear_denominators(_exact_values(f))
    coefficients = numerators.dot(np.array(scaled, dtype=object))
    poly = MultilinearPolynomial(
        f.domain.n,
        {m: Fraction(int(p), det * scale) for m, p in zip(monomials, coefficients)}
    )
    if check:
        _check_representation(f, poly)
    return poly


@dataclass(frozen=True)
class HarmonicDecomposition:
    """Levels f^{=0}, ..., f^{=D} of a slice function."""

    domain: SliceDomain
    levels: Tuple[MultilinearPolynomial, ...]

    @property
    def degree(self) -> int:
        """Top nonzero level; 0 when every level vanishes."""
        nonzero = [d for d, level in enumerate(self.levels) if not level.is_zero]
        return max(nonzero, default=0)

    def level(self, d: int) -> MultilinearPolynomial:
        if 0 <= d < len(self.levels):
            return self.levels[d]
        return MultilinearPolynomial(self.domain.n)

    def level_function(self, d: int) -> SliceFunction:
        """f^{=d} tabulated on the slice."""
        level = self.level(d)
        return SliceFunction.from_callable(self.domain, lambda p: level.evaluate(p.support))

    def level_norms(self) -> List[Fraction]:
        """[||f^{=d}||_2^2 for d = 0..D]."""
        return [norm2_squared(self.level_function(d)) for d in range(len(self.levels))]

    def reconstruct(self) -> SliceFunction:
        total = MultilinearPolynomial(self.domain.n)
        for level in self.levels:
            total = total + level
        return SliceFunction.from_callable(self.domain, lambda p: total.evaluate(p.support))

    def check(self, f: SliceFunction) -> None:
        """Assert reconstruction, pairwise orthogonality and Parseval exactly."""
        if self.reconstruct() != f:
            raise ClaimViolation("levels do not sum to f")
        tables = [self.level_function(d) for d in range(len(self.levels))]
        for d, e in combinations(range(len(tables)), 2):
            if inner_product(tables[d], tables[e]) != 0:
                raise ClaimViolation(f"levels {d} and {e} are not orthogonal")
        if sum((norm2_squared(t) for t in tables), Fraction(0)) != norm2_squared(f):
            raise ClaimViolation("Parseval identity fails")


def decompose(f: SliceFunction, capacity: Capacity = DEFAULT_CAPACITY) -> HarmonicDecomposition:
    """Split the harmonic representation of f into its homogeneous levels."""
    poly = harmonic_representation(f, capacity)
    levels = tuple(poly.homogeneous_part(d) for d in range(f.domain.max_degree + 1))
    return HarmonicDecomposition(f.domain, levels)


def minimum_agreeing_degree(f: SliceFunction, capacity: Capacity = DEFAULT_CAPACITY) -> int:
    """
    Smallest e such that some polynomial of degree <= e agrees with f on the slice.

    Polynomials are reduced to multilinear ones on 0/1 points without raising the degree,
    so it suffices to test whether f lies in the span of the monomials of size <= e.
    """
    capacity.check_exact(f.domain.size)
    scaled, _ = clear_denominators(_exact_values(f))
    target = np.array(scaled, dtype=object)[:, np.newaxis]
    for e in range(f.domain.max_degree + 1):
        columns = evaluation_matrix(f.domain, monomial_basis(f.domain.n, e)).astype(object)
        if exact_rank(columns) == exact_rank(np.concatenate([columns, target], axis=1)):
            return e
    raise ClaimViolation(f"no polynomial of degree <= {f.domain.max_degree} agrees with f")


def coefficient_table(poly: MultilinearPolynomial) -> Dict[str, str]:
    """Human-readable {"x1*x2": "p/q"} view of a polynomial."""
    return {
        ('*'.join(f"x{v}" for v in variables) or '1'): str(coeff)
        for variables, coeff in poly.sorted_terms()
    }
