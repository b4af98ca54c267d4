"""
Level projectors from the transposition Laplacian.

L = sum_{i<j} (I - P_ij) acts on the d-th level by the scalar d(n+1-d), and these scalars
are distinct for d <= min(k, n-k). Hence

    f^{=d} = prod_{e != d} (L - lambda_e) f / prod_{e != d} (lambda_d - lambda_e)

and deg f is the least e with prod_{d <= e} (L - lambda_d) f = 0. Both only need integer
arithmetic on the truth table, one gather per coordinate pair for every application of L.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from math import comb, prod
from typing import List, Tuple

import numpy as np

from ..config import DEFAULT_CAPACITY, Capacity
from ..exceptions import PreconditionError
from .domain import SliceDomain, transposition_permutations
from .functions import SliceFunction, norm2_squared
from .linalg import clear_denominators, fractions_from

logger = logging.getLogger(__name__)

_INT64_SAFE = 2 ** 62


def level_eigenvalue(n: int, d: int) -> int:
    """Eigenvalue of the transposition Laplacian on level d."""
    return d * (n + 1 - d)


class LevelProjectors:
    """Exact level projections and degrees for one slice domain."""

    def __init__(self, domain: SliceDomain, capacity: Capacity = DEFAULT_CAPACITY):
        capacity.check_census(domain.size)
        self.domain = domain
        self.capacity = capacity
        self.pair_count = comb(domain.n, 2)
        self.eigenvalues = [level_eigenvalue(domain.n, d) for d in range(domain.max_degree + 1)]
        # |(L - lambda_e) g| <= growth * |g| entrywise
        self._growth = 2 * self.pair_count + max(self.eigenvalues)
        logger.debug("level projectors for %s: eigenvalues %s", domain, self.eigenvalues)

    def laplacian(self, batch: np.ndarray) -> np.ndarray:
        """Apply L to every row of a (B, C(n,k)) array."""
        result = self.pair_count * batch
        for perm in transposition_permutations(self.domain):
            result = result - batch[:, perm]
        return result

    def _step(self, current: np.ndarray, eigenvalue: int) -> np.ndarray:
        """(L - eigenvalue) on every row; switches to Python integers before int64 overflows."""
        if current.dtype != object and _max_abs(current) * self._growth >= _INT64_SAFE:
            current = current.astype(object)
        return self.laplacian(current) - eigenvalue * current

    def degrees(self, batch: np.ndarray) -> np.ndarray:
        """
        Degrees of integer-valued functions given as rows of a (B, C(n,k)) array.

        Returns:
            int array of length B; the zero function has degree 0
        """
        batch = np.atleast_2d(batch)
        current = batch if batch.dtype == object else batch.astype(np.int64)
        degrees = np.full(current.shape[0], -1, dtype=np.int64)
        active = np.arange(current.shape[0])
        for d, eigenvalue in enumerate(self.eigenvalues):
            current = _reduce_rows(self._step(current, eigenvalue))
            vanished = ~np.any(current != 0, axis=1)
            degrees[active[vanished]] = d
            active, current = active[~vanished], current[~vanished]
            if active.size == 0:
                break
        if active.size:
            raise PreconditionError("function has a component above level min(k, n-k)")
        return degrees

    def degree(self, f: SliceFunction) -> int:
        return int(self.degrees(_integer_row(f))[0])

    def level_numerators(self, batch: np.ndarray) -> Tuple[List[np.ndarray], List[int]]:
        """
        Integer level tables of every row of a (B, C(n,k)) integer array.

        Returns:
            (numerators, denominators) with row-wise f^{=d} = numerators[d] / denominators[d]
        """
        batch = np.atleast_2d(batch)
        batch = batch if batch.dtype == object else batch.astype(np.int64)
        numerators, denominators = [], []
        for d, lambda_d in enumerate(self.eigenvalues):
            current = batch
            for e, eigenvalue in enumerate(self.eigenvalues):
                if e != d:
                    current = self._step(current, eigenvalue)
            numerators.append(current)
            denominators.append(
                prod(lambda_d - lam for e, lam in enumerate(self.eigenvalues) if e != d)
            )
        return numerators, denominators

    def level_values(self, f: SliceFunction, d: int) -> SliceFunction:
        """f^{=d} tabulated on the slice, exactly."""
        self.capacity.check_exact(self.domain.size)
        if not 0 <= d < len(self.eigenvalues):
            return SliceFunction.constant(self.domain, 0)
        scaled, scale = clear_denominators(_exact(f).values)
        current = np.array([scaled], dtype=object)
        for e, eigenvalue in enumerate(self.eigenvalues):
            if e != d:
                current = self._step(current, eigenvalue)
        lambda_d = self.eigenvalues[d]
        denominator = scale * prod(lambda_d - lam for e, lam in enumerate(self.eigenvalues) if e != d)
        return SliceFunction(self.domain, fractions_from(current[0], denominator))

    def levels(self, f: SliceFunction) -> List[SliceFunction]:
        return [self.level_values(f, d) for d in range(len(self.eigenvalues))]

    def level_norms(self, f: SliceFunction) -> List[Fraction]:
        """[||f^{=d}||_2^2 for d = 0..min(k, n-k)]."""
        return [norm2_squared(level) for level in self.levels(f)]


def _max_abs(values: np.ndarray) -> int:
    return int(np.max(np.abs(values))) if values.size else 0


def _reduce_rows(values: np.ndarray) -> np.ndarray:
    """Divide int64 rows by the gcd of their entries; zero rows and object rows are kept."""
    if values.dtype == object or values.size == 0:
        return values
    divisors = np.gcd.reduce(values, axis=1)
    divisors[divisors == 0] = 1
    return values // divisors[:, np.newaxis]


def _exact(f: SliceFunction) -> SliceFunction:
    if not f.is_exact:
        raise PreconditionError("level projections need exact rational values")
    return f


def _integer_row(f: SliceFunction) -> np.ndarray:
    scaled, _ = clear_denominators(_exact(f).values)
    if all(abs(v) < _INT64_SAFE for v in scaled):
        return np.array([scaled], dtype=np.int64)
    return np.array([scaled], dtype=object)


@lru_cache(maxsize=32)
def level_projectors(domain: SliceDomain) -> LevelProjectors:
    """Shared read-only projectors for a domain."""
    return LevelProjectors(domain)


def degree(f: SliceFunction) -> int:
    """Degree of f on the slice: its top nonzero level (0 for constants, including 0)."""
    return level_projectors(f.domain).degree(f)
