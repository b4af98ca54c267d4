"""
Slice domains, points and the colexicographic rank/unrank bijection.

Coordinates are 1-based throughout the public API. A point of the slice C(n,k) is
identified with its support S, |S| = k, and ranked by the combinatorial number system

    rank(S) = sum_{j=1..k} C(s_j - 1, j)        (s_1 < ... < s_k)

which orders the slice colexicographically.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from ..exceptions import PreconditionError


@dataclass(frozen=True)
class SliceDomain:
    """All length-n 0/1 vectors of Hamming weight k."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionError(f"slice needs n >= 1, got n={self.n}")
        if not 0 <= self.k <= self.n:
            raise PreconditionError(f"slice needs 0 <= k <= n, got n={self.n}, k={self.k}")

    @property
    def size(self) -> int:
        """Number of points, C(n,k)."""
        return comb(self.n, self.k)

    @property
    def max_degree(self) -> int:
        """Largest possible degree of a function on the slice."""
        return min(self.k, self.n - self.k)

    def contains(self, point: "SlicePoint") -> bool:
        return point.n == self.n and point.weight == self.k

    def points(self) -> Iterator["SlicePoint"]:
        """Iterate over all points in rank order."""
        for support in colex_supports(self.n, self.k):
            yield SlicePoint(self.n, support)

    def __str__(self) -> str:
        return f"C({self.n},{self.k})"


@dataclass(frozen=True)
class SlicePoint:
    """A point of a slice, stored as its sorted 1-based support."""

    n: int
    support: Tuple[int, ...]

    def __post_init__(self):
        support = tuple(sorted(self.support))
        if len(set(support)) != len(support):
            raise PreconditionError(f"repeated coordinate in support {self.support}")
        if support and (support[0] < 1 or support[-1] > self.n):
            raise PreconditionError(f"support {support} not inside [1, {self.n}]")
        object.__setattr__(self, 'support', support)

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "SlicePoint":
        """Build a point from a 0/1 vector (bits[0] is x_1)."""
        if any(b not in (0, 1) for b in bits):
            raise PreconditionError(f"not a 0/1 vector: {list(bits)}")
        return cls(len(bits), tuple(i + 1 for i, b in enumerate(bits) if b))

    @property
    def weight(self) -> int:
        return len(self.support)

    @property
    def bits(self) -> Tuple[int, ...]:
        members = set(self.support)
        return tuple(1 if i in members else 0 for i in range(1, self.n + 1))

    def transpose(self, i: int, j: int) -> "SlicePoint":
        """Swap coordinates i and j."""
        members = set(self.support)
        has_i, has_j = i in members, j in members
        if has_i != has_j:
            members ^= {i, j}
        return SlicePoint(self.n, tuple(members))


def colex_supports(n: int, k: int) -> List[Tuple[int, ...]]:
    """All k-subsets of [n] (1-based, sorted) in colex order."""
    supports = combinations(range(1, n + 1), k)
    return sorted(supports, key=lambda s: s[::-1])


def slice_rank(point: SlicePoint, domain: SliceDomain = None) -> int:
    """
    Colex rank of a point.

    Args:
        point: Slice point
        domain: Optional domain the point must belong to

    Returns:
        Integer in [0, C(n,k))
    """
    if domain is not None and not domain.contains(point):
        raise PreconditionError(
            f"point with support {point.support} (weight {point.weight}) is not in {domain}"
        )
    return sum(comb(s - 1, j) for j, s in enumerate(point.support, start=1))


def slice_unrank(domain: SliceDomain, r: int) -> SlicePoint:
    """
    Inverse of slice_rank.

    Args:
        domain: Slice domain
        r: Rank in [0, C(n,k))

    Returns:
        The point of rank r
    """
    if not 0 <= r < domain.size:
        raise PreconditionError(f"rank {r} out of range for {domain} (size {domain.size})")

    support = []
    remaining = r
    top = domain.n - 1
    for j in range(domain.k, 0, -1):
        # largest c with C(c, j) <= remaining
        c = top
        while comb(c, j) > remaining:
            c -= 1
        support.append(c + 1)
        remaining -= comb(c, j)
        top = c - 1
    return SlicePoint(domain.n, tuple(support))


@lru_cache(maxsize=64)
def _comb_table(n: int) -> np.ndarray:
    table = np.zeros((n + 1, n + 2), dtype=np.int64)
    for a in range(n + 1):
        for b in range(n + 2):
            table[a, b] = comb(a, b)
    return table


@lru_cache(maxsize=64)
def point_matrix(domain: SliceDomain) -> np.ndarray:
    """(C(n,k), n) uint8 matrix whose row r is the point of rank r."""
    matrix = np.zeros((domain.size, domain.n), dtype=np.uint8)
    for r, support in enumerate(colex_supports(domain.n, domain.k)):
        matrix[r, [s - 1 for s in support]] = 1
    matrix.setflags(write=False)
    return matrix


def ranks_of(bits: np.ndarray) -> np.ndarray:
    """Vectorised colex rank of every row of a 0/1 matrix."""
    bits = np.asarray(bits, dtype=np.int64)
    n = bits.shape[1]
    counts = np.cumsum(bits, axis=1)
    table = _comb_table(n)
    columns = np.arange(n)[np.newaxis, :]
    return np.sum(bits * table[columns, counts], axis=1)


@lru_cache(maxsize=1024)
def transposition_permutation(domain: SliceDomain, i: int, j: int) -> np.ndarray:
    """Array perm with perm[r] = rank of (point r) with coordinates i and j swapped."""
    if i == j:
        raise PreconditionError("a transposition needs two distinct coordinates")
    for c in (i, j):
        if not 1 <= c <= domain.n:
            raise PreconditionError(f"coordinate {c} not in [1, {domain.n}]")
    perm = _swapped_ranks(domain, i, j)
    perm.setflags(write=False)
    return perm


def _swapped_ranks(domain: SliceDomain, i: int, j: int) -> np.ndarray:
    swapped = np.array(point_matrix(domain), dtype=np.int64)
    swapped[:, [i - 1, j - 1]] = swapped[:, [j - 1, i - 1]]
    return ranks_of(swapped)


def coordinate_pairs(n: int) -> List[Tuple[int, int]]:
    """All pairs (i, j), 1 <= i < j <= n, in lexicographic order."""
    return list(combinations(range(1, n + 1), 2))


@lru_cache(maxsize=64)
def transposition_table(domain: SliceDomain) -> np.ndarray:
    """(C(n,2), C(n,k)) array stacking transposition_permutation for coordinate_pairs(n)."""
    pairs = coordinate_pairs(domain.n)
    if not pairs:
        return np.zeros((0, domain.size), dtype=np.int64)
    table = np.stack([transposition_permutation(domain, i, j) for i, j in pairs])
    table.setflags(write=False)
    return table


# Largest C(n,2) * C(n,k) for which the stacked table is kept in memory
STACKED_TABLE_ENTRIES = 1 << 24


def transposition_permutations(domain: SliceDomain) -> Iterator[np.ndarray]:
    """
    Permutations of all coordinate pairs, in coordinate_pairs(n) order.

    Small domains reuse the cached transposition_table; larger ones compute one
    permutation at a time so that only a single row is held in memory.
    """
    pairs = coordinate_pairs(domain.n)
    if len(pairs) * domain.size <= STACKED_TABLE_ENTRIES:
        yield from transposition_table(domain)
        return
    for i, j in pairs:
        yield _swapped_ranks(domain, i, j)
