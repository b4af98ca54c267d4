"""
Zero-influence structure and minimal juntas on the slice.

Coordinates i and j are equivalent when Inf_ij[f] = 0. If Inf_ik = Inf_jk = 0 then
(i j) = (i k)(j k)(i k) fixes f as well, so the relation is transitive; this is checked on
every partition rather than assumed. A set I is a junta witness exactly when [n] minus I
lies inside one class, so a largest class gives a minimal witness.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..core.domain import SliceDomain, point_matrix
from ..core.functions import SliceFunction, apply_transposition, restrict
from ..exceptions import ClaimViolation, PreconditionError
from .influence import InfluenceProfile, influence_profile

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ZeroInfluencePartition:
    """Classes of [n] under i ~ j iff Inf_ij = 0, each sorted, ordered by smallest member."""

    n: int
    classes: Tuple[Tuple[int, ...], ...]

    def class_of(self, i: int) -> Tuple[int, ...]:
        for cls in self.classes:
            if i in cls:
                return cls
        raise PreconditionError(f"coordinate {i} not in [1, {self.n}]")

    @property
    def largest_size(self) -> int:
        return max(len(cls) for cls in self.classes)

    def largest_classes(self) -> List[Tuple[int, ...]]:
        return [cls for cls in self.classes if len(cls) == self.largest_size]


def partition_from_zero_pairs(n: int, zero_pairs: Iterable[Tuple[int, int]]) -> ZeroInfluencePartition:
    """
    Build the zero-influence partition and check that it is transitive.

    Args:
        n: Number of coordinates
        zero_pairs: Pairs (i, j), i < j, whose influence is exactly 0

    Raises:
        ClaimViolation: If two coordinates are joined through a chain of zero pairs
            but have nonzero influence themselves
    """
    zero = set(zero_pairs)
    parent = list(range(n + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, j in zero:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    groups: Dict[int, List[int]] = {}
    for i in range(1, n + 1):
        groups.setdefault(find(i), []).append(i)
    classes = tuple(sorted(tuple(members) for members in groups.values()))

    for cls in classes:
        for pair in combinations(cls, 2):
            if pair not in zero:
                raise ClaimViolation(
                    f"zero influences are not transitive: {pair} joined through class {cls}"
                )
    return ZeroInfluencePartition(n, classes)


def zero_influence_partition(
    f: SliceFunction,
    profile: Optional[InfluenceProfile] = None
) -> ZeroInfluencePartition:
    """Partition [n] into classes of coordinates with pairwise zero influence."""
    profile = profile or influence_profile(f)
    return partition_from_zero_pairs(f.domain.n, profile.zero_pairs())


def pattern_reachable(domain: SliceDomain, size: int, weight: int) -> bool:
    """Whether a pattern of the given weight on `size` coordinates extends to a slice point."""
    return weight <= domain.k and domain.k - weight <= domain.n - size


def pattern_index(bits: Sequence[int]) -> int:
    """Binary index of a pattern, bit t <-> t-th witness coordinate."""
    return sum(1 << t for t, b in enumerate(bits) if b)


@dataclass(frozen=True)
class JuntaCertificate:
    """
    A minimal junta witness I with the table of f on the patterns over I.

    table[idx] is the value of f on points whose restriction to the witness (in increasing
    coordinate order) has binary index idx; None marks patterns that no slice point
    realises.
    """

    domain: SliceDomain
    witness: Tuple[int, ...]
    table: Tuple[Optional[Fraction], ...]
    partition: ZeroInfluencePartition

    @property
    def size(self) -> int:
        return len(self.witness)

    @property
    def unconstrained(self) -> List[int]:
        return [idx for idx, value in enumerate(self.table) if value is None]

    def value(self, bits: Sequence[int]):
        """Value of f on any point whose witness pattern is `bits`."""
        return self.table[pattern_index(bits)]

    def relevant(self) -> Tuple[int, ...]:
        """Witness coordinates on which the table changes between two realised patterns."""
        relevant = []
        for t, coordinate in enumerate(self.witness):
            for idx, value in enumerate(self.table):
                other = self.table[idx ^ (1 << t)]
                if value is not None and other is not None and value != other:
                    relevant.append(coordinate)
                    break
        return tuple(relevant)


def junta_table(f: SliceFunction, witness: Sequence[int]) -> Tuple[Optional[Fraction], ...]:
    """
    Values of f per pattern over `witness`.

    Raises:
        ClaimViolation: If two points with the same pattern disagree (f is not an I-junta)
    """
    witness = tuple(sorted(witness))
    table: List[Optional[Fraction]] = [None] * (1 << len(witness))
    if witness:
        columns = point_matrix(f.domain)[:, [c - 1 for c in witness]].astype(np.int64)
        indices = columns @ (1 << np.arange(len(witness), dtype=np.int64))
    else:
        indices = np.zeros(f.domain.size, dtype=np.int64)
    for rank, idx in enumerate(indices.tolist()):
        value = f.values[rank]
        if table[idx] is None:
            table[idx] = value
        elif table[idx] != value:
            raise ClaimViolation(f"f is not a junta on {witness}: pattern {idx} takes two values")
    return tuple(table)


def is_junta(f: SliceFunction, witness: Iterable[int]) -> bool:
    """Whether f is invariant under every permutation of the coordinates outside witness."""
    inside = set(witness)
    outside = [c for c in range(1, f.domain.n + 1) if c not in inside]
    return all(
        apply_transposition(f, a, b) == f
        for a, b in zip(outside, outside[1:])
    )


def certificate_from_partition(f: SliceFunction, partition: ZeroInfluencePartition) -> JuntaCertificate:
    """Witness = complement of a largest class, lexicographically smallest among ties."""
    everything = range(1, f.domain.n + 1)
    witnesses = [
        tuple(c for c in everything if c not in cls)
        for cls in partition.largest_classes()
    ]
    witness = min(witnesses)
    return JuntaCertificate(f.domain, witness, junta_table(f, witness), partition)


def minimal_junta(f: SliceFunction) -> JuntaCertificate:
    """
    Smallest set I such that f is an I-junta.

    Args:
        f: Function on the slice

    Returns:
        JuntaCertificate with size n - (largest zero-influence class)
    """
    return certificate_from_partition(f, zero_influence_partition(f))


@dataclass(frozen=True)
class RestrictionWitness:
    """Minimal junta of the restriction x_i = b, in the original coordinates."""

    coordinate: int
    witness: Tuple[int, ...]
    relevant: Tuple[int, ...]


def _lift(coordinates: Iterable[int], removed: int) -> Tuple[int, ...]:
    return tuple(c if c < removed else c + 1 for c in coordinates)


def restriction_witnesses(f: SliceFunction, b: int) -> List[RestrictionWitness]:
    """
    For every coordinate i, the minimal junta of f restricted to x_i = b.

    Returns:
        One RestrictionWitness per coordinate; `relevant` keeps only the witness
        coordinates the restricted table depends on
    """
    results = []
    for i in range(1, f.domain.n + 1):
        certificate = minimal_junta(restrict(f, i, b))
        results.append(RestrictionWitness(
            coordinate=i,
            witness=_lift(certificate.witness, i),
            relevant=_lift(certificate.relevant(), i),
        ))
    return results


@dataclass(frozen=True)
class InductionReport:
    """Union S of the restriction witnesses and whether f is an S-junta."""

    b: int
    witnesses: Tuple[RestrictionWitness, ...]
    union: Tuple[int, ...]
    is_junta: bool


def induction_union(f: SliceFunction, b: int) -> InductionReport:
    """Collect the restriction witnesses and test f against their union."""
    witnesses = tuple(restriction_witnesses(f, b))
    union = tuple(sorted({c for w in witnesses for c in w.relevant}))
    return InductionReport(b, witnesses, union, is_junta(f, union))


@dataclass(frozen=True)
class MatchingCover:
    """Greedy maximal matching in the graph of pairs with influence >= threshold."""

    threshold: Fraction
    edges: Tuple[Tuple[int, int], ...]
    matching: Tuple[Tuple[int, int], ...]
    cover: Tuple[int, ...]
    is_junta: bool
    influence_sum: Fraction
    edge_lower_bound: Fraction
    counting_bound_holds: bool


def matching_cover(f: SliceFunction, threshold=None) -> MatchingCover:
    """
    Vertex cover of the heavy-influence graph through a maximal matching.

    Every pair outside the cover has influence below the threshold. With the threshold at
    most the smallest nonzero influence, those pairs have influence 0 and f is a junta on
    the cover. Each matched edge (i, j) and third coordinate c force an edge at c, so the
    graph has at least |M|(n-2)/2 edges.

    Args:
        f: Function on the slice
        threshold: Edge threshold; defaults to the smallest nonzero influence

    Returns:
        MatchingCover
    """
    profile = influence_profile(f)
    if threshold is None:
        threshold = profile.min_nonzero()
    threshold = Fraction(threshold) if threshold is not None else Fraction(1)

    edges = tuple(sorted(p for p, v in profile.pairwise.items() if v != 0 and v >= threshold))
    matched: set = set()
    matching = []
    for i, j in edges:
        if i not in matched and j not in matched:
            matching.append((i, j))
            matched.update((i, j))
    cover = tuple(sorted(matched))

    n = f.domain.n
    influence_sum = sum(profile.pairwise.values(), Fraction(0))
    edge_bound = Fraction(len(matching) * max(n - 2, 0), 2)
    return MatchingCover(
        threshold=threshold,
        edges=edges,
        matching=tuple(matching),
        cover=cover,
        is_junta=is_junta(f, cover),
        influence_sum=influence_sum,
        edge_lower_bound=edge_bound,
        counting_bound_holds=len(edges) >= edge_bound and influence_sum >= threshold * edge_bound,
    )
