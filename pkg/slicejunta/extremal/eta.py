"""
Longest 0/1 prefixes of nonconstant low-degree polynomials.

eta(d) is the largest m such that some nonconstant polynomial P of degree <= d has
P(0), ..., P(m-1) in {0,1}. A sequence of length m > d+1 comes from a degree-<=d
polynomial exactly when its (d+1)-th finite differences vanish, and such a sequence is
fixed by its first d+1 terms. The search therefore extrapolates each of the 2^(d+1)
prefixes with an integer difference table and records how long it stays in {0,1}.
"""

import logging
from itertools import product
from typing import List, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field

from ..config import DEFAULT_CAPACITY, Capacity
from ..exceptions import ClaimViolation, PreconditionError

logger = logging.getLogger(__name__)


class EtaSearchResult(BaseModel):
    """Outcome of the exhaustive eta(d) search."""

    d: int
    eta: int
    witness: List[int] = Field(..., description="Lexicographically smallest longest sequence")
    lower: int = Field(..., description="2 * ceil((d+1)/2)")
    upper: int = Field(..., description="2d")

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return self.model_dump()


def lower_bound(d: int) -> int:
    """2 * ceil((d+1)/2)."""
    return 2 * ((d + 2) // 2)


def upper_bound(d: int) -> int:
    return 2 * d


def is_realizable(sequence: Sequence[int], d: int) -> bool:
    """Whether some polynomial of degree <= d takes these values at 0, 1, ..., m-1."""
    if len(sequence) <= d + 1:
        return True
    return not np.any(np.diff(np.asarray(sequence, dtype=np.int64), n=d + 1))


def _check_degree(d: int, capacity: Capacity) -> None:
    if not 1 <= d <= capacity.eta_max_degree:
        raise PreconditionError(
            f"eta search supports 1 <= d <= {capacity.eta_max_degree}, got {d}"
        )


def prefix_runs(d: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Run lengths of all 2^(d+1) prefixes in lexicographic order.

    Returns:
        (prefixes, lengths): prefixes is (2^(d+1), d+1) with 0/1 entries; lengths[p] is
        the number of leading terms of the extrapolated sequence that lie in {0,1}
    """
    width = d + 1
    count = 1 << width
    shifts = np.arange(width - 1, -1, -1, dtype=np.int64)
    prefixes = (np.arange(count, dtype=np.int64)[:, np.newaxis] >> shifts) & 1

    # edge[:, t] = Delta^t of the sequence at position d - t
    edge = np.zeros((count, width), dtype=np.int64)
    row = prefixes.copy()
    for t in range(width):
        edge[:, t] = row[:, -1]
        row = np.diff(row, axis=1)

    lengths = np.full(count, width, dtype=np.int64)
    alive = np.ones(count, dtype=bool)
    for _ in range(upper_bound(d) + 2 - width):
        for t in range(width - 2, -1, -1):
            edge[:, t] += edge[:, t + 1]
        value = edge[:, 0]
        alive &= (value == 0) | (value == 1)
        lengths += alive
        if not np.any(alive):
            break
    return prefixes, lengths


def extend_sequence(prefix: Sequence[int], d: int, length: int) -> List[int]:
    """The degree-<=d extrapolation of a length-(d+1) prefix to `length` terms."""
    row = list(prefix)
    edge = []
    while row:
        edge.append(row[-1])
        row = [b - a for a, b in zip(row, row[1:])]
    sequence = list(prefix)
    while len(sequence) < length:
        for t in range(len(edge) - 2, -1, -1):
            edge[t] += edge[t + 1]
        sequence.append(edge[0])
    return sequence[:length]


def eta(d: int, capacity: Capacity = DEFAULT_CAPACITY) -> EtaSearchResult:
    """
    Exhaustive computation of eta(d) with a lexicographically smallest witness.

    Every nonconstant prefix is extrapolated, so the maximum run certifies that no
    nonconstant sequence of length eta(d)+1 is realisable.

    Args:
        d: Degree, 1 <= d <= capacity.eta_max_degree

    Returns:
        EtaSearchResult
    """
    _check_degree(d, capacity)
    prefixes, lengths = prefix_runs(d)
    constant = np.all(prefixes == prefixes[:, :1], axis=1)
    lengths = np.where(constant, -1, lengths)
    best = int(lengths.max())
    if best > upper_bound(d):
        raise ClaimViolation(f"a nonconstant degree-{d} sequence stays Boolean for {best} terms")
    index = int(np.flatnonzero(lengths == best)[0])
    witness = extend_sequence(prefixes[index].tolist(), d, best)
    logger.info("eta(%d) = %d, witness %s", d, best, witness)
    return EtaSearchResult(d=d, eta=best, witness=witness, lower=lower_bound(d), upper=upper_bound(d))


def eta_bruteforce(d: int, max_length: int) -> int:
    """Largest m <= max_length with a nonconstant realisable 0/1 sequence, by full enumeration."""
    best = 0
    for m in range(1, max_length + 1):
        if any(
            len(set(seq)) > 1 and is_realizable(seq, d)
            for seq in product((0, 1), repeat=m)
        ):
            best = m
    return best
