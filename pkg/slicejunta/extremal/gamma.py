"""
How many coordinates a Boolean degree-d function on the hypercube can depend on.
"""

import logging
from typing import Optional, Tuple

import numpy as np

from ..config import GammaReport
from ..exceptions import PreconditionError
from ..transfer.cube import mobius_transform, popcounts

logger = logging.getLogger(__name__)

BRUTEFORCE_MAX_DEGREE = 2


def nisan_szegedy_bound(d: int) -> int:
    """d * 2^(d-1)."""
    return d * (1 << (d - 1))


def all_truth_tables(m: int) -> np.ndarray:
    """(2^(2^m), 2^m) int64 array; row c is the table with bit idx of c at column idx."""
    size = 1 << m
    codes = np.arange(1 << size, dtype=np.int64)[:, np.newaxis]
    return (codes >> np.arange(size, dtype=np.int64)) & 1


def _full_dependence_at_degree(m: int, d: int) -> Optional[int]:
    """Smallest code of a degree-<=d Boolean function depending on all m variables."""
    coefficients = mobius_transform(all_truth_tables(m))
    nonzero = coefficients != 0
    weights = popcounts(1 << m)
    degrees = np.max(np.where(nonzero, weights[np.newaxis, :], 0), axis=1)
    depends = np.ones(nonzero.shape[0], dtype=bool)
    indices = np.arange(1 << m)
    for i in range(m):
        depends &= np.any(nonzero[:, (indices >> i) & 1 == 1], axis=1)
    hits = np.flatnonzero((degrees <= d) & depends)
    return int(hits[0]) if hits.size else None


def gamma_bruteforce(d: int) -> Tuple[int, Optional[int]]:
    """
    Largest m <= d * 2^(d-1) such that some Boolean degree-<=d function depends on all m
    variables, by sweeping every truth table.

    Returns:
        (m, smallest witness code on m variables)
    """
    if not 1 <= d <= BRUTEFORCE_MAX_DEGREE:
        raise PreconditionError(f"brute force covers 1 <= d <= {BRUTEFORCE_MAX_DEGREE}, got {d}")
    for m in range(nisan_szegedy_bound(d), 0, -1):
        witness = _full_dependence_at_degree(m, d)
        logger.debug("gamma(%d): m = %d %s", d, m, "attained" if witness is not None else "no witness")
        if witness is not None:
            return m, witness
    return 0, 0


def gamma_bounds(d: int) -> GammaReport:
    """
    Nisan-Szegedy cap on gamma(d) and, for d <= 2, its exact value.

    Args:
        d: Degree >= 1

    Returns:
        GammaReport; for d >= 3 the brute force is skipped and a notice is set
    """
    if d < 1:
        raise PreconditionError(f"gamma needs d >= 1, got {d}")
    cap = nisan_szegedy_bound(d)
    if d > BRUTEFORCE_MAX_DEGREE:
        return GammaReport(
            d=d,
            ns_upper=cap,
            notice=f"brute force needs 2^(2^{cap}) truth tables; skipped for d >= 3",
        )
    m, code = gamma_bruteforce(d)
    witness = [(code >> idx) & 1 for idx in range(1 << m)]
    return GammaReport(d=d, ns_upper=cap, bruteforce=m, attained=(m == cap), witness=witness)
