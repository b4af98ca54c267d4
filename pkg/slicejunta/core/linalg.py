"""
Exact linear algebra over the integers.

Fraction-free (Bareiss) elimination on numpy object arrays of Python ints. Every
division is exact; a nonzero remainder means the arithmetic went wrong and raises
SingularSystemError instead of silently rounding.
"""

import logging
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Tuple

import numpy as np

from ..exceptions import SingularSystemError

logger = logging.getLogger(__name__)


def as_integer_matrix(rows) -> np.ndarray:
    """Copy a matrix into an object array of Python ints."""
    matrix = np.array(rows, dtype=object)
    if matrix.ndim == 1:
        matrix = matrix.reshape(-1, 1)
    return np.vectorize(int, otypes=[object])(matrix) if matrix.size else matrix


def clear_denominators(values: Iterable) -> Tuple[list, int]:
    """
    Scale rationals to integers.

    Returns:
        (integers, scale) with integers[i] = values[i] * scale
    """
    values = [Fraction(v) for v in values]
    scale = lcm(*(v.denominator for v in values)) if values else 1
    return [int(v * scale) for v in values], scale


def _exact_divide(block: np.ndarray, divisor: int) -> np.ndarray:
    quotient = block // divisor
    if np.any(quotient * divisor != block):
        raise SingularSystemError(f"inexact division by {divisor} during elimination")
    return quotient


def solve_fraction_free(matrix, rhs) -> Tuple[np.ndarray, int]:
    """
    Solve A X = B exactly by fraction-free Gauss-Jordan elimination.

    Args:
        matrix: Square integer matrix A (N x N)
        rhs: Integer right-hand side B (N x r, or length N)

    Returns:
        (numerators, denominator) with X = numerators / denominator; the denominator
        is +-det(A)

    Raises:
        SingularSystemError: If A is singular
    """
    a = as_integer_matrix(matrix)
    b = as_integer_matrix(rhs)
    size = a.shape[0]
    if a.shape != (size, size) or b.shape[0] != size:
        raise SingularSystemError(f"shape mismatch: A is {a.shape}, B is {b.shape}")

    work = np.concatenate([a, b], axis=1)
    previous = 1
    for col in range(size):
        nonzero = np.flatnonzero(work[col:, col] != 0)
        if nonzero.size == 0:
            raise SingularSystemError(f"no pivot in column {col} of a {size}x{size} system")
        pivot_row = col + int(nonzero[0])
        if pivot_row != col:
            work[[col, pivot_row]] = work[[pivot_row, col]]

        pivot = work[col, col]
        factors = work[:, col].copy()
        factors[col] = 0
        updated = pivot * work - factors[:, np.newaxis] * work[col][np.newaxis, :]
        updated[col] = work[col] * previous
        work = _exact_divide(updated, previous)
        previous = pivot

    denominator = int(work[size - 1, size - 1])
    diagonal = np.diagonal(work[:, :size])
    if np.any(diagonal != denominator):
        raise SingularSystemError("elimination did not end on a scalar diagonal")
    logger.debug("solved %dx%d exact system, denominator has %d digits",
                 size, size, len(str(abs(denominator))))
    return work[:, size:], denominator


def exact_rank(matrix) -> int:
    """Rank of an integer matrix by fraction-free row reduction."""
    work = as_integer_matrix(matrix)
    if work.size == 0:
        return 0
    rows, cols = work.shape
    rank = 0
    previous = 1
    for col in range(cols):
        if rank == rows:
            break
        nonzero = np.flatnonzero(work[rank:, col] != 0)
        if nonzero.size == 0:
            continue
        pivot_row = rank + int(nonzero[0])
        if pivot_row != rank:
            work[[rank, pivot_row]] = work[[pivot_row, rank]]
        pivot = work[rank, col]
        below = work[rank + 1:]
        factors = below[:, col].copy()
        updated = pivot * below - factors[:, np.newaxis] * work[rank][np.newaxis, :]
        work[rank + 1:] = _exact_divide(updated, previous)
        previous = pivot
        rank += 1
    return rank


def fractions_from(numerators: Sequence, denominator: int) -> list:
    """[Fraction(p, denominator) for p in numerators]."""
    return [Fraction(int(p), denominator) for p in numerators]
