"""
Functions on the hypercube {0,1}^m and their multilinear (Moebius) expansion.

Truth tables are indexed in binary with bit i-1 of the index holding x_i.
"""

from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Sequence, Tuple

import numpy as np

from ..config import DEFAULT_CAPACITY, Capacity
from ..core.functions import to_value
from ..core.polynomial import MultilinearPolynomial
from ..exceptions import PreconditionError


def mobius_transform(table: np.ndarray) -> np.ndarray:
    """
    Multilinear coefficients of every row of a (..., 2^m) truth table.

    Coefficient at index s belongs to the monomial prod_{bit i-1 of s set} x_i. Works on
    int64 and object arrays; the input is not modified.
    """
    result = np.array(table, copy=True)
    size = result.shape[-1]
    m = size.bit_length() - 1
    if 1 << m != size:
        raise PreconditionError(f"truth table length {size} is not a power of two")
    lead = result.shape[:-1]
    for i in range(m):
        view = result.reshape(lead + (-1, 2, 1 << i))
        view[..., 1, :] -= view[..., 0, :]
        result = view.reshape(lead + (size,))
    return result


def inverse_mobius_transform(coefficients: np.ndarray) -> np.ndarray:
    """Truth table from multilinear coefficients (zeta transform)."""
    result = np.array(coefficients, copy=True)
    size = result.shape[-1]
    m = size.bit_length() - 1
    lead = result.shape[:-1]
    for i in range(m):
        view = result.reshape(lead + (-1, 2, 1 << i))
        view[..., 1, :] += view[..., 0, :]
        result = view.reshape(lead + (size,))
    return result


def _subset_of(index: int) -> Tuple[int, ...]:
    return tuple(i + 1 for i in range(index.bit_length()) if (index >> i) & 1)


def popcounts(size: int) -> np.ndarray:
    """Hamming weight of every index below size."""
    indices = np.arange(size, dtype=np.int64)
    counts = np.zeros(size, dtype=np.int64)
    while np.any(indices):
        counts += indices & 1
        indices >>= 1
    return counts


class CubeFunction:
    """A function {0,1}^m -> Q stored as a truth table."""

    def __init__(self, m: int, values: Iterable, capacity: Capacity = DEFAULT_CAPACITY):
        if m < 0:
            raise PreconditionError(f"number of variables must be >= 0, got {m}")
        if m > capacity.cube_variables:
            raise PreconditionError(
                f"cube functions support at most {capacity.cube_variables} variables, got {m}"
            )
        values = tuple(to_value(v) for v in values)
        if len(values) != 1 << m:
            raise PreconditionError(f"{m} variables need {1 << m} values, got {len(values)}")
        if not all(isinstance(v, Fraction) for v in values):
            raise PreconditionError("cube functions hold exact values")
        self.m = m
        self.values = values

    @classmethod
    def from_callable(cls, m: int, fn: Callable[[Tuple[int, ...]], object]) -> "CubeFunction":
        """Tabulate fn(bits), bits[0] = x_1."""
        return cls(m, [fn(tuple((idx >> i) & 1 for i in range(m))) for idx in range(1 << m)])

    @classmethod
    def from_code(cls, m: int, code: int) -> "CubeFunction":
        return cls(m, [(code >> idx) & 1 for idx in range(1 << m)])

    @classmethod
    def constant(cls, m: int, c=0) -> "CubeFunction":
        return cls(m, [c] * (1 << m))

    @classmethod
    def dictator(cls, m: int, i: int = 1) -> "CubeFunction":
        return cls.from_callable(m, lambda bits: bits[i - 1])

    @classmethod
    def and_(cls, m: int) -> "CubeFunction":
        return cls.from_callable(m, lambda bits: int(all(bits)))

    @classmethod
    def or_(cls, m: int) -> "CubeFunction":
        return cls.from_callable(m, lambda bits: int(any(bits)))

    @classmethod
    def parity(cls, m: int) -> "CubeFunction":
        return cls.from_callable(m, lambda bits: sum(bits) % 2)

    @property
    def is_boolean(self) -> bool:
        return all(v == 0 or v == 1 for v in self.values)

    def __call__(self, bits: Sequence[int]):
        return self.values[sum(1 << i for i, b in enumerate(bits) if b)]

    def to_code(self) -> int:
        if not self.is_boolean:
            raise PreconditionError("only Boolean cube functions can be bit-packed")
        return sum(1 << idx for idx, v in enumerate(self.values) if v)

    @cached_property
    def coefficients(self) -> np.ndarray:
        """Moebius coefficients indexed like the truth table (object array of Fractions)."""
        if all(v.denominator == 1 for v in self.values) and self.m < 60:
            table = np.array([int(v) for v in self.values], dtype=object)
            return np.array([Fraction(int(c)) for c in mobius_transform(table)], dtype=object)
        return mobius_transform(np.array(self.values, dtype=object))

    @cached_property
    def degree(self) -> int:
        nonzero = np.flatnonzero(self.coefficients != 0)
        if nonzero.size == 0:
            return 0
        return int(popcounts(1 << self.m)[nonzero].max())

    @cached_property
    def relevant(self) -> Tuple[int, ...]:
        """Variables whose flip changes the value somewhere."""
        table = np.array(self.values, dtype=object)
        relevant = []
        for i in range(self.m):
            view = table.reshape(-1, 2, 1 << i)
            if np.any(view[:, 0, :] != view[:, 1, :]):
                relevant.append(i + 1)
        return tuple(relevant)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CubeFunction):
            return NotImplemented
        return self.m == other.m and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.m, self.values))

    def __repr__(self) -> str:
        return f"CubeFunction(m={self.m}, values={[str(v) for v in self.values]})"


def cube_expand(g: CubeFunction) -> MultilinearPolynomial:
    """Unique multilinear polynomial agreeing with g on {0,1}^m."""
    return MultilinearPolynomial(g.m, {
        _subset_of(idx): coeff for idx, coeff in enumerate(g.coefficients) if coeff != 0
    })


def cube_degree(g: CubeFunction) -> int:
    """Degree of the multilinear expansion (0 for constants)."""
    return g.degree


def cube_relevant(g: CubeFunction) -> Tuple[int, ...]:
    """Variables appearing in the multilinear expansion."""
    return g.relevant


def cube_from_polynomial(poly: MultilinearPolynomial, m: int) -> CubeFunction:
    """Evaluate a multilinear polynomial over x_1..x_m on every cube point."""
    coefficients = np.zeros(1 << m, dtype=object)
    coefficients[:] = Fraction(0)
    for monomial, coeff in poly.terms.items():
        if any(v > m for v in monomial):
            raise PreconditionError(f"monomial {sorted(monomial)} uses a variable beyond x_{m}")
        coefficients[sum(1 << (v - 1) for v in monomial)] = coeff
    return CubeFunction(m, inverse_mobius_transform(coefficients).tolist())
