"""
Functions on the slice and the elementary operations on them.
"""

from fractions import Fraction
from numbers import Rational, Real
from typing import Callable, Iterable, Union

import numpy as np

from ..exceptions import DomainMismatchError, PreconditionError
from .domain import (
    SliceDomain,
    SlicePoint,
    point_matrix,
    ranks_of,
    slice_rank,
    transposition_permutation,
)

Value = Union[Fraction, float]


def to_value(value) -> Value:
    """Coerce a number (or 'p/q' string) to an exact Fraction; floats stay floats."""
    if isinstance(value, (bool, np.integer)):
        return Fraction(int(value))
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, Real):
        return float(value)
    raise TypeError(f"not a real number: {value!r}")


class SliceFunction:
    """
    A real-valued function on a slice, stored by colex rank.

    Values are exact Fractions unless the function came out of a floating-point
    operation (the noise operator), in which case is_exact is False.
    """

    __slots__ = ('domain', 'values', '_boolean')

    def __init__(self, domain: SliceDomain, values: Iterable):
        values = tuple(to_value(v) for v in values)
        if len(values) != domain.size:
            raise PreconditionError(
                f"{domain} has {domain.size} points but {len(values)} values were given"
            )
        self.domain = domain
        self.values = values
        self._boolean = all(
            isinstance(v, Fraction) and (v == 0 or v == 1) for v in values
        )

    # --- constructors -------------------------------------------------

    @classmethod
    def constant(cls, domain: SliceDomain, c=1) -> "SliceFunction":
        return cls(domain, [c] * domain.size)

    @classmethod
    def from_callable(cls, domain: SliceDomain, fn: Callable[[SlicePoint], object]) -> "SliceFunction":
        """Tabulate fn over the points of the domain in rank order."""
        return cls(domain, [fn(point) for point in domain.points()])

    @classmethod
    def from_code(cls, domain: SliceDomain, code: int) -> "SliceFunction":
        """Boolean function whose value at rank r is bit r of code."""
        if not 0 <= code < (1 << domain.size):
            raise PreconditionError(f"code {code} does not fit {domain.size} bits")
        return cls(domain, [(code >> r) & 1 for r in range(domain.size)])

    @classmethod
    def dictator(cls, domain: SliceDomain, i: int) -> "SliceFunction":
        """x -> x_i."""
        _check_coordinate(domain, i)
        return cls(domain, point_matrix(domain)[:, i - 1].tolist())

    @classmethod
    def anti_dictator(cls, domain: SliceDomain, i: int) -> "SliceFunction":
        """x -> 1 - x_i."""
        _check_coordinate(domain, i)
        return cls(domain, (1 - point_matrix(domain)[:, i - 1].astype(int)).tolist())

    # --- properties ---------------------------------------------------

    @property
    def is_boolean(self) -> bool:
        return self._boolean

    @property
    def is_exact(self) -> bool:
        return all(isinstance(v, Fraction) for v in self.values)

    @property
    def is_constant(self) -> bool:
        return all(v == self.values[0] for v in self.values)

    def __call__(self, point: SlicePoint) -> Value:
        return self.values[slice_rank(point, self.domain)]

    def to_code(self) -> int:
        """Bit-packed truth table of a Boolean function (bit r = value at rank r)."""
        if not self.is_boolean:
            raise PreconditionError("only Boolean functions can be bit-packed")
        return sum(1 << r for r, v in enumerate(self.values) if v)

    def as_array(self, dtype=float) -> np.ndarray:
        if dtype is object:
            return np.array(self.values, dtype=object)
        return np.array([float(v) for v in self.values], dtype=dtype)

    # --- arithmetic ---------------------------------------------------

    def _combine(self, other: "SliceFunction", op) -> "SliceFunction":
        check_same_domain(self, other)
        return SliceFunction(self.domain, [op(a, b) for a, b in zip(self.values, other.values)])

    def __add__(self, other: "SliceFunction") -> "SliceFunction":
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other: "SliceFunction") -> "SliceFunction":
        return self._combine(other, lambda a, b: a - b)

    def __mul__(self, other: "SliceFunction") -> "SliceFunction":
        return self._combine(other, lambda a, b: a * b)

    def scale(self, c) -> "SliceFunction":
        c = to_value(c)
        return SliceFunction(self.domain, [c * v for v in self.values])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SliceFunction):
            return NotImplemented
        return self.domain == other.domain and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.domain, self.values))

    def __repr__(self) -> str:
        shown = ', '.join(str(v) for v in self.values[:8])
        more = ', ...' if len(self.values) > 8 else ''
        return f"SliceFunction({self.domain}, [{shown}{more}])"


def _check_coordinate(domain: SliceDomain, i: int) -> None:
    if not 1 <= i <= domain.n:
        raise PreconditionError(f"coordinate {i} not in [1, {domain.n}]")


def check_same_domain(f: SliceFunction, g: SliceFunction) -> None:
    if f.domain != g.domain:
        raise DomainMismatchError(f"functions live on {f.domain} and {g.domain}")


def inner_product(f: SliceFunction, g: SliceFunction) -> Value:
    """E[fg] under the uniform measure on the slice; exact for exact inputs."""
    check_same_domain(f, g)
    total = sum((a * b for a, b in zip(f.values, g.values)), Fraction(0))
    return total / f.domain.size


def norm2_squared(f: SliceFunction) -> Value:
    """||f||_2^2 = E[f^2]."""
    return inner_product(f, f)


def p_norm(f: SliceFunction, p: float) -> float:
    """||f||_p = E[|f|^p]^(1/p), in floating point."""
    if p < 1:
        raise PreconditionError(f"p-norm needs p >= 1, got {p}")
    values = np.abs(f.as_array(float))
    return float(np.mean(values ** p) ** (1.0 / p))


def apply_transposition(f: SliceFunction, i: int, j: int) -> SliceFunction:
    """f^{(i j)}(x) = f(x^{(i j)})."""
    perm = transposition_permutation(f.domain, i, j)
    return SliceFunction(f.domain, [f.values[r] for r in perm])


def restrict(f: SliceFunction, i: int, b: int) -> SliceFunction:
    """
    Restriction of f to the points with x_i = b.

    Args:
        f: Function on C(n,k)
        i: Coordinate to fix (1-based)
        b: Value 0 or 1

    Returns:
        Function on C(n-1, k-b); coordinate i is deleted and later coordinates shift down
    """
    domain = f.domain
    _check_coordinate(domain, i)
    if b not in (0, 1):
        raise PreconditionError(f"restriction value must be 0 or 1, got {b}")
    if domain.n < 2 or not 0 <= domain.k - b <= domain.n - 1:
        raise PreconditionError(
            f"restricting {domain} at x_{i} = {b} leaves a degenerate slice"
        )
    target = SliceDomain(domain.n - 1, domain.k - b)
    sub_points = point_matrix(target).astype(np.int64)
    column = np.full((target.size, 1), b, dtype=np.int64)
    lifted = np.concatenate([sub_points[:, :i - 1], column, sub_points[:, i - 1:]], axis=1)
    ranks = ranks_of(lifted)
    return SliceFunction(target, [f.values[r] for r in ranks])


def random_boolean(domain: SliceDomain, rng: np.random.Generator) -> SliceFunction:
    """Uniformly random Boolean function."""
    return SliceFunction(domain, rng.integers(0, 2, size=domain.size).tolist())
