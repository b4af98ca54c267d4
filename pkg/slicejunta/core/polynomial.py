"""
Exact multilinear and univariate polynomials.

MultilinearPolynomial maps monomials (frozensets of 1-based variable indices) to
nonzero Fractions. UnivariatePolynomial keeps monomial-basis coefficients, low degree
first, and converts to and from the binomial basis C(x, t) by forward differences.
"""

from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..exceptions import PreconditionError

Monomial = FrozenSet[int]


class MultilinearPolynomial:
    """A multilinear polynomial over x_1, ..., x_n with exact rational coefficients."""

    __slots__ = ('n', '_terms')

    def __init__(self, n: int, terms: Optional[Mapping[Iterable[int], object]] = None):
        self.n = n
        cleaned: Dict[Monomial, Fraction] = {}
        for variables, coeff in (terms or {}).items():
            monomial = frozenset(variables)
            if any(not 1 <= v <= n for v in monomial):
                raise PreconditionError(f"monomial {sorted(monomial)} outside x_1..x_{n}")
            value = cleaned.get(monomial, Fraction(0)) + Fraction(coeff)
            cleaned[monomial] = value
        self._terms = {m: c for m, c in cleaned.items() if c != 0}

    @classmethod
    def constant(cls, n: int, c) -> "MultilinearPolynomial":
        return cls(n, {(): c})

    @classmethod
    def variable(cls, n: int, i: int) -> "MultilinearPolynomial":
        return cls(n, {(i,): 1})

    @classmethod
    def elementary_symmetric(
        cls,
        n: int,
        e: int,
        variables: Optional[Sequence[int]] = None
    ) -> "MultilinearPolynomial":
        """e-th elementary symmetric polynomial in the given variables (default all)."""
        variables = range(1, n + 1) if variables is None else variables
        return cls(n, {subset: 1 for subset in combinations(variables, e)})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    @property
    def degree(self) -> int:
        """Largest monomial size; 0 for the zero polynomial."""
        return max((len(m) for m in self._terms), default=0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, variables: Iterable[int]) -> Fraction:
        return self._terms.get(frozenset(variables), Fraction(0))

    def homogeneous_part(self, d: int) -> "MultilinearPolynomial":
        return MultilinearPolynomial(self.n, {m: c for m, c in self._terms.items() if len(m) == d})

    def evaluate(self, support: Iterable[int]) -> Fraction:
        """Value at the 0/1 point whose coordinates equal to 1 are `support`."""
        members = frozenset(support)
        return sum((c for m, c in self._terms.items() if m <= members), Fraction(0))

    def evaluate_bits(self, bits: Sequence[int]) -> Fraction:
        return self.evaluate(i + 1 for i, b in enumerate(bits) if b)

    def derivative_sum(self) -> "MultilinearPolynomial":
        """sum_i dP/dx_i."""
        result: Dict[Monomial, Fraction] = {}
        for monomial, coeff in self._terms.items():
            for v in monomial:
                lower = monomial - {v}
                result[lower] = result.get(lower, Fraction(0)) + coeff
        return MultilinearPolynomial(self.n, result)

    def is_harmonic(self) -> bool:
        return self.derivative_sum().is_zero

    def is_symmetric(self) -> bool:
        """True if the coefficient of x_T depends only on |T| (over all n variables)."""
        by_size: Dict[int, Fraction] = {}
        for monomial, coeff in self._terms.items():
            by_size.setdefault(len(monomial), coeff)
            if by_size[len(monomial)] != coeff:
                return False
        return all(
            len([m for m in self._terms if len(m) == size]) == comb(self.n, size)
            for size in by_size
        )

    def relabel(self, mapping: Mapping[int, int], n: Optional[int] = None) -> "MultilinearPolynomial":
        """Rename variables through `mapping` (old index -> new index)."""
        n = self.n if n is None else n
        return MultilinearPolynomial(
            n, {frozenset(mapping[v] for v in m): c for m, c in self._terms.items()}
        )

    def cube_product(self, other: "MultilinearPolynomial") -> "MultilinearPolynomial":
        """Product reduced with x_i^2 = x_i (the product of functions on the cube)."""
        result: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 | m2
                result[m] = result.get(m, Fraction(0)) + c1 * c2
        return MultilinearPolynomial(max(self.n, other.n), result)

    def __add__(self, other: "MultilinearPolynomial") -> "MultilinearPolynomial":
        result = dict(self._terms)
        for m, c in other._terms.items():
            result[m] = result.get(m, Fraction(0)) + c
        return MultilinearPolynomial(max(self.n, other.n), result)

    def __neg__(self) -> "MultilinearPolynomial":
        return MultilinearPolynomial(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "MultilinearPolynomial") -> "MultilinearPolynomial":
        return self + (-other)

    def scale(self, c) -> "MultilinearPolynomial":
        c = Fraction(c)
        return MultilinearPolynomial(self.n, {m: c * v for m, v in self._terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultilinearPolynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def sorted_terms(self) -> List[Tuple[Tuple[int, ...], Fraction]]:
        """Terms as (sorted variables, coefficient), by degree then lexicographically."""
        items = [(tuple(sorted(m)), c) for m, c in self._terms.items()]
        return sorted(items, key=lambda item: (len(item[0]), item[0]))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for variables, coeff in self.sorted_terms():
            monomial = '*'.join(f"x{v}" for v in variables)
            parts.append(f"({coeff})" + (f"*{monomial}" if monomial else ''))
        return ' + '.join(parts)


def forward_differences(values: Sequence) -> List:
    """[Delta^t v(0) for t = 0 .. len(values)-1], exact for ints and Fractions."""
    row = list(values)
    leading = []
    while row:
        leading.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return leading


class UnivariatePolynomial:
    """A univariate polynomial with exact rational coefficients (low degree first)."""

    __slots__ = ('coeffs',)

    def __init__(self, coeffs: Iterable = ()):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(coeffs)

    @classmethod
    def from_binomial_basis(cls, b: Sequence) -> "UnivariatePolynomial":
        """sum_t b[t] * C(x, t)."""
        result = [Fraction(0)] * max(len(b), 1)
        falling = [Fraction(1)]  # x(x-1)...(x-t+1), monomial coefficients
        for t, bt in enumerate(b):
            if t > 0:
                shifted = [Fraction(0)] + falling
                for idx, c in enumerate(falling):
                    shifted[idx] -= (t - 1) * c
                falling = shifted
            scale = Fraction(bt) / factorial(t)
            for idx, c in enumerate(falling):
                result[idx] += scale * c
        return cls(result)

    @classmethod
    def interpolate(cls, values: Sequence) -> "UnivariatePolynomial":
        """The unique polynomial of degree < len(values) through (w, values[w]), w = 0, 1, ..."""
        return cls.from_binomial_basis(forward_differences([Fraction(v) for v in values]))

    @property
    def degree(self) -> int:
        """Degree; 0 for the zero polynomial."""
        return max(len(self.coeffs) - 1, 0)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x) -> Fraction:
        result = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def values(self, count: int) -> List[Fraction]:
        """[P(0), ..., P(count-1)]."""
        return [self(w) for w in range(count)]

    def binomial_coefficients(self) -> List[Fraction]:
        """b with P(x) = sum_t b[t] C(x, t)."""
        return forward_differences(self.values(self.degree + 1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return ' + '.join(f"({c})*s^{e}" for e, c in enumerate(self.coeffs) if c != 0)
