"""
Passing between juntas on the slice and functions on a smaller hypercube.

A junta on C(n,k) with witness I, |I| = L, determines a function g on {0,1}^L as soon as
every pattern over I extends to a slice point, i.e. L <= k <= n - L. The explicit route
renumbers the witness to x_1..x_L, averages the harmonic representation over the
permutations of the trailing coordinates, writes the result as sum_A x_A Q_A(tail), and
collapses each symmetric Q_A to a polynomial in the tail weight k - (x_1 + ... + x_L).
"""

import logging
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Dict, Tuple

from ..analysis.junta import JuntaCertificate, junta_table, minimal_junta
from ..config import DEFAULT_CAPACITY, Capacity
from ..core.domain import SliceDomain
from ..core.functions import SliceFunction
from ..core.harmonic import harmonic_representation
from ..core.polynomial import MultilinearPolynomial, UnivariatePolynomial, forward_differences
from ..core.projectors import degree
from ..exceptions import ClaimViolation, PreconditionError
from .cube import CubeFunction, cube_expand

logger = logging.getLogger(__name__)


def _check_coverage(domain: SliceDomain, L: int) -> None:
    if not L <= domain.k <= domain.n - L:
        raise PreconditionError(
            f"patterns on {L} coordinates are all realised on {domain} only when "
            f"{L} <= k <= n - {L}"
        )


def _is_minimal(certificate: JuntaCertificate) -> bool:
    return certificate.size == certificate.domain.n - certificate.partition.largest_size


def slice_to_cube(f: SliceFunction, certificate: JuntaCertificate) -> CubeFunction:
    """
    The function g on {0,1}^L with f(x) = g(x restricted to the witness).

    Args:
        f: Junta on the slice
        certificate: Junta certificate for f (witness taken in increasing order)

    Returns:
        CubeFunction on L = |witness| variables

    Raises:
        PreconditionError: If some pattern over the witness is not realised on the slice
        ClaimViolation: If f is not a junta on the witness, or the degree drops the wrong way
    """
    if certificate.domain != f.domain:
        raise PreconditionError(f"certificate is for {certificate.domain}, f lives on {f.domain}")
    L = certificate.size
    _check_coverage(f.domain, L)
    g = CubeFunction(L, junta_table(f, certificate.witness))

    slice_degree = degree(f)
    if g.degree > slice_degree:
        raise ClaimViolation(f"cube degree {g.degree} exceeds slice degree {slice_degree}")
    if _is_minimal(certificate) and g.relevant != tuple(range(1, L + 1)):
        raise ClaimViolation(
            f"minimal witness {certificate.witness} but g depends only on {g.relevant}"
        )
    return g


def symmetrize_trailing(P: MultilinearPolynomial, L: int) -> MultilinearPolynomial:
    """
    Average P over all permutations of the coordinates L+1..n.

    Monomials are pooled by (head = T & [L], tail size = |T - [L]|); the pooled sum is
    spread evenly over the C(n-L, j) tail subsets of each size j.
    """
    n = P.n
    if not 0 <= L <= n:
        raise PreconditionError(f"head length {L} outside [0, {n}]")
    pooled: Dict[Tuple[Tuple[int, ...], int], Fraction] = {}
    for monomial, coeff in P.terms.items():
        head = tuple(sorted(v for v in monomial if v <= L))
        key = (head, len(monomial) - len(head))
        pooled[key] = pooled.get(key, Fraction(0)) + coeff

    tail = range(L + 1, n + 1)
    terms: Dict[Tuple[int, ...], Fraction] = {}
    for (head, size), total in pooled.items():
        if total == 0:
            continue
        share = total / comb(n - L, size)
        for subset in combinations(tail, size):
            terms[head + subset] = share
    return MultilinearPolynomial(n, terms)


def minsky_papert_collapse(Q_sym: MultilinearPolynomial) -> UnivariatePolynomial:
    """
    Univariate R with R(w) = Q_sym(x) for every x in {0,1}^m of weight w.

    R is interpolated on the weights 0..e (e = deg Q_sym) and then checked on every
    weight up to m at two different points of that weight.

    Raises:
        PreconditionError: If Q_sym is not symmetric
        ClaimViolation: If the interpolant misses some weight
    """
    if not Q_sym.is_symmetric():
        raise PreconditionError("Minsky-Papert collapse needs a symmetric polynomial")
    m = Q_sym.n
    e = Q_sym.degree
    R = UnivariatePolynomial.interpolate(
        [Q_sym.evaluate(range(1, w + 1)) for w in range(min(e, m) + 1)]
    )
    if R.degree > e:
        raise ClaimViolation(f"collapsed polynomial has degree {R.degree} > {e}")
    for w in range(m + 1):
        expected = R(w)
        for support in (range(1, w + 1), range(m - w + 1, m + 1)):
            if Q_sym.evaluate(support) != expected:
                raise ClaimViolation(f"symmetric polynomial is not R(weight) at weight {w}")
    return R


def head_collapses(
    f: SliceFunction,
    certificate: JuntaCertificate,
    capacity: Capacity = DEFAULT_CAPACITY
) -> Dict[Tuple[int, ...], UnivariatePolynomial]:
    """
    R_A for every head monomial A over x_1..x_L (witness renumbered first).

    Returns:
        Map from A (sorted tuple in 1..L) to R_A, with f(x) = sum_A x_A R_A(k - |x_head|)
        on the slice
    """
    n, L = f.domain.n, certificate.size
    witness = certificate.witness
    rest = [c for c in range(1, n + 1) if c not in witness]
    mapping = {c: t for t, c in enumerate(list(witness) + rest, start=1)}

    P = harmonic_representation(f, capacity).relabel(mapping)
    Q = symmetrize_trailing(P, L)

    grouped: Dict[Tuple[int, ...], Dict[Tuple[int, ...], Fraction]] = {}
    for monomial, coeff in Q.terms.items():
        head = tuple(sorted(v for v in monomial if v <= L))
        tail = tuple(sorted(v - L for v in monomial if v > L))
        grouped.setdefault(head, {})[tail] = coeff

    collapses = {}
    for head in sorted(grouped, key=lambda h: (len(h), h)):
        Q_A = MultilinearPolynomial(n - L, grouped[head])
        collapses[head] = minsky_papert_collapse(Q_A)
        logger.debug("head %s: R = %r", head, collapses[head])
    return collapses


def explicit_cube_polynomial(
    f: SliceFunction,
    certificate: JuntaCertificate,
    capacity: Capacity = DEFAULT_CAPACITY
) -> MultilinearPolynomial:
    """
    Degree <= deg f polynomial over x_1..x_L agreeing with slice_to_cube(f, certificate).

    Each R_A(k - s) is rewritten in the binomial basis sum_t b_t C(s, t), and C(s, t) with
    s = x_1 + ... + x_L equals the elementary symmetric polynomial e_t on the cube.

    Args:
        f: Junta on the slice
        certificate: Junta certificate for f
        capacity: Size limits

    Returns:
        MultilinearPolynomial in L variables
    """
    g = slice_to_cube(f, certificate)
    k, L = f.domain.k, certificate.size
    d = degree(f)

    result = MultilinearPolynomial(L)
    for head, R in head_collapses(f, certificate, capacity).items():
        if R.is_zero:
            continue
        span = max(R.degree, 0)
        b = forward_differences([R(k - s) for s in range(span + 1)])
        shifted = MultilinearPolynomial(L)
        for t, bt in enumerate(b):
            if bt != 0:
                shifted = shifted + MultilinearPolynomial.elementary_symmetric(L, t).scale(bt)
        result = result + MultilinearPolynomial(L, {head: 1}).cube_product(shifted)

    if result.degree > d:
        raise ClaimViolation(f"explicit polynomial has degree {result.degree} > slice degree {d}")
    if result != cube_expand(g):
        raise ClaimViolation("explicit polynomial disagrees with the extracted cube function")
    return result


def cube_to_slice(g: CubeFunction, n: int, k: int, capacity: Capacity = DEFAULT_CAPACITY) -> SliceFunction:
    """
    Embed g as the junta f(x) = g(x_1, ..., x_L) on C(n,k).

    Args:
        g: Function on {0,1}^L
        n: Slice length
        k: Slice weight, L <= k <= n - L

    Returns:
        SliceFunction with degree <= cube degree of g, and minimal junta size L when g
        depends on all of its variables
    """
    domain = SliceDomain(n, k)
    L = g.m
    _check_coverage(domain, L)
    capacity.check_exact(domain.size)
    f = SliceFunction.from_callable(domain, lambda p: g(p.bits[:L]))

    slice_degree = degree(f)
    if slice_degree > g.degree:
        raise ClaimViolation(f"slice degree {slice_degree} exceeds cube degree {g.degree}")
    if g.relevant == tuple(range(1, L + 1)):
        size = minimal_junta(f).size
        if size != L:
            raise ClaimViolation(f"g depends on all {L} variables but the junta has size {size}")
    return f
