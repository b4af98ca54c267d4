"""
Polynomials and slice functions built from long Boolean prefixes.
"""

import logging
from typing import Dict, Optional, Tuple

from ..analysis.junta import minimal_junta
from ..config import DEFAULT_CAPACITY, Capacity
from ..core.domain import SliceDomain
from ..core.functions import SliceFunction
from ..core.polynomial import UnivariatePolynomial
from ..core.projectors import degree
from ..exceptions import ClaimViolation, PreconditionError
from .eta import eta, is_realizable, lower_bound

logger = logging.getLogger(__name__)


def pd_polynomial(d: int) -> UnivariatePolynomial:
    """
    P_d(s) = sum_{e=0}^{d} (-1)^e C(s, e), which equals (-1)^d C(s-1, d).

    Raises:
        ClaimViolation: If P_d leaves {0,1} on s = 0 .. 2*ceil((d+1)/2) - 1
    """
    if d < 1:
        raise PreconditionError(f"P_d needs d >= 1, got {d}")
    poly = UnivariatePolynomial.from_binomial_basis([(-1) ** e for e in range(d + 1)])
    values = poly.values(lower_bound(d))
    if any(v not in (0, 1) for v in values):
        raise ClaimViolation(f"P_{d} leaves {{0,1}} on its first {lower_bound(d)} values: {values}")
    return poly


def eta_polynomial(d: int, capacity: Capacity = DEFAULT_CAPACITY) -> UnivariatePolynomial:
    """Degree-<=d interpolant of the eta(d) witness, Boolean on 0 .. eta(d)-1."""
    result = eta(d, capacity)
    return UnivariatePolynomial.interpolate(result.witness[:d + 1])


def eta_bounds_check(d: int, capacity: Capacity = DEFAULT_CAPACITY) -> Tuple[int, int, int]:
    """
    Check 2 * ceil((d+1)/2) <= eta(d) <= 2d.

    The lower bound is cross-checked against the value sequence of P_d.

    Returns:
        (lower, upper, eta)
    """
    result = eta(d, capacity)
    lower, upper = result.lower, result.upper
    if not lower <= result.eta <= upper:
        raise ClaimViolation(f"eta({d}) = {result.eta} outside [{lower}, {upper}]")
    values = [int(v) for v in pd_polynomial(d).values(lower)]
    if len(set(values)) < 2 or not is_realizable(values, d):
        raise ClaimViolation(f"P_{d} does not witness the lower bound {lower}")
    return lower, upper, result.eta


def fd_construction(
    d: int,
    n: int,
    k: int,
    polynomial: Optional[UnivariatePolynomial] = None,
    capacity: Capacity = DEFAULT_CAPACITY
) -> SliceFunction:
    """
    f_d(x) = P(x_1 + ... + x_{floor(n/2)}) on C(n,k).

    Args:
        d: Degree bound
        n: Slice length
        k: Slice weight, k < eta(d)
        polynomial: Univariate P of degree <= d; defaults to P_d when k is below its
            Boolean prefix and to the eta(d) witness interpolant otherwise
        capacity: Size limits

    Returns:
        Boolean SliceFunction of degree <= d which is not an L-junta for L < floor(n/2)
        (unless P is constant on the attainable sums)
    """
    bound = eta(d, capacity).eta
    if k >= bound:
        raise PreconditionError(f"f_d is Boolean only for k < eta({d}) = {bound}, got k = {k}")
    domain = SliceDomain(n, k)
    capacity.check_exact(domain.size)
    if polynomial is None:
        polynomial = pd_polynomial(d) if k < lower_bound(d) else eta_polynomial(d, capacity)
    if polynomial.degree > d:
        raise PreconditionError(f"polynomial has degree {polynomial.degree} > {d}")

    half = n // 2
    f = SliceFunction.from_callable(
        domain, lambda p: polynomial(sum(1 for s in p.support if s <= half))
    )
    if not f.is_boolean:
        raise ClaimViolation(f"f_{d} on {domain} is not Boolean")
    if degree(f) > d:
        raise ClaimViolation(f"f_{d} on {domain} has degree {degree(f)} > {d}")
    if f.is_constant:
        logger.warning("f_%d is constant on %s: P is constant on the attainable sums", d, domain)
    elif minimal_junta(f).size < half:
        raise ClaimViolation(f"f_{d} on {domain} is a junta of size < {half}")
    return f


def degree_one_theorem_applies(n: int, k: int) -> bool:
    """Degree-1 Boolean functions are constants or (anti-)dictators when 2 <= k <= n-2."""
    return 2 <= k <= n - 2


def zeta_xi_definitions() -> Dict[str, str]:
    """Definitions of the two threshold quantities, reported but not computed."""
    return {
        'zeta': (
            "zeta(d): least value such that every Boolean degree-d function on C(n,k) "
            "is an O(1)-junta whenever zeta(d) <= k <= n - zeta(d)"
        ),
        'xi': (
            "xi(d): least value such that every Boolean degree-d function on C(n,k) "
            "is a gamma(d)-junta whenever xi(d) <= k <= n - xi(d)"
        ),
        'relations': "d < zeta(d) <= xi(d); zeta(d) >= eta(d) >= 2*ceil((d+1)/2)",
    }
