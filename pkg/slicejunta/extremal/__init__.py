"""
Extremal quantities: eta(d), the P_d family, f_d and gamma(d).
"""

from .constructions import (
    degree_one_theorem_applies,
    eta_bounds_check,
    eta_polynomial,
    fd_construction,
    pd_polynomial,
    zeta_xi_definitions,
)
from .eta import EtaSearchResult, eta, eta_bruteforce, is_realizable, lower_bound, upper_bound
from .gamma import gamma_bounds, gamma_bruteforce, nisan_szegedy_bound

__all__ = [
    'degree_one_theorem_applies',
    'eta_bounds_check',
    'eta_polynomial',
    'fd_construction',
    'pd_polynomial',
    'zeta_xi_definitions',
    'EtaSearchResult',
    'eta',
    'eta_bruteforce',
    'is_realizable',
    'lower_bound',
    'upper_bound',
    'gamma_bounds',
    'gamma_bruteforce',
    'nisan_szegedy_bound',
]
