"""
slicejunta - Boolean functions on the slice and the hypercube

Exact tools for functions on C(n,k) = {x in {0,1}^n : |x| = k}:
- Harmonic multilinear representation, degree and level decomposition
- Influences, minimal juntas and the noise operator
- Passing between juntas on the slice and functions on a small hypercube
- Extremal quantities eta(d) and gamma(d)
- Exhaustive census harness over all Boolean functions of small slices

Example:
    from slicejunta import SliceDomain, SliceFunction, degree, minimal_junta

    f = SliceFunction.dictator(SliceDomain(4, 2), 1)

    print(degree(f))               # 1
    print(minimal_junta(f).size)   # 1
"""

__version__ = "1.0.0"

from .analysis import influence, influence_profile, minimal_junta, noise, total_influence
from .config import Capacity, CensusReport, RunConfig
from .core import (
    MultilinearPolynomial,
    SliceDomain,
    SliceFunction,
    SlicePoint,
    decompose,
    degree,
    harmonic_representation,
)
from .exceptions import (
    CapacityError,
    ClaimViolation,
    DomainMismatchError,
    FormatError,
    PreconditionError,
    SingularSystemError,
    SliceJuntaError,
)
from .extremal import eta, fd_construction, gamma_bounds, pd_polynomial
from .transfer import CubeFunction, cube_to_slice, explicit_cube_polynomial, slice_to_cube
from .verify import census, dichotomy_scan, eq1_constant_probe, hyper_scan

__all__ = [
    'influence',
    'influence_profile',
    'minimal_junta',
    'noise',
    'total_influence',
    'Capacity',
    'CensusReport',
    'RunConfig',
    'MultilinearPolynomial',
    'SliceDomain',
    'SliceFunction',
    'SlicePoint',
    'decompose',
    'degree',
    'harmonic_representation',
    'CapacityError',
    'ClaimViolation',
    'DomainMismatchError',
    'FormatError',
    'PreconditionError',
    'SingularSystemError',
    'SliceJuntaError',
    'eta',
    'fd_construction',
    'gamma_bounds',
    'pd_polynomial',
    'CubeFunction',
    'cube_to_slice',
    'explicit_cube_polynomial',
    'slice_to_cube',
    'census',
    'dichotomy_scan',
    'eq1_constant_probe',
    'hyper_scan',
]
