"""
Slice domains, functions, polynomials and the exact harmonic machinery.
"""

from .domain import (
    SliceDomain,
    SlicePoint,
    colex_supports,
    coordinate_pairs,
    point_matrix,
    slice_rank,
    slice_unrank,
    transposition_permutation,
    transposition_permutations,
    transposition_table,
)
from .functions import (
    SliceFunction,
    apply_transposition,
    inner_product,
    norm2_squared,
    p_norm,
    random_boolean,
    restrict,
)
from .harmonic import (
    HarmonicDecomposition,
    decompose,
    harmonic_representation,
    minimum_agreeing_degree,
    solve_harmonic,
)
from .polynomial import MultilinearPolynomial, UnivariatePolynomial, forward_differences
from .projectors import LevelProjectors, degree, level_eigenvalue, level_projectors

__all__ = [
    'SliceDomain',
    'SlicePoint',
    'colex_supports',
    'coordinate_pairs',
    'point_matrix',
    'slice_rank',
    'slice_unrank',
    'transposition_permutation',
    'transposition_permutations',
    'transposition_table',
    'SliceFunction',
    'apply_transposition',
    'inner_product',
    'norm2_squared',
    'p_norm',
    'random_boolean',
    'restrict',
    'HarmonicDecomposition',
    'decompose',
    'harmonic_representation',
    'minimum_agreeing_degree',
    'solve_harmonic',
    'MultilinearPolynomial',
    'UnivariatePolynomial',
    'forward_differences',
    'LevelProjectors',
    'degree',
    'level_eigenvalue',
    'level_projectors',
]
