"""
Hypercube functions and the slice <-> cube conversions for juntas.
"""

from .conversions import (
    cube_to_slice,
    explicit_cube_polynomial,
    head_collapses,
    minsky_papert_collapse,
    slice_to_cube,
    symmetrize_trailing,
)
from .cube import (
    CubeFunction,
    cube_degree,
    cube_expand,
    cube_from_polynomial,
    cube_relevant,
    inverse_mobius_transform,
    mobius_transform,
)

__all__ = [
    'cube_to_slice',
    'explicit_cube_polynomial',
    'head_collapses',
    'minsky_papert_collapse',
    'slice_to_cube',
    'symmetrize_trailing',
    'CubeFunction',
    'cube_degree',
    'cube_expand',
    'cube_from_polynomial',
    'cube_relevant',
    'inverse_mobius_transform',
    'mobius_transform',
]
