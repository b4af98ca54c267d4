"""
Shared fixtures for the slicejunta test suite.
"""

import numpy as np
import pytest

from slicejunta.core import SliceDomain, SliceFunction


@pytest.fixture
def c42():
    return SliceDomain(4, 2)


@pytest.fixture
def c52():
    return SliceDomain(5, 2)


@pytest.fixture
def c63():
    return SliceDomain(6, 3)


@pytest.fixture
def dictator42(c42):
    """x_1 on C(4,2)."""
    return SliceFunction.dictator(c42, 1)


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


def random_boolean_functions(domain, count, seed=0):
    """`count` seeded uniform Boolean functions on `domain`."""
    generator = np.random.default_rng(seed)
    tables = generator.integers(0, 2, size=(count, domain.size))
    return [SliceFunction(domain, table.tolist()) for table in tables]


def all_boolean_functions(domain):
    return [SliceFunction.from_code(domain, code) for code in range(1 << domain.size)]
