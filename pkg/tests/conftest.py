import random

import pytest

from poissonhopf import catalog
from poissonhopf.polynomial import GeneratorSet


@pytest.fixture
def rng():
    return random.Random(0)


@pytest.fixture
def typea():
    return catalog.catalog_get('typea')


@pytest.fixture
def gk3():
    return catalog.catalog_get('gk3')


@pytest.fixture
def symplectic():
    return catalog.catalog_get('symplectic')


@pytest.fixture
def xy():
    return GeneratorSet(['x', 'y'])


@pytest.fixture
def laurent():
    return GeneratorSet(['g', 'x'], invertible=[True, False])
