import random
from fractions import Fraction

import pytest

from poissonhopf.errors import DomainError, RingMismatchError, StructureError
from poissonhopf import liealgebra, quotient, smash, uea
from poissonhopf.polynomial import GeneratorSet, compositions, random_poly
from poissonhopf.tensor import TensorElement, tensor


def test_arithmetic(xy):
    x, y = xy.gens()
    f = (x + y) ** 2
    assert f == x * x + 2 * x * y + y * y
    assert f - f == 0
    assert not (f - f)
    assert (x + 1) * (x - 1) == x ** 2 - 1
    assert Fraction(1, 2) * x + Fraction(1, 2) * x == x


def test_printing(xy, laurent):
    x, y = xy.gens()
    assert str(x - 2 * y) == 'x - 2*y'
    assert str(xy.zero()) == '0'
    g, z = laurent.gens()
    assert str(-g ** -1 * z) == '-g^-1*x'


def test_derivative_and_degree(xy):
    x, y = xy.gens()
    f = x ** 3 * y + 5 * y
    assert f.derivative(0) == 3 * x ** 2 * y
    assert f.derivative(1) == x ** 3 + 5
    assert f.degree() == 4
    assert f.homogeneous_degree() is None
    assert (x * y).homogeneous_degree() == 2


def test_laurent_inverse(laurent):
    g, x = laurent.gens()
    assert g * g ** -1 == 1
    assert g.inverse() == g ** -1
    assert (3 * g).inverse() == Fraction(1, 3) * g ** -1
    with pytest.raises(DomainError):
        x ** -1
    with pytest.raises(DomainError):
        (g + 1).inverse()


def test_ring_mismatch(xy, laurent):
    with pytest.raises(RingMismatchError):
        xy.gen('x') + laurent.gen('x')
    with pytest.raises(RingMismatchError):
        xy.gen('z')


def test_generator_set_validation():
    with pytest.raises(StructureError):
        GeneratorSet(['x', 'x'])
    with pytest.raises(StructureError):
        GeneratorSet(['x', 'y'], grading=[1, 0])


def test_relations_reduce():
    # x^2 = y in k[x, y]
    ring = GeneratorSet(['x', 'y'], relations=[((2, 0), {(0, 1): 1})])
    x, y = ring.gens()
    assert x ** 2 == y
    assert x ** 3 == x * y


def test_characteristic():
    ring = GeneratorSet(['x'], characteristic=3)
    x = ring.gen(0)
    assert 3 * x == 0
    assert (x + 1) ** 3 == x ** 3 + 1


def test_random_poly_is_seeded(xy):
    assert random_poly(xy, random.Random(5)) == random_poly(xy, random.Random(5))


def test_tensor(xy):
    x, y = xy.gens()
    t = tensor(x, xy.one()) + tensor(xy.one(), x)
    assert isinstance(t, TensorElement)
    assert t.nlegs == 2
    assert str(t) == 'x@1 + 1@x'
    assert t.flip() == t
    assert (tensor(x, y) * tensor(y, x)) == tensor(x * y, x * y)
    assert tensor(x, y).contract() == x * y


def test_compositions():
    assert compositions(2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert compositions(0, 0) == [()]
    assert compositions(0, 1) == []
    assert len(compositions(3, 2)) == 6
    # one shared helper for the PBW and U(a) enumerations
    for module in (liealgebra, quotient, smash, uea):
        assert not hasattr(module, '_compositions')
    assert uea.compositions is compositions
