import inspect

import pytest

from poissonhopf.errors import StructureError
from poissonhopf.poisson import (OreData, PoissonAlgebra, PoissonModule, check_jacobi,
                                 check_ore_data, check_poisson_module, make_ore_extension,
                                 random_triple_jacobi)
from poissonhopf.polynomial import GeneratorSet


@pytest.fixture
def plane(xy):
    return PoissonAlgebra(xy, {('x', 'y'): xy.one()})


def test_bracket_is_a_biderivation(plane):
    x, y = plane.ring.gens()
    assert plane(x, y) == 1
    assert plane(y, x) == -1
    assert plane(x ** 2, y) == 2 * x
    assert plane(x * y, x) == -x
    assert plane(x, x) == 0


def test_table_normalization(xy):
    A = PoissonAlgebra(xy, {('y', 'x'): xy.gen('x')})
    assert A.gen_bracket(0, 1) == -xy.gen('x')
    with pytest.raises(StructureError):
        PoissonAlgebra(xy, {('x', 'x'): xy.one()})
    with pytest.raises(StructureError):
        PoissonAlgebra(xy, {('x', 'y'): xy.one(), ('y', 'x'): xy.one()})


def test_jacobi_passes_and_verifies(plane, rng):
    report = check_jacobi(plane)
    assert report.passed
    assert plane.verified
    assert random_triple_jacobi(plane, rng, 5).passed


def test_random_jacobi_uses_cubic_elements(gk3, rng):
    assert inspect.signature(random_triple_jacobi).parameters['degree'].default == 3
    report = random_triple_jacobi(gk3.algebra, rng, 4)
    assert report.passed
    assert report.names() == ['jacobi-random']


def test_jacobi_failure_is_reported():
    ring = GeneratorSet(['x', 'y', 'z'])
    x, y, z = ring.gens()
    # {x,y} = z, {y,z} = x, {z,x} = x fails Jacobi
    A = PoissonAlgebra(ring, {('x', 'y'): z, ('y', 'z'): x, ('z', 'x'): x})
    report = check_jacobi(A)
    assert not report.passed
    assert not A.verified
    assert all(r.name.startswith('jacobi[') for r in report.failures())


def test_bracket_degree(gk3, symplectic):
    # {x3,x1} = x1 + x2 has weight 1 = 2 + 1 - 2
    assert gk3.algebra.bracket_degree() == -2
    assert symplectic.algebra.bracket_degree() == -2


def test_relations_need_a_poisson_ideal():
    # x^2 = 0 is a Poisson ideal for {x,y} = x but not for {x,y} = 1
    ring = GeneratorSet(['x', 'y'], relations=[((2, 0), {})])
    A = PoissonAlgebra(ring, {('x', 'y'): ring.gen('x')})
    assert check_jacobi(A).passed
    B = PoissonAlgebra(ring, {('x', 'y'): ring.one()})
    report = check_jacobi(B)
    assert not report.passed
    assert report.failures()[0].name.startswith('poisson-ideal')


def test_regular_module(plane):
    M = PoissonModule.regular(plane)
    assert check_poisson_module(plane, M).passed


def test_module_failure(plane):
    ring = plane.ring
    x = ring.gen('x')
    M = PoissonModule(plane, [[[x]], [[ring.zero()]]])
    report = check_poisson_module(plane, M)
    r = report['module[x,y,e]']
    assert not r.passed
    assert r.residual == '-e'


def test_ore_data(plane):
    ring = plane.ring
    x = ring.gen('x')
    bad = OreData(plane, alpha={'x': x ** 2})
    report = check_ore_data(bad)
    assert report['ore-alpha[x,y]'].residual == '-2*x'
    with pytest.raises(StructureError):
        make_ore_extension(bad, 'z')


def test_ore_extension(xy):
    A = PoissonAlgebra(xy)
    x, y = xy.gens()
    E = make_ore_extension(OreData(A, alpha={'x': x}), 'z')
    assert E.verified
    z, X = E.ring.gen('z'), E.ring.gen('x')
    assert E(z, X) == X * z
    F = make_ore_extension(OreData(A, delta={'y': x}), 'z')
    assert F(F.ring.gen('z'), F.ring.gen('y')) == F.ring.gen('x')
    assert F(F.ring.gen('z'), F.ring.gen('x')) == 0
