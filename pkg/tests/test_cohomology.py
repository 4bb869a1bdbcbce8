import pytest

from poissonhopf import catalog, cohomology
from poissonhopf.cohomology import ChainElement, MultiDerivation, coboundary, homology_boundary
from poissonhopf.errors import NotSupportedError, StructureError
from poissonhopf.poisson import PoissonAlgebra
from poissonhopf.polynomial import GeneratorSet
from poissonhopf.uea import UEA


def test_multiderivation(symplectic):
    ring = symplectic.ring
    x, y = ring.gens()
    Q = MultiDerivation(ring, 2, {(0, 1): x})
    assert Q((1, 0)) == -x
    assert Q((0, 0)) == 0
    assert Q.evaluate(x, y) == x
    assert Q.evaluate(y * y, x) == -2 * x * y
    assert Q.weight() == -1
    assert str(Q) == 'dx^dy: x'
    with pytest.raises(ValueError):
        MultiDerivation(ring, 2, {(1, 0): x})


def test_coboundary_of_functions_and_vector_fields(symplectic):
    A = symplectic.algebra
    ring = A.ring
    x, y = ring.gens()
    one = ring.one()
    # d(x)(dy) = {y, x} = -1
    assert coboundary(A, MultiDerivation.function(x)) == MultiDerivation(ring, 1, {(1,): -one})
    # d/dx is Hamiltonian, x d/dx does not preserve the bracket
    assert not coboundary(A, MultiDerivation(ring, 1, {(0,): one}))
    assert coboundary(A, MultiDerivation(ring, 1, {(0,): x})) == MultiDerivation(ring, 2, {(0, 1): one})


def test_square_of_coboundary_vanishes(gk3, rng):
    A = gk3.algebra
    for s in range(3):
        Q = cohomology.random_cochain(A.ring, s, rng)
        assert not coboundary(A, coboundary(A, Q))


def test_homology_boundary(symplectic):
    A = symplectic.algebra
    U = UEA(A)
    c = ChainElement.pure(U.one(), (0, 1))
    b = homology_boundary(A, c)
    assert b == ChainElement.pure(U.h(0), (1,)) - ChainElement.pure(U.h(1), (0,))
    assert not homology_boundary(A, b)
    assert ChainElement.pure(U.one(), (1, 0)) == -c
    assert c.degree() == [2]


def test_complex_report(gk3, rng):
    report = cohomology.complex_report(gk3.algebra, rng, 3)
    assert report.passed
    assert report.names() == ['coboundary-square', 'boundary-square']


def test_symplectic_plane(symplectic):
    table = cohomology.hp_table(symplectic.algebra, 2, 6)
    assert table == {0: [1, 0, 0, 0, 0, 0, 0], 1: [0] * 7, 2: [0] * 7}
    assert cohomology.format_hp_table(table)[0] == 'HP^0: 1 0 0 0 0 0 0'


def test_trivial_bracket():
    A = catalog.catalog_get('kx-trivial').algebra
    assert cohomology.hp_table(A, 1, 6) == {0: [1] * 7, 1: [1] * 7}


def test_threads_do_not_change_dimensions(gk3):
    A = gk3.algebra
    assert cohomology.hp_compute(A, 1, 3, threads=3) == cohomology.hp_compute(A, 1, 3)


def test_cohomology_report(symplectic):
    report = cohomology.cohomology_report(symplectic.algebra, 3)
    assert report.passed
    assert 'HP^0: 1 0 0 0' in report.notes
    assert report['hp-order-invariance'].passed


def test_out_of_scope(typea):
    with pytest.raises(NotSupportedError):
        cohomology.hp_compute(typea.algebra, 1, 2)
    ring = GeneratorSet(['x', 'y'])
    with pytest.raises(NotSupportedError):
        cohomology.hp_compute(PoissonAlgebra(ring, {('x', 'y'): ring.one()}), 0, 2)
    graded = GeneratorSet(['x', 'y'], grading=[1, 1])
    A = PoissonAlgebra(graded, {('x', 'y'): graded.gen('x') + 1})
    with pytest.raises(StructureError):
        cohomology.hp_compute(A, 0, 2)
    report = cohomology.cohomology_report(typea.algebra, 2)
    assert report.passed and report.notes[0].startswith('cohomology skipped')
