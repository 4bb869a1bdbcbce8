import pytest

from poissonhopf import catalog, quotient
from poissonhopf.errors import NotSupportedError
from poissonhopf.liealgebra import HAlgebra, LieAlgebraA, lie_on_a
from poissonhopf.parser import parse_word
from poissonhopf.tensor import tensor
from poissonhopf.uea import UEA


@pytest.fixture
def q_typea(typea):
    return quotient.QuotientComodule(UEA(typea.hopf))


@pytest.fixture
def q_gk3(gk3):
    return quotient.QuotientComodule(UEA(gk3.hopf))


def test_lie_algebra_of_typea(typea):
    lie = lie_on_a(typea.hopf)
    assert lie.names == ['y1', 'y2']
    assert lie.labels == ['g', 'x']
    assert lie.table() == ['[y2,y1] = y2']


def test_lie_algebra_of_gk3(gk3):
    lie = lie_on_a(gk3.hopf)
    assert lie.table() == ['[y3,y1] = y1 + y2', '[y3,y2] = y2']
    assert not lie.jacobi_residuals()


def test_enveloping_algebra():
    H = HAlgebra(LieAlgebraA(['a', 'b'], {(1, 0): {1: 1}}))
    a, b = H.y(0), H.y(1)
    assert b * a == a * b + b
    assert H.commutator(b, a) == b
    assert H.delta(a * b) == H.delta(a) * H.delta(b)
    assert H.antipode(a * b) == b * a
    assert H.counit(a * b + 3) == 3
    assert H.to_vector(2 * a - b) == {0: 2, 1: -1}


def test_pi_and_theta(q_typea):
    U, H = q_typea.U, q_typea.H
    g, x = q_typea.ring.gens()
    assert q_typea.pi(parse_word(U, 'h(x)*m(g)')) == H.y(1)
    assert q_typea.pi(U.m(g)) == 1
    assert q_typea.theta(g * x) == H.y(1)
    assert q_typea.theta(g) == H.y(0)


def test_coaction(q_typea):
    U, H = q_typea.U, q_typea.H
    hx = U.h(1)
    g = U.m(q_typea.ring.gen(0))
    assert q_typea.comodule_lambda(hx) == tensor(hx, H.one()) + tensor(g, H.y(1))
    assert q_typea.comodule_lambda(g) == tensor(g, H.one())


def test_upsilon_preimages(q_typea):
    H = q_typea.H
    one = q_typea.ring.one()
    for I in [(1, 0), (0, 1), (1, 1), (0, 2)]:
        assert q_typea.upsilon(q_typea.upsilon_preimage(I)) == tensor(one, H.monomial(I))


def test_galois_preimages(q_gk3):
    U, H = q_gk3.U, q_gk3.H
    for I in [(0, 0, 1), (1, 1, 0)]:
        assert q_gk3.beta(q_gk3.galois_preimage(I)) == tensor(U.one(), H.monomial(I))


def test_reports_typea(q_typea, rng):
    assert quotient.lie_report(q_typea).passed
    assert quotient.partition_report(q_typea, 3).passed
    assert quotient.comodule_report(q_typea, 2).passed
    assert quotient.primitive_report(q_typea, rng, 4).passed
    assert quotient.normal_basis_report(q_typea, 2).passed
    assert quotient.galois_report(q_typea, 1, rng, 3).passed


def test_reports_gk3(q_gk3, rng):
    assert quotient.partition_report(q_gk3, 3).passed
    assert quotient.comodule_report(q_gk3, 2).passed
    assert quotient.normal_basis_report(q_gk3, 2).passed
    report = quotient.cobracket_report(q_gk3)
    assert report.passed
    assert "d'(y3) = 2*(y1@y2 - y2@y1)" in report.notes


def test_cobracket(gk3, typea):
    assert quotient.cobracket(gk3.hopf).lines() == [
        "d'(y1) = 0", "d'(y2) = 0", "d'(y3) = 2*(y1@y2 - y2@y1)"]
    with pytest.raises(NotSupportedError):
        quotient.cobracket(typea.hopf)


def test_set_partitions():
    parts = list(quotient.set_partitions([1, 2, 3]))
    assert len(parts) == 5
    assert [[1], [2], [3]] in parts
    assert [[1, 2, 3]] in parts
    assert [[1, 3], [2]] in parts
    # Bell numbers; blocks keep the order of the list
    assert len(list(quotient.set_partitions([4, 0, 2, 7]))) == 15
    assert all(block == sorted(block, key=[4, 0, 2, 7].index)
               for part in quotient.set_partitions([4, 0, 2, 7]) for block in part)
    assert list(quotient.set_partitions([])) == [[]]


def test_restricted_is_out_of_scope():
    af = catalog.catalog_get('restricted')
    with pytest.raises(NotSupportedError):
        lie_on_a(af.hopf)
