import pytest

from poissonhopf import catalog, uea
from poissonhopf.errors import NotSupportedError, StructureError
from poissonhopf.parser import parse_word
from poissonhopf.poisson import PoissonAlgebra
from poissonhopf.polynomial import GeneratorSet
from poissonhopf.tensor import tensor


@pytest.fixture
def U(typea):
    return uea.UEA(typea.hopf)


def test_normal_form(U):
    g, x = U.ring.gens()
    assert str(parse_word(U, 'h(x)*m(g)')) == 'g*h(x) + g*x'
    # h is a derivation of B into B^e
    assert U.h_of(x * x) == U.m(x) * U.h(1) * 2
    assert U.h_of(g ** -1) == -U.m(g ** -2) * U.h(0)


def test_strategies_agree(U, rng):
    for _ in range(5):
        word = U.random_word(rng, 4)
        expected = U.normal_form(word, 'right')
        assert U.normal_form(word, 'left') == expected
        assert U.rewrite(word, 'leftmost') == expected
        assert U.rewrite(word, 'rightmost') == expected
    with pytest.raises(ValueError):
        U.rewrite(U.word(('m', U.ring.gen(0))), 'right')
    with pytest.raises(ValueError):
        U.normal_form(U.word(('m', U.ring.gen(0))), 'middle')


def test_hopf_structure(U):
    g, x = U.ring.gens()
    hx = U.h(1)
    one = U.one()
    # Delta(h(x)) = h(x)@m(1) + m(g)@h(x) + h(g)@m(x)
    assert U.delta(hx) == tensor(hx, one) + tensor(U.m(g), hx) + tensor(U.h(0), U.m(x))
    assert U.counit(hx) == 0
    assert U.counit(U.m(g)) == 1
    assert U.delta(hx).map_legs([U.antipode, lambda u: u], (U, U)).contract() == 0
    assert U.antipode(U.m(x)) == U.m(-g ** -1 * x)


def test_regular_action(U):
    g, x = U.ring.gens()
    assert U.regular_action(U.h(1), g) == g * x
    assert U.regular_action(U.m(x) * U.h(1), g) == g * x * x


def test_reports(U, rng):
    assert uea.relations_report(U, rng, 5).passed
    assert uea.confluence_report(U, rng, 5).passed
    assert uea.pbw_report(U, 2).passed
    assert uea.decomposition_report(U, rng, 5).passed
    assert uea.hopf_report(U, 2, rng, 3).passed


def test_graded_slab_count(gk3):
    U = uea.UEA(gk3.hopf)
    # weighted degree 2 splits as 0 + 2, 1 + 1 and 2 + 0 between B and the h-part
    keys = U.pbw_slab(2)
    assert len(keys) == 4 + 2 * 2 + 4
    assert uea.pbw_report(U, 3).passed


def test_relations_are_not_supported():
    ring = GeneratorSet(['x'], relations=[((2,), {})])
    with pytest.raises(NotSupportedError):
        uea.UEA(PoissonAlgebra(ring))
    with pytest.raises(NotSupportedError):
        uea.UEA(PoissonAlgebra(GeneratorSet(['x'], characteristic=3)))


def test_without_coalgebra(symplectic):
    U = uea.UEA(symplectic.algebra)
    assert str(parse_word(U, 'h(y)*m(x)')) == 'x*h(y) - 1'
    with pytest.raises(StructureError):
        U.delta(U.h(0))


def test_letter_rewriting(U):
    g, x = U.ring.gens()
    word = U.word(('h', x), ('m', g))
    letters = U.letter_terms(word)
    assert letters == {(('h', 1), ('x', (1, 0))): 1}
    w = list(letters)[0]
    assert list(U.redexes(w)) == [0]
    # h_x g -> g h_x + {x,g}
    assert U.rewrite_at(w, 0) == {(('x', (1, 0)), ('h', 1)): 1, (('x', (1, 1)),): 1}
    assert str(U.rewrite(word, 'leftmost')) == 'g*h(x) + g*x'
    # h(x) h(g) has its h-letters out of order; m(g) m(g^-1) merges to 1
    hh = U.word(('h', x), ('h', g))
    assert list(U.redexes(list(U.letter_terms(hh))[0])) == [0]
    assert U.rewrite(hh, 'rightmost') == U.h(1) * U.h(0)
    assert U.rewrite(U.word(('m', g), ('m', g ** -1))) == U.one()


def test_antipode_of_h(U):
    g, x = U.ring.gens()
    hg, hx = U.h(0), U.h(1)
    # S(h(x)) = -g^-1 h(x) + g^-2 x h(g) - g^-1 x for {x,g} = g x
    assert U.antipode(hx) == -U.m(g ** -1) * hx + U.m(g ** -2 * x) * hg - U.m(g ** -1 * x)
    assert U.antipode(hg) == -U.m(g ** -2) * hg
    # h(S x) misses the last term
    assert U.antipode(hx) - U.h_of(U.hopf.antipode_of(x)) == -U.m(g ** -1 * x)
    for u in (hx, hg, hx * hg, U.m(x) * hx):
        e = U.scalar(U.counit(u))
        d = U.delta(u)
        assert d.map_legs([U.antipode, lambda v: v], (U, U)).contract() == e
        assert d.map_legs([lambda v: v, U.antipode], (U, U)).contract() == e


def test_normality(U, gk3, rng):
    g, x = U.ring.gens()
    assert U.adjoint_left(U.h(1), U.m(g)) == U.m(g * x)
    assert U.adjoint_left(U.h(0), U.m(x)) == U.m(-x)
    assert uea.normality_report(U, rng, 3).passed
    V = uea.UEA(gk3.hopf)
    x1, x2, x3 = V.ring.gens()
    # only x3@1 in Delta(x3) brackets nontrivially with x1
    assert V.adjoint_left(V.h(2), V.m(x1)) == V.m(x1 + x2)
    report = uea.normality_report(V, rng, 3)
    assert report.passed
    assert 'adjoint-normal' in report.names()


def test_pbw_rank(U):
    # degree 1: g, g^-1, x, h(g), h(x); degree 0: 1
    assert uea.pbw_count(U, 0) == 1
    assert uea.pbw_count(U, 1) == 5
    report = uea.pbw_report(U, 3)
    assert report.passed
    assert report['pbw-count'].passed


def test_pbw_rank_with_degree_raising_brackets():
    # {E,F} = K - K^-1 puts K^-2 h(K) in h(E) h(F)
    U = uea.UEA(catalog.catalog_get('poissonu').hopf)
    assert uea.pbw_report(U, 2).passed
