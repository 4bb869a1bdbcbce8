import pytest

from poissonhopf import catalog, smash
from poissonhopf.errors import StructureError


@pytest.fixture
def biproduct():
    return smash.BiproductInput.from_file(catalog.catalog_get('gr-typea'))


def test_kg_envelope():
    K, report = smash.kg_env(1, 2)
    assert report.passed
    assert K.names == ['g1']
    K2, report = smash.kg_env(['a', 'b'], 1)
    assert report.passed
    assert K2.beta_kge((2, -1)) == {((1, 0), (1, -1)): 2, ((0, 1), (2, -2)): -1}
    with pytest.raises(StructureError):
        smash.KGEnvelope(0)


def test_split_of_the_file(biproduct):
    assert biproduct.ring.names == ('y',)
    assert biproduct.group == ['g']
    assert biproduct.cring.names == ('y', 'g')
    y = biproduct.ring.gen(0)
    assert biproduct.star(0, y) == -y
    assert biproduct.star_exp((2,), y * y) == -4 * y * y


def test_star_identities(biproduct):
    report = smash.check_star(biproduct)
    assert report.passed
    assert 'biproduct-bracket' in report.names()


def test_module_algebra(biproduct, rng):
    assert smash.check_module_algebra(biproduct, rng, 2).passed


def test_generation(biproduct):
    report = smash.check_generation(biproduct, 1)
    assert report.passed
    assert report.notes


def test_smash_product_moves_group_past_r(biproduct):
    S = biproduct.smash
    Re, K = biproduct.Re, biproduct.K
    g = S.k(K.g((1,)))
    hy = S.r(Re.h(0))
    # g . h(y) = h(y) + m(g*y)
    y = biproduct.ring.gen(0)
    assert g * hy == S.pair(Re.h(0) - Re.m(y), K.g((1,)))


def test_bad_input():
    af = catalog.catalog_get('typea')
    with pytest.raises(StructureError):
        smash.BiproductInput.from_file(af)
