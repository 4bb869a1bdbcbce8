import pytest

from poissonhopf import catalog
from poissonhopf.errors import StructureError
from poissonhopf.hopf import (HopfData, apply_structure_map, check_hopf_axioms, check_ore_hopf,
                              check_poisson_hopf, check_poisson_hopf_random)
from poissonhopf.poisson import PoissonAlgebra
from poissonhopf.polynomial import GeneratorSet
from poissonhopf.tensor import tensor


def test_typea_is_poisson_hopf(typea, rng):
    B = typea.hopf
    assert check_hopf_axioms(B).passed
    assert B.verified
    assert check_poisson_hopf(B).passed
    assert check_poisson_hopf_random(B, rng, 4).passed
    assert B.group_likes() == [0]


def test_structure_maps_extend_multiplicatively(typea):
    B = typea.hopf
    ring = B.ring
    g, x = ring.gens()
    one = ring.one()
    dx = tensor(x, one) + tensor(g, x)
    assert apply_structure_map(B, 'delta', x * x) == dx * dx
    assert apply_structure_map(B, 'counit', x + 3) == 3
    assert apply_structure_map(B, 'antipode', x) == -g ** -1 * x
    assert apply_structure_map(B, 'S', g * x) == -g ** -2 * x
    with pytest.raises(ValueError):
        apply_structure_map(B, 'unit', x)


def test_antipode_is_derived(gk3):
    ring = gk3.ring
    assert gk3.hopf.antipode[ring.index('x3')] == -ring.gen('x3')
    assert gk3.hopf.is_connected()


def test_missing_delta_is_rejected(xy):
    with pytest.raises(StructureError):
        HopfData(PoissonAlgebra(xy), {'x': tensor(xy.gen('x'), xy.one())})


def test_counit_failure():
    ring = GeneratorSet(['x'])
    x, one = ring.gen(0), ring.one()
    B = HopfData(PoissonAlgebra(ring), {'x': tensor(x, one) + tensor(one, x) + tensor(one, one)},
                 antipode={'x': -x})
    report = check_hopf_axioms(B)
    assert not report.passed
    assert not report['counit[x,left]'].passed
    assert report['coassociativity'].passed


def test_group_bracket_fails_poisson_hopf():
    af = catalog.catalog_get('group')
    assert check_hopf_axioms(af.hopf).passed
    assert not check_poisson_hopf(af.hopf).passed
    fixed = catalog.catalog_get('group-corrected')
    assert check_poisson_hopf(fixed.hopf).passed


def test_ore_extension_of_laurent_ring():
    af = catalog.catalog_get('typea-ore')
    report, ext = check_ore_hopf(af.hopf, af.ore_hopf_data())
    assert report.passed
    ring = ext.ring
    assert ring.names == ('g', 'x')
    g, x = ring.gens()
    assert ext.delta[1] == tensor(g, x) + tensor(x, ring.one())
    assert ext.antipode[1] == -g ** -1 * x
    assert ext.algebra(x, g) == g * x


def test_ore_extension_with_cocycle():
    af = catalog.catalog_get('gk3-ore')
    report, ext = check_ore_hopf(af.hopf, af.ore_hopf_data())
    assert report.passed
    gk3 = catalog.catalog_get('gk3')
    assert ext.algebra == gk3.algebra
    assert ext.delta == gk3.hopf.delta
