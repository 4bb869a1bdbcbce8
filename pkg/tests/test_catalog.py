from fractions import Fraction

import pytest

from poissonhopf import catalog, config
from poissonhopf.errors import BindingError, ParseError
from poissonhopf.parser import read_algebra

NAMES = ['ps-abelian', 'ps-nonabelian', 'gk3', 'gk3-ore', 'gk4', 'typea', 'typea-ore', 'xyzg',
         'group', 'group-corrected', 'poissonu', 'osl2', 'restricted', 'symplectic', 'kx-trivial',
         'gr-typea']


def test_list():
    entries = catalog.catalog_list()
    assert [name for name, _, _ in entries] == NAMES
    params = dict((name, dict(p)) for name, _, p in entries)
    assert params['gk3'] == {'l1': '1', 'l2': '1', 'alpha': '1'}
    assert params['symplectic'] == {}


def test_shipped_files_match_the_templates():
    for name in NAMES:
        assert read_algebra(catalog.catalog_file(name)) == catalog.catalog_get(name), name


def test_bindings():
    assert catalog.bindings('gk3') == {'l1': 1, 'l2': 1, 'alpha': 1}
    b = catalog.bindings('gk3', l1='1/2', l2='3', alpha='0')
    assert b['l1'] == Fraction(1, 2)
    with pytest.raises(BindingError):
        catalog.bindings('gk3', l1='1', l2='2', alpha='1')
    with pytest.raises(BindingError):
        catalog.bindings('gk3', beta='1')
    with pytest.raises(BindingError):
        catalog.bindings('gk3', l1='one')
    with pytest.raises(BindingError):
        catalog.bindings('gk4', t1='0')
    with pytest.raises(BindingError):
        catalog.bindings('restricted', p='4')
    with pytest.raises(BindingError):
        catalog.bindings('restricted', p='2')
    with pytest.raises(BindingError):
        catalog.catalog_get('nonexistent')


def test_render():
    text = catalog.render('gk3', l1='1/2', l2='1/2')
    assert text.startswith('# gk3(l1=1/2, l2=1/2, alpha=1): ')
    assert '{x3,x1} = (1/2)*x1 + (1)*x2' in text


def test_parameters_reach_the_algebra():
    af = catalog.catalog_get('typea', lam='2')
    g, x = af.ring.gens()
    assert af.algebra(x, g) == 2 * g * x
    af = catalog.catalog_get('restricted', p='5')
    assert af.ring.characteristic == 5
    x = af.ring.gen('x')
    assert x ** 5 == 0 and x ** 4 != 0


def test_expected_verdicts():
    assert catalog.catalog_get('group').expected['poisson-hopf'] is False
    assert catalog.catalog_get('gk3-ore').expected['ore'] is True
    assert catalog.catalog_get('gr-typea').expected['biproduct'] is True
    assert catalog.catalog_get('symplectic').expected == {'poisson': True}


def test_load_falls_back_to_the_data_directory():
    af = catalog.load('no/such/dir/typea.alg')
    assert af.name == 'typea'
    assert af.expected['poisson-hopf'] is True
    with pytest.raises(ParseError):
        catalog.load('no/such/file.alg')
    assert catalog.catalog_file('gk3').startswith(config.datadir)
