import pytest

from poissonhopf import catalog, checks, config
from poissonhopf.report import CheckResult

SMALL = {'identities': 3, 'relations': 3, 'confluence': 3, 'cochains': 2, 'chains': 2,
         'module-algebra': 1}


@pytest.mark.parametrize('name', ['gk3', 'typea', 'group', 'restricted', 'symplectic', 'gr-typea'])
def test_catalog_verdicts(name):
    af = catalog.catalog_get(name)
    report = checks.run_all(af, degree=2, seed=1, samples=SMALL)
    assert checks.compare_expected(af, report) == {}
    verdicts = checks.group_verdicts(report)
    for group, want in af.expected.items():
        assert verdicts[group] is want


def test_plan(gk3, typea, symplectic):
    assert [name for name, _ in checks.plan(gk3)] == ['poisson', 'hopf', 'uea', 'quotient', 'cohomology']
    assert [name for name, _ in checks.plan(symplectic)] == ['poisson', 'uea', 'cohomology']
    restricted = catalog.catalog_get('restricted')
    assert [name for name, _ in checks.plan(restricted)] == ['poisson', 'hopf', 'cohomology']
    gr = catalog.catalog_get('gr-typea')
    assert [name for name, _ in checks.plan(gr)][-1] == 'biproduct'


def test_failing_structure_skips_the_rest():
    af = catalog.catalog_get('group')
    report = checks.run_all(af, degree=2, samples=SMALL)
    assert not report.passed
    assert 'B fails its structure checks; remaining groups skipped' in report.notes
    assert not any(name.startswith('uea-') for name in report.names())


def test_threads_do_not_change_the_report(typea):
    one = checks.run_all(typea, degree=2, seed=3, threads=1, samples=SMALL)
    many = checks.run_all(typea, degree=2, seed=3, threads=4, samples=SMALL)
    assert one.lines() == many.lines()
    assert one.notes == many.notes


def test_poisson_group(gk3, rng):
    report = checks.poisson_checks(gk3, rng, SMALL)
    assert report['jacobi'].passed
    assert report['jacobi-random'].passed


def test_ore_group_notes_the_extension():
    af = catalog.catalog_get('typea-ore')
    report = checks.ore_checks(af, None)
    assert report.passed
    assert report.notes == ['extension by x: Delta(x) = g@x + x@1']


def test_quotient_group_for_connected_algebras(gk3, rng):
    report = checks.quotient_checks(gk3, rng, 2, SMALL)
    assert report.passed
    assert "d'(y3) = 2*(y1@y2 - y2@y1)" in report.notes


@pytest.mark.parametrize('name', [name for name, _, _ in catalog.catalog_list()])
def test_check_all_degree3(name):
    af = catalog.catalog_get(name)
    report = checks.run_all(af, degree=3, seed=0, samples=SMALL)
    assert checks.compare_expected(af, report) == {}


@pytest.mark.parametrize('name', ['typea', 'gk3'])
def test_check_all_default_samples(name):
    af = catalog.catalog_get(name)
    report = checks.run_all(af, degree=3)
    assert report.passed
    verdicts = checks.group_verdicts(report)
    for group in ('poisson', 'hopf', 'poisson-hopf', 'uea', 'quotient', 'cohomology'):
        assert verdicts[group] is True
    assert sum(1 for n in report.names() if n.startswith('confluence')) == 1


def test_unexpected_groups_must_pass(typea):
    report = checks.run_all(typea, degree=2, samples=SMALL)
    report.add(CheckResult('uea-antipode[h(x),left]', False, '-g^-1*x'))
    assert checks.compare_expected(typea, report) == {'uea': (True, False)}
    assert 'uea' not in typea.expected


def test_sample_sizes():
    assert config.SAMPLES['relations'] == 200
    assert config.SAMPLES['confluence'] == 200
    assert config.SAMPLES['cochains'] == 50
    assert config.SAMPLES['chains'] == 50
