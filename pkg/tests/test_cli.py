import io
import json

import pytest

from poissonhopf import catalog
from poissonhopf.cli import run
from poissonhopf.parser import parse_algebra


def call(*argv):
    out = io.StringIO()
    rc = run(list(argv), out)
    return rc, out.getvalue()


def test_uea_normal_form():
    rc, out = call('uea', 'nf', 'typea.alg', '-e', 'h(x)*m(g)')
    assert rc == 0
    assert out == 'g*h(x) + g*x\n'
    rc, out = call('--json', 'uea', 'nf', 'typea.alg', '-e', 'h(x)*m(g)')
    assert json.loads(out) == {'nf': 'g*h(x) + g*x'}


def test_uea_hopf_maps():
    rc, out = call('uea', 'delta', 'typea.alg', '-e', 'h(x)')
    assert rc == 0
    assert '@' in out
    rc, out = call('uea', 'antipode', 'typea.alg', '-e', 'm(x)')
    assert out == '-g^-1*x\n'


def test_hb():
    rc, out = call('hb', 'cobracket', 'gk3.alg')
    assert rc == 0
    assert "d'(y3) = 2*(y1@y2 - y2@y1)" in out.splitlines()
    rc, out = call('hb', 'lie', 'typea.alg')
    assert out == '[y2,y1] = y2\n'
    rc, out = call('hb', 'pi', 'typea.alg', '-e', 'h(x)*m(g)')
    assert out == 'y2\n'
    assert call('hb', 'pi', 'typea.alg')[0] == 2
    assert call('hb', 'cobracket', 'typea.alg')[0] == 2


def test_check_all_passes():
    rc, out = call('check', 'all', 'gk3.alg', '--degree', '3')
    assert rc == 0
    assert 'CHECK jacobi: PASS' in out
    assert 'FAIL' not in out


def test_check_failure_exit_status():
    rc, out = call('check', 'poisson-hopf', 'group.alg')
    assert rc == 1
    assert any(line.startswith('CHECK poisson-hopf[') and 'FAIL residual=' in line
               for line in out.splitlines())


def test_json_matches_text():
    rc_text, text = call('check', 'hopf', 'group.alg')
    rc_json, raw = call('check', 'hopf', 'group.alg', '--json')
    assert rc_text == rc_json == 0
    data = json.loads(raw)
    assert [c['name'] for c in data['checks']] == [line.split(':')[0][len('CHECK '):]
                                                   for line in text.splitlines()]
    assert all(c['status'] == 'pass' and c['millis'] is None for c in data['checks'])


def test_timing():
    rc, out = call('check', 'poisson', 'symplectic.alg', '--timing')
    assert rc == 0
    assert out.rstrip().endswith(' ms)')
    rc, raw = call('check', 'poisson', 'symplectic.alg', '--timing', '--json')
    assert all(isinstance(c['millis'], int) for c in json.loads(raw)['checks'])


def test_threads_do_not_change_output():
    argv = ['check', 'all', 'typea.alg', '--degree', '2', '--seed', '7']
    assert call(*(argv + ['--threads', '1'])) == call(*(argv + ['--threads', '4']))


def test_cohomology():
    rc, out = call('cohomology', 'symplectic.alg', '--max-degree', '6')
    assert rc == 0
    assert out.splitlines() == ['degree: 0 1 2 3 4 5 6', 'HP^0: 1 0 0 0 0 0 0',
                                'HP^1: 0 0 0 0 0 0 0', 'HP^2: 0 0 0 0 0 0 0']
    rc, out = call('cohomology', 'kx-trivial.alg', '--s', '1', '--max-degree', '3', '--json')
    assert json.loads(out) == {'max_degree': 3, 'dims': {'HP^1': [1, 1, 1, 1]}}
    assert call('cohomology', 'typea.alg')[0] == 2


def test_smash():
    rc, out = call('smash', 'check', 'gr-typea.alg', '--degree', '1')
    assert rc == 0
    assert 'CHECK star-additive: PASS' in out
    assert call('smash', 'check', 'typea.alg')[0] == 2


def test_examples():
    rc, out = call('examples', 'list')
    assert rc == 0
    assert [line.split()[0] for line in out.splitlines()] == [n for n, _, _ in catalog.catalog_list()]
    rc, out = call('examples', 'dump', 'gk3', '--param', 'l1=2', '--param', 'l2=2')
    assert rc == 0
    assert out.startswith('# gk3(l1=2, l2=2, alpha=1)')
    assert parse_algebra(out) == catalog.catalog_get('gk3', l1='2', l2='2')
    rc, out = call('examples', 'dump', 'restricted', '--prime', '5')
    assert 'characteristic = 5' in out
    assert call('examples', 'dump', 'gk3', '--param', 'l1=2')[0] == 2
    assert call('examples', 'dump', 'nonexistent')[0] == 2
    assert call('examples', 'dump')[0] == 2


def test_prime_gate():
    assert call('check', 'poisson', 'restricted.alg')[0] == 2
    assert call('check', 'poisson', 'restricted.alg', '--prime', '3')[0] == 0
    assert call('check', 'poisson', 'restricted.alg', '--prime', '5')[0] == 2


@pytest.mark.parametrize('argv', [
    [],
    ['frobnicate'],
    ['check', 'everything', 'gk3.alg'],
    ['check', 'all', 'missing-file.alg'],
    ['uea', 'nf', 'typea.alg', '-e', 'h(x'],
    ['uea', 'nf', 'typea.alg'],
    ['examples', 'dump', 'gk3', '--param', 'l1'],
])
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_ore_command():
    rc, out = call('check', 'ore', 'gk3-ore.alg')
    assert rc == 0
    assert out.startswith('extension by x3: Delta(x3) = ')
    assert call('check', 'ore', 'gk3.alg')[0] == 2
