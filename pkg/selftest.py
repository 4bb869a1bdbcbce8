#!/usr/bin/env python
"""
Lightweight automated self-test for poissonhopf.

Runs a sequence of fast sanity checks:
 1. Import the package and list the shipped catalog.
 2. Parse every shipped .alg file.
 3. Jacobi and Poisson Hopf checks on a pointed and a connected example.
 4. PBW normal forms in B^e and the cobracket of H(B).
 5. Poisson cohomology of the symplectic plane.
 6. The command line front end on a catalog file.

Exits with code 0 on success, >0 on first failure. Prints a JSON summary to stdout.
"""
import io
import json
import sys
import traceback

RESULT = {'steps': [], 'ok': True}


def record(name, ok, details=""):
    RESULT['steps'].append({'name': name, 'ok': bool(ok), 'details': details})
    if not ok:
        RESULT['ok'] = False


def step(func):
    def wrapper():
        try:
            func()
        except Exception as e:
            tb = traceback.format_exc()
            record(func.__name__, False, str(e) + "\n" + tb)
            raise
    return wrapper


@step
def import_modules():
    global poissonhopf, catalog, checks, cohomology, quotient, UEA, parse_word
    import poissonhopf
    from poissonhopf import catalog, checks, cohomology, quotient
    from poissonhopf.uea import UEA
    from poissonhopf.parser import parse_word
    globals().update(locals())
    record('import_modules', True, 'Imported poissonhopf; catalog entries=%d' % len(catalog.catalog_list()))


@step
def parse_shipped_files():
    names = [name for name, _, _ in catalog.catalog_list()]
    for name in names:
        catalog.load(catalog.catalog_file(name))
    record('parse_shipped_files', True, 'Parsed %d files' % len(names))


@step
def structure_checks():
    for name in ('typea', 'gk3'):
        af = catalog.catalog_get(name)
        report = checks.hopf_checks(af, None)
        if not report.passed:
            raise RuntimeError('%s fails: %s' % (name, '; '.join(r.line() for r in report.failures())))
    bad = checks.hopf_checks(catalog.catalog_get('group'), None)
    if bad.passed:
        raise RuntimeError('the uncorrected group bracket passed the Poisson Hopf check')
    record('structure_checks', True, 'typea and gk3 pass, group fails as expected')


@step
def enveloping_algebra():
    U = UEA(catalog.catalog_get('typea').hopf)
    nf = str(parse_word(U, 'h(x)*m(g)'))
    if nf != 'g*h(x) + g*x':
        raise RuntimeError('unexpected normal form %s' % nf)
    lines = quotient.cobracket(catalog.catalog_get('gk3').hopf).lines()
    if "d'(y3) = 2*(y1@y2 - y2@y1)" not in lines:
        raise RuntimeError('unexpected cobracket %s' % lines)
    record('enveloping_algebra', True, 'h(x)*m(g) = %s' % nf)


@step
def symplectic_cohomology():
    A = catalog.catalog_get('symplectic').algebra
    table = cohomology.hp_table(A, 2, 4)
    if table != {0: [1, 0, 0, 0, 0], 1: [0] * 5, 2: [0] * 5}:
        raise RuntimeError('unexpected HP table %s' % table)
    record('symplectic_cohomology', True, '; '.join(cohomology.format_hp_table(table)))


@step
def command_line():
    from poissonhopf.cli import run
    out = io.StringIO()
    rc = run(['check', 'poisson-hopf', 'typea.alg', '--json'], out)
    data = json.loads(out.getvalue())
    if rc != 0 or not all(c['status'] == 'pass' for c in data['checks']):
        raise RuntimeError('check poisson-hopf typea.alg exited with %d' % rc)
    record('command_line', True, '%d checks passed' % len(data['checks']))


def main():
    # Run steps sequentially; stop on first failure to save time.
    steps = [import_modules, parse_shipped_files, structure_checks, enveloping_algebra,
             symplectic_cohomology, command_line]
    for s in steps:
        try:
            s()
        except Exception:
            break
    print(json.dumps(RESULT, indent=2, sort_keys=True))
    sys.exit(0 if RESULT['ok'] else 1)


if __name__ == '__main__':
    main()
