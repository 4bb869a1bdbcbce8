#!/usr/bin/env python
'''
checks

The `check all` suite: every check that applies to a parsed .alg file,
grouped by the structure the file carries. Structural checks on B run
first; the remaining groups are independent and may run on a thread
pool. Each group draws from its own random.Random(seed + index) and the
reports are merged in group order, so the output does not depend on the
number of threads.
'''

# =============================================================================
# Standard Python modules
# =============================================================================
import logging
import random
from concurrent.futures import ThreadPoolExecutor

# =============================================================================
# Extension modules
# =============================================================================
from poissonhopf import config
from poissonhopf import cohomology
from poissonhopf import quotient
from poissonhopf import smash
from poissonhopf import uea
from poissonhopf.errors import PoissonHopfError
from poissonhopf.hopf import (check_hopf_axioms, check_ore_hopf, check_poisson_hopf,
                              check_poisson_hopf_random)
from poissonhopf.poisson import check_jacobi, random_triple_jacobi
from poissonhopf.report import Report

log = logging.getLogger(__name__)

# Prefixes of the check names that make up each expected-outcome group.
GROUP_CHECKS = {
    'poisson': ('jacobi', 'jacobi-random', 'poisson-ideal'),
    'hopf': ('coassociativity', 'counit', 'antipode', 'group-like', 'hopf-ideal'),
    'poisson-hopf': ('poisson-hopf', 'poisson-hopf-random', 'counit-bracket', 'antipode-bracket'),
    'uea': ('relation-', 'confluence', 'pbw-', 'decomposition', 'regular-action', 'uea-', 'adjoint-'),
    'quotient': ('lie-theta', 'partition-', 'comodule-map', 'upsilon-module', 'primitive', 'coradical',
                 'normal-basis-', 'galois-', 'cobracket-', 'co-jacobi'),
    'cohomology': ('coboundary-square', 'boundary-square', 'hp-'),
    'ore': ('ore-',),
    'biproduct': ('star-', 'biproduct-', 'kge-', 'module-', 'smash-', 'generation-'),
}


def _samples(samples, key):
    return (samples or config.SAMPLES).get(key, config.SAMPLES[key])


def _uea_ready(ring):
    return not ring.has_relations() and not ring.characteristic


def _guarded(name, func, *args, **kwargs):
    '''Run a report function; input outside its scope becomes a note.'''
    try:
        return func(*args, **kwargs)
    except PoissonHopfError as e:
        log.info('%s skipped: %s', name, e)
        report = Report()
        report.note('%s skipped: %s' % (name, e))
        return report


# =============================================================================
# Check groups
# =============================================================================
def poisson_checks(af, rng, samples=None):
    report = check_jacobi(af.algebra)
    random_triple_jacobi(af.algebra, rng, _samples(samples, 'identities'), report=report)
    return report


def hopf_checks(af, rng, samples=None):
    report = Report()
    check_hopf_axioms(af.hopf, report)
    check_poisson_hopf(af.hopf, report)
    check_poisson_hopf_random(af.hopf, rng, _samples(samples, 'identities'), report)
    return report


def ore_checks(af, rng, samples=None):
    report, ext = check_ore_hopf(af.hopf, af.ore_hopf_data())
    if ext is not None:
        report.note('extension by %s: %s' % (af.ore['name'], ', '.join(
            'Delta(%s) = %s' % (n, ext.delta[i]) for i, n in enumerate(ext.ring.names)
            if n == af.ore['name'])))
    return report


def uea_checks(af, rng, degree=3, samples=None, hopf=True):
    '''
    Relations, confluence, PBW and decomposition of B^e, and for Hopf B
    the Hopf axioms and the normality of m(B).
    '''
    U = uea.UEA(af.hopf if hopf else af.algebra)
    report = Report()
    uea.relations_report(U, rng, _samples(samples, 'relations'), report)
    uea.confluence_report(U, rng, _samples(samples, 'confluence'), report=report)
    uea.pbw_report(U, degree, report)
    uea.decomposition_report(U, rng, _samples(samples, 'identities'), report)
    if hopf:
        uea.hopf_report(U, degree, rng, report=report)
        uea.normality_report(U, rng, report=report)
    return report


def quotient_checks(af, rng, degree=3, samples=None):
    '''The H(B) suite; parts outside the scope of B are noted and skipped.'''
    report = Report()
    U = uea.UEA(af.hopf)
    try:
        q = quotient.QuotientComodule(U)
    except PoissonHopfError as e:
        report.note('H(B) skipped: %s' % e)
        return report
    quotient.lie_report(q, report)
    report.extend(_guarded('partition', quotient.partition_report, q, 4))
    report.extend(_guarded('comodule', quotient.comodule_report, q, degree))
    report.extend(_guarded('primitive', quotient.primitive_report, q, rng,
                           _samples(samples, 'identities')))
    report.extend(_guarded('normal basis', quotient.normal_basis_report, q, degree))
    report.extend(_guarded('galois', quotient.galois_report, q, min(degree, 2), rng))
    if not af.hopf.group_likes():
        report.extend(_guarded('cobracket', quotient.cobracket_report, q))
    return report


def cohomology_checks(af, rng, degree=3, samples=None, threads=1):
    report = cohomology.complex_report(af.algebra, rng, _samples(samples, 'cochains'),
                                       chains=_samples(samples, 'chains'))
    ring = af.ring
    if ring.is_graded() and not ring.has_relations() and not any(ring.invertible):
        cohomology.cohomology_report(af.algebra, degree, threads, report)
    return report


def biproduct_checks(af, rng, degree=2, samples=None):
    report = Report()
    B = smash.BiproductInput.from_file(af)
    smash.check_star(B, report)
    smash.kg_env(B.group, min(degree, 2), report)
    smash.check_module_algebra(B, rng, _samples(samples, 'module-algebra'), report)
    smash.check_generation(B, min(degree, 2), report)
    return report


# =============================================================================
# Suite
# =============================================================================
def plan(af, degree=3, samples=None):
    '''The (name, callable(rng)) groups that apply to the file, in order.'''
    ring = af.ring
    groups = [('poisson', lambda rng: poisson_checks(af, rng, samples))]
    if af.hopf is not None:
        groups.append(('hopf', lambda rng: hopf_checks(af, rng, samples)))
    if af.ore is not None:
        groups.append(('ore', lambda rng: ore_checks(af, rng, samples)))
    if _uea_ready(ring):
        groups.append(('uea', lambda rng: uea_checks(af, rng, degree, samples, af.hopf is not None)))
        if af.hopf is not None and af.biproduct is None:
            groups.append(('quotient', lambda rng: quotient_checks(af, rng, degree, samples)))
    groups.append(('cohomology', lambda rng: cohomology_checks(af, rng, degree, samples, 1)))
    if af.biproduct is not None:
        groups.append(('biproduct', lambda rng: biproduct_checks(af, rng, degree, samples)))
    return groups


def run_all(af, degree=3, seed=None, threads=None, samples=None):
    '''
    Run every applicable check group on an AlgebraFile and merge the
    reports. Groups after the structural ones are skipped (with a note)
    when B itself fails its Poisson or Hopf checks.
    '''
    seed = config.DEFAULT_SEED if seed is None else seed
    threads = config.DEFAULT_THREADS if threads is None else threads
    groups = plan(af, degree, samples)
    structural = [g for g in groups if g[0] in ('poisson', 'hopf')]
    rest = [g for g in groups if g[0] not in ('poisson', 'hopf')]
    index = dict((name, i) for i, (name, _) in enumerate(groups))

    def run(group):
        name, func = group
        log.info('check group %s on %s', name, af.name)
        return func(random.Random(seed + index[name]))

    report = Report()
    for group in structural:
        report.extend(run(group))
    if not report.passed:
        report.note('B fails its structure checks; remaining groups skipped')
        return report
    if threads > 1 and len(rest) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, rest))
    else:
        results = [run(g) for g in rest]
    for r in results:
        report.extend(r)
    return report


def group_verdicts(report):
    '''{group: passed} for the expected-outcome groups present in a report.'''
    out = {}
    for name in report.names():
        base = name.split('[', 1)[0]
        for group, prefixes in GROUP_CHECKS.items():
            if any(base == p or (p.endswith('-') and base.startswith(p)) for p in prefixes):
                out[group] = out.get(group, True) and report[name].passed
    return out


def compare_expected(af, report):
    '''
    Mismatches between the catalog's expected verdicts and a report.
    Groups present in the report without a recorded verdict must pass.
    '''
    verdicts = group_verdicts(report)
    out = {}
    for group in sorted(set(af.expected) | set(verdicts)):
        want = af.expected.get(group, True)
        if verdicts.get(group) != want:
            out[group] = (want, verdicts.get(group))
    return out
