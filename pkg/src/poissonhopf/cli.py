#!/usr/bin/env python
'''
cli

Command line front end:

    poissonhopf check {poisson,hopf,poisson-hopf,ore,all} FILE [--degree D]
    poissonhopf uea {nf,delta,antipode} FILE -e EXPR
    poissonhopf hb {pi,lambda,upsilon} FILE -e EXPR
    poissonhopf hb {cobracket,lie} FILE
    poissonhopf cohomology FILE [--s S] [--max-degree D]
    poissonhopf smash check FILE [--degree D]
    poissonhopf examples list
    poissonhopf examples dump NAME [--param k=v ...]

Exit status: 0 when every check passes, 1 when a check fails, 2 on usage,
parse or input errors. Logs go to stderr, reports to stdout.
'''

# =============================================================================
# Standard Python modules
# =============================================================================
import argparse
import json
import logging
import random
import sys

# =============================================================================
# Extension modules
# =============================================================================
from poissonhopf import catalog
from poissonhopf import checks
from poissonhopf import cohomology
from poissonhopf import config
from poissonhopf.errors import BindingError, NotSupportedError, PoissonHopfError
from poissonhopf.hopf import check_hopf_axioms
from poissonhopf.parser import format_algebra, parse_word
from poissonhopf.quotient import Cobracket, QuotientComodule
from poissonhopf.uea import UEA

log = logging.getLogger(__name__)

EXIT_PASS, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def _param(text):
    if '=' not in text:
        raise argparse.ArgumentTypeError('expected k=v, got %r' % text)
    key, value = text.split('=', 1)
    return key.strip(), value.strip()


def _common(suppress):
    '''Global flags; subcommands repeat them without defaults so either position works.'''
    common = argparse.ArgumentParser(add_help=False)

    def default(value):
        return argparse.SUPPRESS if suppress else value
    common.add_argument('--json', action='store_true', default=default(False),
                        help='machine readable output')
    common.add_argument('--seed', type=int, default=default(config.DEFAULT_SEED),
                        help='seed of the randomized checks')
    common.add_argument('--threads', type=int, default=default(config.DEFAULT_THREADS),
                        help='worker threads for independent checks')
    common.add_argument('--timing', action='store_true', default=default(False),
                        help='report check times')
    common.add_argument('--log-level', default=default(config.LOG_LEVEL), help='logging level (stderr)')
    common.add_argument('--prime', type=int, default=default(None),
                        help='enable coefficients in GF(P) for files declaring characteristic P')
    return common


def build_parser():
    common = _common(True)
    parser = argparse.ArgumentParser(prog='poissonhopf', parents=[_common(False)],
                                     description='Exact computations with Poisson Hopf algebras')
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('check', parents=[common], help='run structure checks on an .alg file')
    p.add_argument('kind', choices=['poisson', 'hopf', 'poisson-hopf', 'ore', 'all'])
    p.add_argument('file')
    p.add_argument('--degree', type=int, default=3)

    p = sub.add_parser('uea', parents=[common], help='compute in the enveloping algebra B^e')
    p.add_argument('op', choices=['nf', 'delta', 'antipode'])
    p.add_argument('file')
    p.add_argument('-e', '--expr', required=True)

    p = sub.add_parser('hb', parents=[common], help='maps into the quotient Hopf algebra H(B)')
    p.add_argument('op', choices=['pi', 'lambda', 'upsilon', 'cobracket', 'lie'])
    p.add_argument('file')
    p.add_argument('-e', '--expr')

    p = sub.add_parser('cohomology', parents=[common], help='dimensions of HP^s by degree')
    p.add_argument('file')
    p.add_argument('--s', type=int, default=None, help='arity (all arities if omitted)')
    p.add_argument('--max-degree', type=int, default=6)

    p = sub.add_parser('smash', parents=[common], help='graded smash product checks')
    p.add_argument('op', choices=['check'])
    p.add_argument('file')
    p.add_argument('--degree', type=int, default=2)

    p = sub.add_parser('examples', parents=[common], help='the shipped catalog')
    p.add_argument('op', choices=['list', 'dump'])
    p.add_argument('name', nargs='?')
    p.add_argument('--param', type=_param, action='append', default=[])
    return parser


# =============================================================================
# Helpers
# =============================================================================
def _load(args):
    af = catalog.load(args.file)
    p = af.ring.characteristic
    if p and args.prime != p:
        raise NotSupportedError('%s is over characteristic %d; pass --prime %d to enable it'
                                % (args.file, p, p))
    return af


def _need_hopf(af):
    if af.hopf is None:
        raise NotSupportedError('%s has no [coalgebra] section' % af.name)
    return af.hopf


def _emit_report(args, report, out):
    if args.json:
        out.write(report.dumps(args.timing) + '\n')
    else:
        for note in report.notes:
            out.write(note + '\n')
        for r in report:
            line = r.line()
            if args.timing and r.millis is not None:
                line += ' (%d ms)' % r.millis
            out.write(line + '\n')
    return EXIT_PASS if report.passed else EXIT_FAIL


def _emit_values(args, values, out):
    '''values: list of (label, text).'''
    if args.json:
        out.write(json.dumps(dict(values), indent=1) + '\n')
    else:
        for label, text in values:
            out.write(text + '\n')
    return EXIT_PASS


# =============================================================================
# Commands
# =============================================================================
def cmd_check(args, out):
    af = _load(args)
    rng = random.Random(args.seed)
    if args.kind == 'poisson':
        report = checks.poisson_checks(af, rng)
    elif args.kind == 'hopf':
        report = check_hopf_axioms(_need_hopf(af))
    elif args.kind == 'poisson-hopf':
        _need_hopf(af)
        report = checks.hopf_checks(af, rng)
    elif args.kind == 'ore':
        _need_hopf(af)
        if af.ore is None:
            raise NotSupportedError('%s has no [ore] section' % af.name)
        report = checks.ore_checks(af, rng)
    else:
        report = checks.run_all(af, args.degree, args.seed, args.threads)
        for group, (want, got) in sorted(checks.compare_expected(af, report).items()):
            log.warning('%s: %s expected to %s', af.name, group, 'pass' if want else 'fail')
    return _emit_report(args, report, out)


def cmd_uea(args, out):
    af = _load(args)
    U = UEA(af.hopf if af.hopf is not None else af.algebra)
    u = parse_word(U, args.expr)
    if args.op == 'nf':
        value = u
    elif args.op == 'delta':
        value = U.delta(u)
    else:
        value = U.antipode(u)
    return _emit_values(args, [(args.op, str(value))], out)


def cmd_hb(args, out):
    af = _load(args)
    U = UEA(_need_hopf(af))
    q = QuotientComodule(U)
    if args.op == 'cobracket':
        return _emit_values(args, [('cobracket', '\n'.join(Cobracket(q).lines()))], out)
    if args.op == 'lie':
        return _emit_values(args, [('lie', '\n'.join(q.lie.table()) or 'abelian')], out)
    if not args.expr:
        raise BindingError('hb %s needs -e EXPR' % args.op)
    u = parse_word(U, args.expr)
    if args.op == 'pi':
        value = q.pi(u)
    elif args.op == 'lambda':
        value = q.comodule_lambda(u)
    else:
        value = q.upsilon(u)
    return _emit_values(args, [(args.op, str(value))], out)


def cmd_cohomology(args, out):
    af = _load(args)
    A = af.algebra
    if args.s is None:
        table = cohomology.hp_table(A, af.ring.ngens, args.max_degree, args.threads)
    else:
        table = {args.s: cohomology.hp_compute(A, args.s, args.max_degree, args.threads)}
    if args.json:
        out.write(json.dumps({'max_degree': args.max_degree,
                              'dims': dict(('HP^%d' % s, d) for s, d in sorted(table.items()))},
                             indent=1) + '\n')
    else:
        out.write('degree: %s\n' % ' '.join(str(d) for d in range(args.max_degree + 1)))
        for line in cohomology.format_hp_table(table):
            out.write(line + '\n')
    return EXIT_PASS


def cmd_smash(args, out):
    af = _load(args)
    if af.biproduct is None:
        raise NotSupportedError('%s has no [biproduct] section' % af.name)
    report = checks.biproduct_checks(af, random.Random(args.seed), args.degree)
    return _emit_report(args, report, out)


def cmd_examples(args, out):
    if args.op == 'list':
        entries = catalog.catalog_list()
        if args.json:
            out.write(json.dumps([{'name': n, 'summary': s, 'params': dict(p)}
                                  for n, s, p in entries], indent=1) + '\n')
        else:
            for name, summary, params in entries:
                label = ', '.join('%s=%s' % kv for kv in params)
                out.write('%-16s %s%s\n' % (name, summary, ' [%s]' % label if label else ''))
        return EXIT_PASS
    if not args.name:
        raise BindingError('examples dump needs a catalog name')
    values = dict(args.param)
    if args.name == 'restricted' and args.prime is not None:
        values.setdefault('p', str(args.prime))
    af = catalog.catalog_get(args.name, **values)
    label = ', '.join('%s=%s' % (k, v) for k, v in catalog.bindings(args.name, **values).items())
    out.write(format_algebra(af, '%s%s' % (args.name, '(%s)' % label if label else '')))
    return EXIT_PASS


COMMANDS = {
    'check': cmd_check,
    'uea': cmd_uea,
    'hb': cmd_hb,
    'cohomology': cmd_cohomology,
    'smash': cmd_smash,
    'examples': cmd_examples,
}


def run(argv=None, out=None):
    '''Parse argv, run the command and return the exit status.'''
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code else EXIT_PASS
    config.setup_logging(args.log_level)
    try:
        return COMMANDS[args.command](args, out)
    except PoissonHopfError as e:
        sys.stderr.write('poissonhopf: error: %s\n' % e)
        return EXIT_ERROR
    except (OSError, ValueError) as e:
        sys.stderr.write('poissonhopf: error: %s\n' % e)
        return EXIT_ERROR


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
