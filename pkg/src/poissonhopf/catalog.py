#!/usr/bin/env python
'''
catalog

Named Poisson (Hopf) algebras, kept as .alg templates with rational
parameters. catalog_get substitutes the bindings, validates them and
parses the result; the default instantiations are shipped in the data
directory so they double as parser fixtures.

Every entry records the verdict each check group is expected to give.
'''

# =============================================================================
# Standard Python modules
# =============================================================================
import logging
import os
import string
from collections import OrderedDict, namedtuple
from fractions import Fraction

# =============================================================================
# Extension modules
# =============================================================================
from poissonhopf import config
from poissonhopf.errors import BindingError, ParseError
from poissonhopf.parser import parse_algebra, read_algebra

log = logging.getLogger(__name__)

Entry = namedtuple('Entry', 'name summary params template expected validate')

PRIMITIVE = 'Delta(%s) = %s @ 1 + 1 @ %s'


def _primitives(*names):
    return '\n'.join(PRIMITIVE % (n, n, n) for n in names)


def _grading(**degrees):
    return '\n'.join('%s = %d' % nd for nd in degrees.items())


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise BindingError('parameter value %r is not a rational number' % (text,))


def _format_value(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else '%d/%d' % (c.numerator, c.denominator)


def _is_prime(p):
    return p > 1 and all(p % d for d in range(2, int(p ** 0.5) + 1))


# =============================================================================
# Binding checks
# =============================================================================
def _validate_gk3(b):
    if b['alpha'] and b['l1'] != b['l2']:
        raise BindingError('gk3 needs alpha = 0 when l1 != l2 (got l1=%s, l2=%s, alpha=%s)'
                           % (b['l1'], b['l2'], b['alpha']))


def _validate_gk4(b):
    if not b['t1'] and not b['t2']:
        raise BindingError('gk4 needs t1 or t2 nonzero')


def _validate_restricted(b):
    p = b['p']
    if p.denominator != 1 or not _is_prime(p.numerator) or p == 2:
        raise BindingError('restricted needs a prime p > 2 (got %s)' % p)


# =============================================================================
# Templates
# =============================================================================
ENTRIES = OrderedDict()


def _entry(name, summary, params, template, expected, validate=None):
    ENTRIES[name] = Entry(name, summary, OrderedDict(params), template.strip() + '\n',
                          dict(expected), validate)


_ALL_PASS = {'poisson': True, 'hopf': True, 'poisson-hopf': True}

_entry('ps-abelian', 'Poisson symmetric algebra of the 2-dim abelian Lie algebra', [], '''
[generators]
generators = a b
[grading]
%s
[coalgebra]
%s
''' % (_grading(a=1, b=1), _primitives('a', 'b')), _ALL_PASS)

_entry('ps-nonabelian', 'Poisson symmetric algebra of the 2-dim non-abelian Lie algebra [a,b] = b', [], '''
[generators]
generators = a b
[grading]
%s
[bracket]
{a,b} = b
[coalgebra]
%s
''' % (_grading(a=1, b=1), _primitives('a', 'b')), _ALL_PASS)

_entry('gk3', 'connected Poisson Hopf algebra k[x1,x2,x3] of GK dimension 3',
       [('l1', '1'), ('l2', '1'), ('alpha', '1')], '''
[generators]
generators = x1 x2 x3
[grading]
%s
[bracket]
{x3,x1} = ($l1)*x1 + ($alpha)*x2
{x3,x2} = ($l2)*x2
[coalgebra]
%s
Delta(x3) = 1 @ x3 + x1 @ x2 - x2 @ x1 + x3 @ 1
''' % (_grading(x1=1, x2=1, x3=2), _primitives('x1', 'x2')), _ALL_PASS, _validate_gk3)

_entry('gk3-ore', 'gk3 as a Poisson Hopf Ore extension of k[x1,x2]',
       [('l1', '1'), ('l2', '1'), ('alpha', '1')], '''
[generators]
generators = x1 x2
[grading]
%s
[coalgebra]
%s
[ore]
name = x3
degree = 2
group = 1
delta(x1) = ($l1)*x1 + ($alpha)*x2
delta(x2) = ($l2)*x2
w = x1 @ x2 - x2 @ x1
''' % (_grading(x1=1, x2=1), _primitives('x1', 'x2')), dict(_ALL_PASS, ore=True), _validate_gk3)

_entry('gk4', 'connected Poisson Hopf algebra k[X,Y,Z,W] of GK dimension 4',
       [('a11', '1'), ('a12', '0'), ('a21', '0'), ('a22', '1'),
        ('xi1', '0'), ('xi2', '0'), ('t1', '1'), ('t2', '0')], '''
[generators]
generators = X Y Z W
[bracket]
{W,X} = ($a11)*X + ($a12)*Y
{W,Y} = ($a21)*X + ($a22)*Y
{W,Z} = (($a11) + ($a22))*Z + ($xi1)*X + ($xi2)*Y
[coalgebra]
%s
Delta(Z) = 1 @ Z + X @ Y - Y @ X + Z @ 1
Delta(W) = 1 @ W + W @ 1 + ($t1)*(Z @ X - X @ Z + X @ X*Y + X*Y @ X) + ($t2)*(Y @ Z - Z @ Y + X*Y @ Y + Y @ X*Y)
''' % _primitives('X', 'Y'), _ALL_PASS, _validate_gk4)

_entry('typea', 'pointed Poisson Hopf algebra k[g^+-1, x] with {x,g} = lam*g*x', [('lam', '1')], '''
[generators]
generators = g* x
[bracket]
{x,g} = ($lam)*g*x
[coalgebra]
Delta(g) = g @ g
Delta(x) = x @ 1 + g @ x
S(x) = -g^-1*x
''', _ALL_PASS)

_entry('typea-ore', 'typea as a Poisson Hopf Ore extension of k[g^+-1]', [('lam', '1')], '''
[generators]
generators = g*
[coalgebra]
Delta(g) = g @ g
[ore]
name = x
group = g
eta(g) = $lam
''', dict(_ALL_PASS, ore=True))

_entry('xyzg', 'pointed Poisson Hopf algebra k[x,y,z,g^+-1]', [('lam', '1')], '''
[generators]
generators = x y z g*
[bracket]
{z,x} = ($lam)*x
{z,y} = -($lam)*y
{x,y} = z
[coalgebra]
Delta(x) = x @ g + g^-1 @ x
Delta(y) = y @ g^-1 + g @ y
Delta(z) = z @ 1 + 1 @ z
S(x) = -x
S(y) = -y
''', _ALL_PASS)

_entry('group', 'k[x, a^+-1, b^+-1] with {x,a} = a*x^2 (Jacobi holds, not Poisson Hopf)',
       [('lam', '1')], '''
[generators]
generators = x a* b*
[bracket]
{a,b} = x
{x,a} = ($lam)*a*x^2
{x,b} = -($lam)*b*x^2
[coalgebra]
Delta(x) = x @ a*b + a*b @ x
S(x) = -a^-2*b^-2*x
''', {'poisson': True, 'hopf': True, 'poisson-hopf': False})

_entry('group-corrected', 'k[x, a^+-1, b^+-1], a Poisson Hopf bracket for the same coalgebra',
       [('mu', '1')], '''
[generators]
generators = x a* b*
[bracket]
{a,b} = ($mu)*x
{x,a} = -($mu)*b^-1*x^2
{x,b} = ($mu)*a^-1*x^2
[coalgebra]
Delta(x) = x @ a*b + a*b @ x
S(x) = -a^-2*b^-2*x
''', _ALL_PASS)

_entry('poissonu', 'Poisson version of U_q(sl2) on k[E, F, K^+-1]', [('lam', '1'), ('alpha', '1')], '''
[generators]
generators = E F K*
[bracket]
{E,K} = ($lam)*K*E
{F,K} = -($lam)*K*F
{E,F} = ($alpha)*(K - K^-1)
[coalgebra]
Delta(E) = E @ K + 1 @ E
Delta(F) = F @ 1 + K^-1 @ F
S(E) = -E*K^-1
S(F) = -K*F
''', _ALL_PASS)

_entry('osl2', 'Poisson version of O_q(SL2)', [('lam', '1')], '''
[generators]
generators = x11 x12 x21 x22
[relations]
x11*x22 = 1 + x12*x21
[bracket]
{x11,x12} = ($lam)*x11*x12
{x11,x21} = ($lam)*x11*x21
{x11,x22} = 2*($lam)*x12*x21
{x12,x22} = ($lam)*x12*x22
{x21,x22} = ($lam)*x21*x22
[coalgebra]
Delta(x11) = x11 @ x11 + x12 @ x21
Delta(x12) = x11 @ x12 + x12 @ x22
Delta(x21) = x21 @ x11 + x22 @ x21
Delta(x22) = x21 @ x12 + x22 @ x22
eps(x11) = 1
eps(x22) = 1
S(x11) = x22
S(x12) = -x12
S(x21) = -x21
S(x22) = x11
''', _ALL_PASS)

_entry('restricted', 'restricted Poisson Hopf algebra k[x,y,z]/(x^p,y^p,z^p) in characteristic p',
       [('p', '3')], '''
[generators]
generators = x y z
characteristic = $p
[relations]
x^$p = 0
y^$p = 0
z^$p = 0
[bracket]
{x,y} = y
{y,z} = y^2
{x,z} = z
[coalgebra]
%s
Delta(z) = z @ 1 + 1 @ z - 2*x @ y
''' % _primitives('x', 'y'), _ALL_PASS, _validate_restricted)

_entry('symplectic', 'symplectic plane k[x,y] with {x,y} = 1', [], '''
[generators]
generators = x y
[grading]
%s
[bracket]
{x,y} = 1
''' % _grading(x=1, y=1), {'poisson': True})

_entry('kx-trivial', 'k[x] with the zero bracket', [], '''
[generators]
generators = x
[grading]
x = 1
''', {'poisson': True})

_entry('gr-typea', 'associated graded of typea: R = k[y] with k[g^+-1] acting by g*y = -y', [], '''
[generators]
generators = g* y
[bracket]
{g,y} = -g*y
[coalgebra]
Delta(y) = y @ 1 + 1 @ y
[biproduct]
group = g
star(g, y) = -y
''', dict(_ALL_PASS, biproduct=True))


# =============================================================================
# Access
# =============================================================================
def catalog_list():
    '''(name, summary, parameters) of every entry.'''
    return [(e.name, e.summary, list(e.params.items())) for e in ENTRIES.values()]


def bindings(name, **values):
    '''Validated parameter bindings name -> Fraction.'''
    entry = _lookup(name)
    unknown = [k for k in values if k not in entry.params]
    if unknown:
        raise BindingError('unknown parameter(s) %s for %s (known: %s)'
                           % (', '.join(sorted(unknown)), name, ', '.join(entry.params) or 'none'))
    out = OrderedDict()
    for key, default in entry.params.items():
        out[key] = _rational(values.get(key, default))
    if entry.validate is not None:
        entry.validate(out)
    return out


def render(name, **values):
    '''The .alg text of an entry under the given bindings.'''
    entry = _lookup(name)
    b = bindings(name, **values)
    text = string.Template(entry.template).substitute(
        dict((k, _format_value(v)) for k, v in b.items()))
    label = ', '.join('%s=%s' % (k, _format_value(v)) for k, v in b.items())
    header = '# %s%s: %s\n' % (name, '(%s)' % label if label else '', entry.summary)
    return header + text


def catalog_get(name, **values):
    '''
    Parse an entry into an AlgebraFile with `expected` set. Raises
    BindingError for unknown names, unknown parameters or invalid values.
    '''
    entry = _lookup(name)
    text = render(name, **values)
    try:
        af = parse_algebra(text, name)
    except ParseError as e:
        raise BindingError('%s does not parse under the given bindings: %s' % (name, e))
    af.expected = dict(entry.expected)
    log.debug('catalog entry %s loaded with %s', name, values or 'defaults')
    return af


def catalog_file(name):
    '''Path of the shipped default instantiation.'''
    _lookup(name)
    return os.path.join(config.datadir, name + '.alg')


def load(path):
    '''
    Read an .alg file; a missing path falls back to the shipped file of
    the same basename. Catalog files get their expected outcomes.
    '''
    if not os.path.exists(path):
        fallback = os.path.join(config.datadir, os.path.basename(path))
        if not os.path.exists(fallback):
            raise ParseError('no such file: %s' % path)
        log.info('%s not found, using %s', path, fallback)
        path = fallback
    af = read_algebra(path)
    if af.name in ENTRIES:
        af.expected = dict(ENTRIES[af.name].expected)
    return af


def _lookup(name):
    try:
        return ENTRIES[name]
    except KeyError:
        raise BindingError('unknown catalog entry %r (known: %s)' % (name, ', '.join(ENTRIES)))
