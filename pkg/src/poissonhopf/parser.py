#!/usr/bin/env python
'''
parser

The .alg input format. A file is a list of line statements, optionally
grouped under section headers:

    # typeA with lambda = 1
    [generators]
    generators = g* x            # trailing * marks an invertible generator
    [bracket]
    {x,g} = g*x
    [coalgebra]
    Delta(x) = x @ 1 + g @ x
    eps(x) = 0
    S(x) = -g^-1*x

Further sections: [grading] (`x = 1`), [relations] (`lead = tail`),
[ore] (keys name, degree, group, eta(m), alpha(b), delta(b), w) and
[biproduct] (keys group, star(g, y)). `characteristic = p` may appear
with the generators. Unspecified brackets are 0.

Expressions use `+ - * / ^`, parentheses, rational literals and `@`
(or the tensor sign) for tensor products. Words in B^e additionally use
`h(f)` and `m(f)`.
'''

# =============================================================================
# Standard Python modules
# =============================================================================
import logging
import re
from fractions import Fraction

# =============================================================================
# Extension modules
# =============================================================================
from poissonhopf.errors import ParseError, PoissonHopfError
from poissonhopf.polynomial import GeneratorSet, LaurentPoly
from poissonhopf.poisson import PoissonAlgebra
from poissonhopf.space import Element, join_terms
from poissonhopf.tensor import TensorElement, tensor

log = logging.getLogger(__name__)

SECTIONS = ('generators', 'grading', 'relations', 'bracket', 'coalgebra', 'ore', 'biproduct')

TOKEN = re.compile(r'\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^(),@{}]|⊗))')


# =============================================================================
# Lexer
# =============================================================================
class Token(object):

    __slots__ = ('kind', 'value', 'column')

    def __init__(self, kind, value, column):
        self.kind = kind
        self.value = value
        self.column = column

    def __repr__(self):
        return 'Token(%s, %r)' % (self.kind, self.value)


def tokenize(text, line=None, offset=0):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError('unexpected character %r' % text[pos + bad], line, offset + pos + bad + 1)
        kind = m.lastgroup
        value = m.group(kind)
        if value == '⊗':
            value = '@'
        tokens.append(Token(kind, value, offset + m.start(kind) + 1))
        pos = m.end()
    tokens.append(Token('eof', None, offset + len(text) + 1))
    return tokens


# =============================================================================
# Expression parser
# =============================================================================
class ExpressionParser(object):

    '''
    Recursive descent over the expression grammar

        expression := tensor (('+' | '-') tensor)*
        tensor     := term ('@' term)*
        term       := factor (('*' | '/') factor)*
        factor     := ('-' | '+') factor | power
        power      := primary ('^' ['-'] number)?
        primary    := number | name | '(' expression ')' | h '(' expression ')' | m '(' expression ')'

    **Arguments:**

    - ring -> GeneratorSet: ring the generator names resolve in
    - words -> UEA: when given, h(f) and m(f) build elements of B^e
    - line, offset -> position of the text for error messages
    '''

    ADDING_OPERATOR = ('+', '-')
    MULTIPLYING_OPERATOR = ('*', '/')

    def __init__(self, ring, text, words=None, line=None, offset=0):
        self.ring = ring
        self.words = words
        self.line = line
        self.tokens = tokenize(text, line, offset)
        self.pos = 0

    # -- token handling ------------------------------------------------------
    @property
    def ct(self):
        return self.tokens[self.pos]

    def advance(self):
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def peek(self, kind, value=None):
        t = self.tokens[self.pos]
        return t.kind == kind and (value is None or t.value == value)

    def peek_op(self, *ops):
        t = self.tokens[self.pos]
        return t.kind == 'op' and t.value in ops

    def match_op(self, op):
        if not self.peek_op(op):
            self.error('expected %r' % op)
        return self.advance()

    def error(self, message, token=None):
        token = token or self.ct
        found = 'end of input' if token.kind == 'eof' else repr(token.value)
        raise ParseError('%s, found %s' % (message, found), self.line, token.column)

    def fail(self, message, token):
        raise ParseError(message, self.line, token.column)

    # -- grammar -------------------------------------------------------------
    def parse(self):
        value = self.parse_expression()
        if not self.peek('eof'):
            self.error('unexpected token')
        return value

    def parse_expression(self):
        value = self.parse_tensor()
        while self.peek_op(*self.ADDING_OPERATOR):
            t = self.advance()
            rhs = self.parse_tensor()
            value = self.combine(t, value, rhs, t.value)
        return value

    def parse_tensor(self):
        value = self.parse_term()
        while self.peek_op('@'):
            t = self.advance()
            rhs = self.parse_term()
            value = tensor(self.leg(value, t), self.leg(rhs, t))
        return value

    def parse_term(self):
        value = self.parse_factor()
        while self.peek_op(*self.MULTIPLYING_OPERATOR):
            t = self.advance()
            rhs = self.parse_factor()
            if t.value == '*':
                value = self.combine(t, value, rhs, '*')
            else:
                value = self.divide(t, value, rhs)
        return value

    def parse_factor(self):
        if self.peek_op('-'):
            self.advance()
            return -self.parse_factor()
        if self.peek_op('+'):
            self.advance()
            return self.parse_factor()
        return self.parse_power()

    def parse_power(self):
        value = self.parse_primary()
        if self.peek_op('^'):
            t = self.advance()
            sign = 1
            if self.peek_op('-'):
                self.advance()
                sign = -1
            if not self.peek('number'):
                self.error('expected an integer exponent')
            n = sign * int(self.advance().value)
            try:
                value = value ** n
            except (PoissonHopfError, ZeroDivisionError) as e:
                self.fail(str(e), t)
        return value

    def parse_primary(self):
        t = self.ct
        if t.kind == 'number':
            self.advance()
            return Fraction(int(t.value))
        if t.kind == 'op' and t.value == '(':
            self.advance()
            value = self.parse_expression()
            self.match_op(')')
            return value
        if t.kind == 'name':
            self.advance()
            if self.words is not None and t.value in ('h', 'm') and self.peek_op('('):
                self.advance()
                arg = self.parse_expression()
                self.match_op(')')
                arg = self.as_poly(arg, t)
                return self.words.h_of(arg) if t.value == 'h' else self.words.m(arg)
            if t.value not in self.ring.names:
                self.fail('unknown generator %r' % t.value, t)
            return self.ring.gen(t.value)
        self.error('expected a number, a generator or "("')

    # -- value handling ------------------------------------------------------
    def as_poly(self, value, token):
        if isinstance(value, Fraction):
            return self.ring.scalar(value)
        if isinstance(value, LaurentPoly):
            return value
        self.fail('expected a polynomial', token)

    def leg(self, value, token):
        if isinstance(value, Fraction):
            return self.ring.scalar(value)
        if isinstance(value, (LaurentPoly, TensorElement)):
            return value
        self.fail('tensor legs must be polynomials', token)

    def lift(self, a, b):
        '''Bring a polynomial to B^e when it meets a word.'''
        if self.words is None:
            return a, b
        if isinstance(a, LaurentPoly) and isinstance(b, Element) and not isinstance(b, LaurentPoly):
            a = self.words.m(a)
        if isinstance(b, LaurentPoly) and isinstance(a, Element) and not isinstance(a, LaurentPoly):
            b = self.words.m(b)
        return a, b

    def combine(self, token, a, b, op):
        a, b = self.lift(a, b)
        if isinstance(a, TensorElement) and isinstance(b, TensorElement) and a.nlegs != b.nlegs:
            self.fail('tensors with different numbers of legs', token)
        if isinstance(a, TensorElement) != isinstance(b, TensorElement):
            if not (isinstance(a, Fraction) or isinstance(b, Fraction)) or op != '*':
                self.fail('cannot mix tensors and polynomials', token)
        try:
            if op == '+':
                return a + b
            if op == '-':
                return a - b
            return a * b
        except PoissonHopfError as e:
            self.fail(str(e), token)

    def divide(self, token, a, b):
        try:
            if isinstance(b, Fraction):
                if not b:
                    self.fail('division by zero', token)
                return a / b if isinstance(a, Fraction) else a.scale(1 / b)
            if isinstance(b, LaurentPoly):
                return self.combine(token, a, b.inverse(), '*')
        except PoissonHopfError as e:
            self.fail(str(e), token)
        self.fail('can only divide by rationals or units', token)


def parse_polynomial(ring, text, line=None, offset=0):
    value = ExpressionParser(ring, text, line=line, offset=offset).parse()
    if isinstance(value, Fraction):
        return ring.scalar(value)
    if not isinstance(value, LaurentPoly):
        raise ParseError('expected a polynomial, got a tensor', line, offset + 1)
    return value


def parse_tensor(ring, text, line=None, offset=0, legs=2):
    value = ExpressionParser(ring, text, line=line, offset=offset).parse()
    if isinstance(value, Fraction) and not value:
        return TensorElement((ring,) * legs)
    if not isinstance(value, TensorElement) or value.nlegs != legs:
        raise ParseError('expected a tensor with %d legs' % legs, line, offset + 1)
    return value


def parse_rational(ring, text, line=None, offset=0):
    value = ExpressionParser(ring, text, line=line, offset=offset).parse()
    if isinstance(value, LaurentPoly) and value.is_scalar():
        value = value.scalar_part()
    if not isinstance(value, Fraction):
        raise ParseError('expected a rational number', line, offset + 1)
    return ring.coerce(value)


def parse_word(U, text):
    '''Parse a B^e expression such as "h(x)*m(g) - 2*h(g)" into a PBW element.'''
    value = ExpressionParser(U.ring, text, words=U, line=1).parse()
    if isinstance(value, Fraction):
        value = U.ring.scalar(value)
    if isinstance(value, LaurentPoly):
        value = U.m(value)
    if isinstance(value, TensorElement):
        raise ParseError('expected an element of B^e, got a tensor', 1, 1)
    return value


# =============================================================================
# AlgebraFile Class
# =============================================================================
class AlgebraFile(object):

    '''
    A parsed .alg file.

    **Attributes:**

    - ring -> GeneratorSet
    - algebra -> PoissonAlgebra
    - hopf -> HopfData, or None when the file has no coalgebra data
    - ore -> DICT or None: name, degree, group, eta, eta_overrides, alpha, delta, w
    - biproduct -> DICT or None: group (names), star ((g, y) -> LaurentPoly)
    - name -> STR: catalog name or file name
    - expected -> DICT: check name -> expected pass/fail (catalog entries)
    '''

    def __init__(self, ring, algebra, hopf=None, ore=None, biproduct=None, name=None):
        self.ring = ring
        self.algebra = algebra
        self.hopf = hopf
        self.ore = ore
        self.biproduct = biproduct
        self.name = name
        self.expected = {}
        self.notes = []

    def __repr__(self):
        return 'AlgebraFile(%s, %s)' % (self.name, self.ring)

    def __eq__(self, other):
        return (isinstance(other, AlgebraFile) and self.ring == other.ring
                and self.algebra == other.algebra and self.hopf == other.hopf
                and self.ore == other.ore and self.biproduct == other.biproduct)

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def ore_hopf_data(self):
        '''The [ore] section as OreHopfData over this file's Hopf algebra.'''
        from poissonhopf.hopf import Functional, OreHopfData
        if self.ore is None:
            raise ParseError('the file has no [ore] section')
        if self.hopf is None:
            raise ParseError('an [ore] section needs coalgebra data')
        o = self.ore
        eta = Functional(self.hopf, o['eta'], o['eta_overrides'])
        return OreHopfData(self.hopf, o['name'], eta, o['group'], o['w'],
                           o['alpha'], o['delta'], o['degree'])

    def to_text(self):
        return format_algebra(self)


class _Line(object):

    __slots__ = ('number', 'section', 'key', 'arg', 'rhs', 'offset', 'text')

    def __init__(self, number, section, key, arg, rhs, offset, text):
        self.number = number
        self.section = section
        self.key = key
        self.arg = arg
        self.rhs = rhs
        self.offset = offset
        self.text = text


STATEMENT = re.compile(r'^\s*(?:(?P<br>\{\s*(?P<a>[A-Za-z_]\w*)\s*,\s*(?P<b>[A-Za-z_]\w*)\s*\})'
                       r'|(?P<key>[A-Za-z_]\w*)\s*(?:\((?P<arg>[^()]*)\))?)\s*=\s*')


def _split_lines(text):
    section = None
    lines = []
    for number, raw in enumerate(text.splitlines(), 1):
        content = raw.split('#', 1)[0]
        if not content.strip():
            continue
        stripped = content.strip()
        if stripped.startswith('['):
            if not stripped.endswith(']'):
                raise ParseError('unterminated section header', number, raw.index('[') + 1)
            section = stripped[1:-1].strip().lower()
            if section not in SECTIONS:
                raise ParseError('unknown section [%s]' % section, number, raw.index('[') + 1)
            continue
        if section == 'relations' or (section == 'grading' and '(' not in content.split('=')[0]):
            if '=' not in content:
                raise ParseError('expected "="', number, len(content.rstrip()) + 1)
            lhs, rhs = content.split('=', 1)
            lines.append(_Line(number, section, section, lhs.strip(), rhs, len(lhs) + 1, raw))
            continue
        m = STATEMENT.match(content)
        if not m:
            raise ParseError('expected a statement of the form "lhs = rhs"', number,
                             len(content) - len(content.lstrip()) + 1)
        if m.group('br'):
            key, arg = 'bracket', (m.group('a'), m.group('b'))
        else:
            key, arg = m.group('key'), m.group('arg')
            if arg is not None:
                arg = arg.strip()
        lines.append(_Line(number, section, key, arg, content[m.end():], m.end(), raw))
    return lines


def _generator_spec(line):
    names = []
    invertible = []
    col = line.offset
    for word in line.rhs.split():
        col = line.text.index(word, col)
        flag = word.endswith('*')
        name = word.rstrip('*')
        if not re.match(r'^[A-Za-z_]\w*$', name):
            raise ParseError('bad generator name %r' % word, line.number, col + 1)
        if name in names:
            raise ParseError('duplicate generator %r' % name, line.number, col + 1)
        names.append(name)
        invertible.append(flag)
        col += len(word)
    if not names:
        raise ParseError('no generators given', line.number, line.offset + 1)
    return names, invertible


def parse_algebra(text, name=None):
    '''
    Parse .alg text into an AlgebraFile. Raises ParseError (with line and
    column) on syntax errors, unknown generators, negative powers of
    non-invertible generators and duplicate assignments.
    '''
    from poissonhopf.hopf import HopfData

    lines = _split_lines(text)
    by_key = {}
    for ln in lines:
        by_key.setdefault(ln.key, []).append(ln)

    gen_lines = by_key.pop('generators', [])
    if len(gen_lines) != 1:
        raise ParseError('exactly one "generators = ..." line is required',
                         gen_lines[1].number if gen_lines else None)
    names, invertible = _generator_spec(gen_lines[0])

    characteristic = 0
    for ln in by_key.pop('characteristic', []):
        try:
            characteristic = int(ln.rhs.strip())
        except ValueError:
            raise ParseError('characteristic must be an integer', ln.number, ln.offset + 1)

    grading = None
    grade_lines = by_key.pop('grading', []) + by_key.pop('deg', [])
    if grade_lines:
        grading = {}
        for ln in grade_lines:
            if ln.arg not in names:
                raise ParseError('unknown generator %r' % ln.arg, ln.number, 1)
            if ln.arg in grading:
                raise ParseError('degree of %s assigned twice' % ln.arg, ln.number, 1)
            try:
                grading[ln.arg] = int(ln.rhs.strip())
            except ValueError:
                raise ParseError('degree must be an integer', ln.number, ln.offset + 1)
        missing = [n for n in names if n not in grading]
        if missing:
            raise ParseError('no degree for %s' % ', '.join(missing), grade_lines[-1].number)
        grading = [grading[n] for n in names]

    free = GeneratorSet(names, invertible, grading, characteristic)
    relations = []
    for ln in by_key.pop('relations', []):
        lead = parse_polynomial(free, ln.arg, ln.number)
        if len(lead.terms) != 1 or list(lead.terms.values())[0] != 1:
            raise ParseError('relation left side must be a monomial', ln.number, 1)
        tail = parse_polynomial(free, ln.rhs, ln.number, ln.offset)
        relations.append((list(lead.terms)[0], tail.terms))
    try:
        ring = GeneratorSet(names, invertible, grading, characteristic, relations) if relations else free
    except PoissonHopfError as e:
        raise ParseError(str(e))

    table = {}
    for ln in by_key.pop('bracket', []):
        a, b = ln.arg
        for n in (a, b):
            if n not in names:
                raise ParseError('unknown generator %r' % n, ln.number, ln.text.index(n) + 1)
        if a == b:
            raise ParseError('{%s,%s} must be 0 by antisymmetry' % (a, b), ln.number, 1)
        key = tuple(sorted((a, b), key=names.index))
        if key in table:
            raise ParseError('bracket {%s,%s} assigned twice' % key, ln.number, 1)
        value = parse_polynomial(ring, ln.rhs, ln.number, ln.offset)
        table[key] = value if (a, b) == key else -value
    algebra = PoissonAlgebra(ring, table)

    delta, counit, antipode = {}, {}, {}
    for key, target, parse in (('Delta', delta, parse_tensor), ('eps', counit, parse_rational),
                               ('S', antipode, parse_polynomial)):
        for ln in by_key.pop(key, []):
            if ln.arg not in names:
                raise ParseError('unknown generator %r in %s(...)' % (ln.arg, key), ln.number, 1)
            if ln.arg in target:
                raise ParseError('%s(%s) assigned twice' % (key, ln.arg), ln.number, 1)
            target[ln.arg] = parse(ring, ln.rhs, ln.number, ln.offset)
    hopf = None
    if delta or counit or antipode:
        for n, flag in zip(names, invertible):
            if not flag and n not in delta:
                raise ParseError('Delta(%s) is not specified' % n)
        hopf = HopfData(algebra, delta, counit, antipode)

    for ln in by_key.get('group', []):
        if ln.section not in ('ore', 'biproduct'):
            raise ParseError('"group = ..." belongs in [ore] or [biproduct]', ln.number, 1)
    ore = _parse_ore(ring, by_key, names)
    biproduct = _parse_biproduct(ring, by_key, names, invertible)

    if by_key:
        ln = sorted((l for ls in by_key.values() for l in ls), key=lambda l: l.number)[0]
        raise ParseError('unknown statement %r' % ln.key, ln.number, 1)
    return AlgebraFile(ring, algebra, hopf, ore, biproduct, name)


def _parse_ore(ring, by_key, names):
    keys = ('name', 'degree', 'group', 'eta', 'alpha', 'delta', 'w')
    lines = []
    for key in keys:
        if key == 'group':
            mine = [ln for ln in by_key.get(key, []) if ln.section == 'ore']
            rest = [ln for ln in by_key.get(key, []) if ln.section != 'ore']
            if rest:
                by_key[key] = rest
            else:
                by_key.pop(key, None)
            lines.extend(mine)
        else:
            lines.extend(by_key.pop(key, []))
    if not lines:
        return None
    ore = {'name': None, 'degree': None, 'group': None, 'eta': {}, 'eta_overrides': {},
           'alpha': None, 'delta': None, 'w': None}
    seen = set()
    for ln in sorted(lines, key=lambda l: l.number):
        tag = (ln.key, ln.arg)
        if tag in seen:
            raise ParseError('%s assigned twice in [ore]' % ln.key, ln.number, 1)
        seen.add(tag)
        rhs = ln.rhs.strip()
        if ln.key == 'name':
            if not re.match(r'^[A-Za-z_]\w*$', rhs) or rhs in names:
                raise ParseError('bad or clashing generator name %r' % rhs, ln.number, ln.offset + 1)
            ore['name'] = rhs
        elif ln.key == 'degree':
            ore['degree'] = int(rhs)
        elif ln.key == 'group':
            if rhs != '1':
                if rhs not in names or not ring.invertible[ring.index(rhs)]:
                    raise ParseError('group must be an invertible generator or 1', ln.number, ln.offset + 1)
                ore['group'] = rhs
        elif ln.key == 'eta':
            mono = parse_polynomial(ring, ln.arg, ln.number)
            if len(mono.terms) != 1 or list(mono.terms.values())[0] != 1:
                raise ParseError('eta(...) takes a monomial', ln.number, 1)
            e = list(mono.terms)[0]
            value = parse_rational(ring, ln.rhs, ln.number, ln.offset)
            if sum(abs(k) for k in e) == 1 and max(e) == 1:
                ore['eta'][ring.names[e.index(1)]] = value
            else:
                ore['eta_overrides'][e] = value
        elif ln.key == 'w':
            ore['w'] = parse_tensor(ring, ln.rhs, ln.number, ln.offset)
        else:
            if ln.arg not in names:
                raise ParseError('unknown generator %r' % ln.arg, ln.number, 1)
            if ore[ln.key] is None:
                ore[ln.key] = {}
            ore[ln.key][ln.arg] = parse_polynomial(ring, ln.rhs, ln.number, ln.offset)
    if ore['name'] is None:
        raise ParseError('[ore] needs "name = <new generator>"', lines[0].number)
    return ore


def _parse_biproduct(ring, by_key, names, invertible):
    lines = by_key.pop('star', [])
    group_lines = []
    if 'group' in by_key:
        group_lines = by_key.pop('group')
    if not lines and not group_lines:
        return None
    group = [n for n, f in zip(names, invertible) if f]
    for ln in group_lines:
        group = ln.rhs.split()
        for n in group:
            if n not in names or not invertible[names.index(n)]:
                raise ParseError('group element %r must be an invertible generator' % n, ln.number, 1)
    star = {}
    for ln in lines:
        parts = [p.strip() for p in (ln.arg or '').split(',')]
        if len(parts) != 2 or parts[0] not in group or parts[1] not in names or parts[1] in group:
            raise ParseError('star(g, y) needs a group element and a generator of R', ln.number, 1)
        if tuple(parts) in star:
            raise ParseError('star(%s, %s) assigned twice' % tuple(parts), ln.number, 1)
        star[tuple(parts)] = parse_polynomial(ring, ln.rhs, ln.number, ln.offset)
    return {'group': group, 'star': star}


# =============================================================================
# Formatting
# =============================================================================
def _raw(ring, terms):
    return join_terms([(c, ring.format_key(e)) for e, c in
                       sorted(terms, key=lambda ec: ring.sort_key(ec[0]), reverse=True)])


def format_algebra(af, comment=None):
    '''Canonical .alg text; parse_algebra(format_algebra(af)) == af.'''
    ring = af.ring
    out = []
    if comment or af.name:
        out.append('# %s' % (comment or af.name))
    out.append('[generators]')
    out.append('generators = %s' % ' '.join(n + ('*' if f else '')
                                           for n, f in zip(ring.names, ring.invertible)))
    if ring.characteristic:
        out.append('characteristic = %d' % ring.characteristic)
    if ring.grading:
        out.append('[grading]')
        out.extend('%s = %d' % (n, d) for n, d in zip(ring.names, ring.grading))
    if ring.relations:
        out.append('[relations]')
        for lead, tail in ring.relations:
            out.append('%s = %s' % (ring.format_key(lead), _raw(ring, tail)))
    out.append('[bracket]')
    for (i, j), value in sorted(af.algebra.table.items()):
        out.append('{%s,%s} = %s' % (ring.names[i], ring.names[j], value))
    if af.hopf is not None:
        h = af.hopf
        out.append('[coalgebra]')
        for i, n in enumerate(ring.names):
            out.append('Delta(%s) = %s' % (n, h.delta[i]))
        for i, n in enumerate(ring.names):
            out.append('eps(%s) = %s' % (n, h.counit[i]))
        for i, n in enumerate(ring.names):
            out.append('S(%s) = %s' % (n, h.antipode[i]))
    if af.ore is not None:
        o = af.ore
        out.append('[ore]')
        out.append('name = %s' % o['name'])
        if o['degree'] is not None:
            out.append('degree = %d' % o['degree'])
        out.append('group = %s' % (o['group'] or '1'))
        for n, v in sorted(o['eta'].items(), key=lambda nv: ring.index(nv[0])):
            out.append('eta(%s) = %s' % (n, v))
        for e, v in sorted(o['eta_overrides'].items()):
            out.append('eta(%s) = %s' % (ring.format_key(e), v))
        for key in ('alpha', 'delta'):
            for n, v in sorted((o[key] or {}).items(), key=lambda nv: ring.index(nv[0])):
                out.append('%s(%s) = %s' % (key, n, v))
        if o['w'] is not None:
            out.append('w = %s' % o['w'])
    if af.biproduct is not None:
        b = af.biproduct
        out.append('[biproduct]')
        out.append('group = %s' % ' '.join(b['group']))
        for (g, y), v in sorted(b['star'].items()):
            out.append('star(%s, %s) = %s' % (g, y, v))
    return '\n'.join(out) + '\n'


def read_algebra(path):
    with open(path, 'r', encoding='utf-8') as f:
        text = f.read()
    import os
    return parse_algebra(text, os.path.splitext(os.path.basename(path))[0])
