#!/usr/bin/env python
'''
space

Leg algebras and the linear element type every algebra of the package
builds on. A Space knows how to multiply two basis keys; an Element is a
finite linear combination of basis keys with exact coefficients.
'''

# =============================================================================
# Standard Python modules
# =============================================================================
import abc
from fractions import Fraction
from numbers import Rational

# =============================================================================
# Extension modules
# =============================================================================
from poissonhopf.errors import RingMismatchError, DomainError


def format_rational(c):
    return str(Fraction(c))


def join_terms(pieces):
    '''Join (coefficient, basis string) pairs into "a - 2*b + c".'''
    out = ''
    for c, basis in pieces:
        negative = c < 0
        mag = -c if negative else c
        if basis == '':
            text = format_rational(mag)
        elif mag == 1:
            text = basis
        else:
            text = '%s*%s' % (format_rational(mag), basis)
        if not out:
            out = ('-' + text) if negative else text
        else:
            out += (' - ' if negative else ' + ') + text
    return out or '0'


# =============================================================================
# Space Class
# =============================================================================
class Space(abc.ABC):

    '''
    Abstract algebra with a distinguished basis.

    Subclasses supply the product of two basis keys as a dict
    key -> coefficient, the unit key and a printable form of a key.
    '''

    characteristic = 0
    element_class = None

    @abc.abstractmethod
    def basis_mul(self, a, b):
        '''Product of two basis keys as a dict of key -> coefficient.'''

    @abc.abstractmethod
    def one_key(self):
        pass

    @abc.abstractmethod
    def format_key(self, key):
        '''Printable basis element; the unit key prints as "".'''

    def sort_key(self, key):
        return key

    def coerce(self, c):
        c = Fraction(c)
        p = self.characteristic
        if p:
            if c.denominator % p == 0:
                raise DomainError('division by %d in characteristic %d' % (c.denominator, p))
            return Fraction((c.numerator * pow(c.denominator, -1, p)) % p)
        return c

    def canonical(self, terms):
        out = {}
        for key, c in terms.items():
            c = self.coerce(c)
            if c:
                out[key] = c
        return out

    def element(self, terms=None):
        cls = self.element_class or Element
        return cls(self, terms)

    def one(self):
        return self.element({self.one_key(): 1})

    def zero(self):
        return self.element({})

    def scalar(self, c):
        return self.element({self.one_key(): c})

    def mul_terms(self, left, right):
        '''Bilinear product of two term dicts.'''
        out = {}
        for a, ca in left.items():
            for b, cb in right.items():
                for key, c in self.basis_mul(a, b).items():
                    out[key] = out.get(key, 0) + ca * cb * c
        return out


# =============================================================================
# Element Class
# =============================================================================
class Element(object):

    '''
    Immutable finite linear combination of basis keys of a Space.

    **Arguments:**

    - space -> Space: the algebra the element lives in
    - terms -> DICT: basis key -> coefficient (canonicalized on construction)
    '''

    __slots__ = ('space', 'terms', '_hash')

    def __init__(self, space, terms=None):
        self.space = space
        self.terms = space.canonical(terms or {})
        self._hash = None

    def _same(self, other):
        if other.space is not self.space and other.space != self.space:
            raise RingMismatchError('operands live in different algebras: %s and %s'
                                    % (self.space, other.space))

    def _lift(self, other):
        if isinstance(other, Element):
            self._same(other)
            return other
        if isinstance(other, (int, Rational)):
            return self.space.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c
        return type(self)(self.space, terms)

    __radd__ = __add__

    def __neg__(self):
        return type(self)(self.space, dict((k, -c) for k, c in self.terms.items()))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        return type(self)(self.space, dict((k, v * c) for k, v in self.terms.items()))

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        self._same(other)
        return type(self)(self.space, self.space.mul_terms(self.terms, other.terms))

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if n < 0:
            raise DomainError('negative power of a general element')
        result = self.space.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.space == other.space and self.terms == other.terms
        if isinstance(other, (int, Rational)):
            return self.terms == self.space.scalar(other).terms
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_scalar(self):
        return not self.terms or set(self.terms) == set([self.space.one_key()])

    def scalar_part(self):
        return self.terms.get(self.space.one_key(), Fraction(0))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kc: self.space.sort_key(kc[0]),
                      reverse=True)

    def __str__(self):
        return join_terms([(c, self.space.format_key(k)) for k, c in self.sorted_terms()])

    def __repr__(self):
        return '%s{%s}' % (type(self).__name__, self)
