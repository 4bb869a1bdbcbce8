#!/usr/bin/env python
'''
tensor

n-fold tensor products of leg algebras. A TensorElement is a finite sum
of pure tensors of basis keys; multiplication is componentwise,
(a@b)(c@d) = ac@bd. Sweedler expansions (Delta(x) = x_1@x_2) and every
tensor valued structure map live here.
'''

# =============================================================================
# Standard Python modules
# =============================================================================
from fractions import Fraction
from numbers import Rational

# =============================================================================
# Extension modules
# =============================================================================
from poissonhopf.errors import RingMismatchError, DomainError
from poissonhopf.space import Element, join_terms


class TensorElement(object):

    '''
    Element of spaces[0] @ ... @ spaces[n-1].

    **Arguments:**

    - spaces -> TUPLE: leg algebras (Space instances)
    - terms -> DICT: tuple of basis keys (one per leg) -> coefficient
    '''

    __slots__ = ('spaces', 'terms')

    def __init__(self, spaces, terms=None):
        self.spaces = tuple(spaces)
        coerce = self.spaces[0].coerce if self.spaces else Fraction
        out = {}
        for keys, c in (terms or {}).items():
            c = coerce(c)
            if c:
                out[tuple(keys)] = c
        self.terms = out

    # -- construction --------------------------------------------------------
    @classmethod
    def pure(cls, *elements):
        '''a_1 @ ... @ a_n from leg elements.'''
        return tensor(*elements)

    @classmethod
    def unit(cls, spaces):
        return cls(spaces, {tuple(s.one_key() for s in spaces): 1})

    @classmethod
    def scalar(cls, c):
        return cls((), {(): c})

    @property
    def nlegs(self):
        return len(self.spaces)

    def _check(self, other):
        if self.spaces != other.spaces:
            raise RingMismatchError('tensor legs differ: %s vs %s' % (self.spaces, other.spaces))

    # -- linear structure ----------------------------------------------------
    def _lift(self, other):
        if isinstance(other, TensorElement):
            self._check(other)
            return other
        if isinstance(other, (int, Rational)):
            return TensorElement.unit(self.spaces).scale(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return TensorElement(self.spaces, terms)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        return TensorElement(self.spaces, dict((k, v * c) for k, v in self.terms.items()))

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check(other)
        out = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                legs = [s.basis_mul(a, b) for s, a, b in zip(self.spaces, ka, kb)]
                for keys, c in _product(legs):
                    out[keys] = out.get(keys, 0) + ca * cb * c
        return TensorElement(self.spaces, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = TensorElement.unit(self.spaces)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, TensorElement):
            return self.spaces == other.spaces and self.terms == other.terms
        if isinstance(other, (int, Rational)):
            return self.terms == TensorElement.unit(self.spaces).scale(other).terms
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- leg operations ------------------------------------------------------
    def leg_element(self, i, key):
        return self.spaces[i].element({key: 1})

    def items(self):
        '''(leg elements, coefficient) pairs: the Sweedler summands.'''
        for keys, c in self.sorted_terms():
            yield [self.leg_element(i, k) for i, k in enumerate(keys)], c

    def map_legs(self, funcs, spaces=None):
        '''
        Apply funcs[i] to leg i of every summand and tensor the results.
        Each func takes a basis element and returns an Element, a
        TensorElement or a scalar; results are cached per basis key.
        '''
        cache = [dict() for _ in funcs]
        total = None
        for keys, c in self.terms.items():
            pieces = []
            for i, k in enumerate(keys):
                if k not in cache[i]:
                    cache[i][k] = as_tensor(funcs[i](self.leg_element(i, k)))
                pieces.append(cache[i][k])
            t = tensor(*pieces).scale(c)
            total = t if total is None else total + t
        if total is None:
            if spaces is None:
                raise DomainError('map_legs of zero needs the target spaces')
            return TensorElement(spaces)
        return total

    def apply(self, i, func):
        '''Apply func to leg i only.'''
        funcs = [_identity] * self.nlegs
        funcs[i] = func
        return self.map_legs(funcs)

    def permute(self, order):
        return TensorElement([self.spaces[i] for i in order],
                             dict((tuple(k[i] for i in order), c) for k, c in self.terms.items()))

    def flip(self):
        return self.permute(list(reversed(range(self.nlegs))))

    def contract(self):
        '''Multiply all legs (which must share one algebra) together.'''
        space = self.spaces[0]
        if any(s != space for s in self.spaces):
            raise RingMismatchError('cannot multiply legs of different algebras')
        total = space.zero()
        for legs, c in self.items():
            prod = legs[0]
            for leg in legs[1:]:
                prod = prod * leg
            total = total + prod.scale(c)
        return total

    def inverse(self):
        '''Inverse of a pure tensor of units.'''
        if len(self.terms) != 1:
            raise DomainError('only pure tensors of units are invertible')
        legs, c = next(self.items())
        return tensor(*[leg.inverse() for leg in legs]).scale(1 / Fraction(c))

    # -- printing ------------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda kc: tuple(s.sort_key(k) for s, k in zip(self.spaces, kc[0])),
                      reverse=True)

    def __str__(self):
        pieces = []
        for keys, c in self.sorted_terms():
            legs = [s.format_key(k) or '1' for s, k in zip(self.spaces, keys)]
            pieces.append((c, '@'.join(legs)))
        return join_terms(pieces)

    def __repr__(self):
        return 'TensorElement{%s}' % self


def _identity(x):
    return x


def _product(legs):
    '''Cartesian product of per-leg {key: coeff} dicts.'''
    combos = [((), Fraction(1))]
    for leg in legs:
        combos = [(keys + (k,), c * v) for keys, c in combos for k, v in leg.items()]
    return combos


def as_tensor(x):
    if isinstance(x, TensorElement):
        return x
    if isinstance(x, Element):
        return TensorElement((x.space,), dict(((k,), c) for k, c in x.terms.items()))
    return TensorElement.scalar(x)


def tensor(*factors):
    '''Tensor product of Elements, TensorElements and scalars.'''
    result = TensorElement.scalar(1)
    for f in factors:
        f = as_tensor(f)
        out = {}
        for ka, ca in result.terms.items():
            for kb, cb in f.terms.items():
                out[ka + kb] = ca * cb
        result = TensorElement(result.spaces + f.spaces, out)
    return result


def tensor_mul(u, v):
    '''Componentwise product (a@b)(c@d) = ac@bd.'''
    return u * v
