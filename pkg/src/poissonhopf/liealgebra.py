#!/usr/bin/env python
'''
liealgebra

The Lie algebra a = m/m^2 of a Poisson Hopf algebra B (m the augmentation
ideal) and its enveloping algebra U(a), which is the Hopf algebra
H(B) = B^e/B^eB^+ in characteristic 0.

Basis element y_k of a is the class of x_k - eps(x_k); for a group-like g
that is the class of g - 1. The structure constants are the linear part
of the bracket at the counit,

    [y_i, y_j] = sum_k eps(d_k {x_i, x_j}) y_k
'''

# =============================================================================
# Standard Python modules
# =============================================================================
import itertools
import logging
from fractions import Fraction

# =============================================================================
# Extension modules
# =============================================================================
from poissonhopf.errors import NotSupportedError, StructureError
from poissonhopf.polynomial import compositions
from poissonhopf.space import Space, Element, join_terms
from poissonhopf.tensor import TensorElement, tensor

log = logging.getLogger(__name__)


def _add(terms, key, c):
    v = terms.get(key, 0) + c
    if v:
        terms[key] = v
    else:
        terms.pop(key, None)


# =============================================================================
# LieAlgebraA Class
# =============================================================================
class LieAlgebraA(object):

    '''
    Finite dimensional Lie algebra given by structure constants.

    **Arguments:**

    - names -> LIST: basis names (y1, ..., yl)
    - constants -> DICT: (i, j) with i < j -> {k: c}, [y_i, y_j] = sum c y_k
    - labels -> LIST: generator of B each basis element comes from
    '''

    def __init__(self, names, constants=None, labels=None):
        self.names = list(names)
        self.labels = list(labels or names)
        self.constants = {}
        for (i, j), value in (constants or {}).items():
            value = dict((k, Fraction(c)) for k, c in value.items() if c)
            if i == j:
                if value:
                    raise StructureError('[%s,%s] must vanish' % (self.names[i], self.names[i]))
                continue
            if i > j:
                i, j = j, i
                value = dict((k, -c) for k, c in value.items())
            if value:
                self.constants[(i, j)] = value

    @property
    def dimension(self):
        return len(self.names)

    def __repr__(self):
        return 'LieAlgebraA(%s)' % ', '.join(self.names)

    def __eq__(self, other):
        return isinstance(other, LieAlgebraA) and self.names == other.names \
            and self.constants == other.constants

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def is_abelian(self):
        return not self.constants

    def bracket_basis(self, i, j):
        '''[y_i, y_j] as {k: c}.'''
        if i < j:
            return self.constants.get((i, j), {})
        if i > j:
            return dict((k, -c) for k, c in self.constants.get((j, i), {}).items())
        return {}

    def bracket(self, u, v):
        '''Bracket of vectors given as {k: c}.'''
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.bracket_basis(i, j).items():
                    _add(out, k, a * b * c)
        return out

    def jacobi_residuals(self):
        '''Nonzero cyclic sums [[y_i,y_j],y_k] + ... over i < j < k.'''
        out = []
        n = self.dimension
        for i, j, k in itertools.combinations(range(n), 3):
            yi, yj, yk = {i: 1}, {j: 1}, {k: 1}
            total = {}
            for a, b, c in ((yi, yj, yk), (yj, yk, yi), (yk, yi, yj)):
                for key, value in self.bracket(self.bracket(a, b), c).items():
                    _add(total, key, value)
            if total:
                out.append(((i, j, k), total))
        return out

    def format_vector(self, v):
        pieces = [(c, self.names[k]) for k, c in sorted(v.items())]
        return join_terms(pieces)

    def table(self):
        '''Printable nonzero brackets "[y3,y1] = y1 + y2", larger index first.'''
        lines = []
        for (i, j) in sorted(self.constants, key=lambda ij: (ij[1], ij[0])):
            v = self.bracket_basis(j, i)
            lines.append('[%s,%s] = %s' % (self.names[j], self.names[i], self.format_vector(v)))
        return lines


def lie_on_a(B):
    '''
    Structure constants of a = m/m^2 from a Poisson Hopf algebra B
    (a HopfData). Raises StructureError when the linear part of the
    bracket violates Jacobi, which only happens for input that is not
    Poisson Hopf.
    '''
    ring = B.ring
    if ring.characteristic:
        raise NotSupportedError('H(B) is only built in characteristic 0')
    if ring.has_relations():
        raise NotSupportedError('H(B) is only built over rings without relations')
    A = B.algebra
    n = ring.ngens
    constants = {}
    for i, j in itertools.combinations(range(n), 2):
        br = A.gen_bracket(i, j)
        value = {}
        for k in range(n):
            c = B.counit_of(br.derivative(k))
            if c:
                value[k] = c
        if value:
            constants[(i, j)] = value
    lie = LieAlgebraA(['y%d' % (k + 1) for k in range(n)], constants, ring.names)
    bad = lie.jacobi_residuals()
    if bad:
        (i, j, k), total = bad[0]
        raise StructureError('linear part of the bracket violates Jacobi on (%s,%s,%s): %s'
                             % (ring.names[i], ring.names[j], ring.names[k], lie.format_vector(total)))
    log.debug('Lie algebra of %s: %s', ring, '; '.join(lie.table()) or 'abelian')
    return lie


# =============================================================================
# U(a) Class
# =============================================================================
class HElement(Element):

    '''Element of U(a) = H(B); keys are PBW exponent tuples.'''

    __slots__ = ()

    def degree(self):
        return max([sum(I) for I in self.terms] or [0])


class HAlgebra(Space):

    '''
    Enveloping algebra U(a) with PBW basis y_1^i_1 ... y_l^i_l, primitive
    coproduct, counit and antipode.

    **Arguments:**

    - lie -> LieAlgebraA
    '''

    element_class = HElement

    def __init__(self, lie):
        self.lie = lie
        self.n = lie.dimension
        self.zero_key = (0,) * self.n
        self._yy_cache = {}
        self._mul_cache = {}
        self._delta_cache = {}

    def __repr__(self):
        return 'U(%s)' % ', '.join(self.lie.names)

    def one_key(self):
        return self.zero_key

    def sort_key(self, key):
        return (sum(key), key)

    def format_key(self, key):
        pieces = []
        for name, j in zip(self.lie.names, key):
            if j == 1:
                pieces.append(name)
            elif j:
                pieces.append('%s^%d' % (name, j))
        return '*'.join(pieces)

    def basis_mul(self, a, b):
        key = (a, b)
        cached = self._mul_cache.get(key)
        if cached is None:
            terms = {b: Fraction(1)}
            for k in reversed(range(self.n)):
                for _ in range(a[k]):
                    terms = self._lmul_y(k, terms)
            cached = terms
            self._mul_cache[key] = cached
        return cached

    def _lmul_y(self, k, terms):
        out = {}
        for J, c in terms.items():
            for K, d in self._yy(k, J).items():
                _add(out, K, c * d)
        return out

    def _yy(self, k, J):
        '''Normal form of y_k y^J.'''
        key = (k, J)
        cached = self._yy_cache.get(key)
        if cached is not None:
            return cached
        first = next((i for i, j in enumerate(J) if j), None)
        if first is None or first >= k:
            K = list(J)
            K[k] += 1
            result = {tuple(K): Fraction(1)}
        else:
            rest = list(J)
            rest[first] -= 1
            rest = tuple(rest)
            result = self._lmul_y(first, self._yy(k, rest))
            for p, c in self.lie.bracket_basis(k, first).items():
                for K, d in self._yy(p, rest).items():
                    _add(result, K, c * d)
        self._yy_cache[key] = result
        return result

    # -- elements ------------------------------------------------------------
    def y(self, k):
        key = list(self.zero_key)
        key[k] = 1
        return HElement(self, {tuple(key): 1})

    def monomial(self, I):
        return HElement(self, {tuple(I): 1})

    def from_vector(self, v):
        '''Degree one element sum c y_k from {k: c}.'''
        total = self.zero()
        for k, c in v.items():
            total = total + self.y(k).scale(c)
        return total

    def to_vector(self, u):
        '''Inverse of from_vector on the degree one part.'''
        out = {}
        for I, c in u.terms.items():
            if sum(I) == 1:
                out[I.index(1)] = c
        return out

    def commutator(self, u, v):
        return u * v - v * u

    def monomials_up_to(self, degree):
        out = []
        for d in range(degree + 1):
            out.extend(compositions(self.n, d))
        return out

    # -- Hopf structure ------------------------------------------------------
    def delta_key(self, I):
        cached = self._delta_cache.get(I)
        if cached is None:
            spaces = (self, self)
            cached = TensorElement.unit(spaces)
            for k in range(self.n):
                yk = self.y(k)
                prim = tensor(yk, self.one()) + tensor(self.one(), yk)
                for _ in range(I[k]):
                    cached = cached * prim
            self._delta_cache[I] = cached
        return cached

    def delta(self, u):
        total = TensorElement((self, self))
        for I, c in u.terms.items():
            total = total + self.delta_key(I).scale(c)
        return total

    def counit(self, u):
        return u.scalar_part()

    def antipode(self, u):
        '''S(y^I) = (-1)^|I| y_l^i_l ... y_1^i_1.'''
        total = self.zero()
        for I, c in u.terms.items():
            v = self.one()
            for k in reversed(range(self.n)):
                for _ in range(I[k]):
                    v = v * self.y(k)
            total = total + v.scale(c * (-1) ** sum(I))
        return total
