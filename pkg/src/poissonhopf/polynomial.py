#!/usr/bin/env python
'''
polynomial

Exact Laurent polynomials over a fixed, ordered set of generators. Some
generators may be flagged invertible (group-likes g^{+-1}); an optional
list of rewrite rules turns the ring into a quotient ring given by a
Groebner basis (used for O(SL2) and the restricted examples).

Monomials are exponent tuples, ordered degree-lexicographically by
generator index; this order is the tie-break for every normal form of
the package.
'''

# =============================================================================
# Standard Python modules
# =============================================================================
import logging
import random
from fractions import Fraction

# =============================================================================
# Extension modules
# =============================================================================
from poissonhopf.errors import DomainError, RingMismatchError, StructureError
from poissonhopf.space import Space, Element

log = logging.getLogger(__name__)


def format_monomial(names, e):
    pieces = []
    for name, k in zip(names, e):
        if k == 1:
            pieces.append(name)
        elif k != 0:
            pieces.append('%s^%d' % (name, k))
    return '*'.join(pieces)


def divides(lead, e):
    return all(a <= b for a, b in zip(lead, e))


def compositions(n, total):
    '''Exponent vectors of length n with entries >= 0 summing to total.'''
    if n == 0:
        return [()] if total == 0 else []
    out = []
    for k in range(total + 1):
        for rest in compositions(n - 1, total - k):
            out.append((k,) + rest)
    return out


# =============================================================================
# GeneratorSet Class
# =============================================================================
class GeneratorSet(Space):

    '''
    Ordered generators of a commutative (Laurent) polynomial ring.

    **Arguments:**

    - names -> LIST: generator names, in the global tie-break order
    - invertible -> LIST: per-generator flag; flagged generators take negative exponents
    - grading -> LIST: optional positive integer degree per generator
    - characteristic -> INT: 0, or a prime p for coefficients in GF(p)
    - relations -> LIST: pairs (lead exponent tuple, {exponent tuple: coefficient})
      read as the rewrite rule lead -> tail; every tail monomial must be
      smaller than its lead
    '''

    def __init__(self, names, invertible=None, grading=None, characteristic=0, relations=()):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise StructureError('generator names must be unique: %s' % ' '.join(names))
        if not names:
            raise StructureError('at least one generator is needed')
        self.names = names
        self.invertible = tuple(bool(f) for f in (invertible or [False] * len(names)))
        if len(self.invertible) != len(names):
            raise StructureError('one invertibility flag per generator is needed')
        if grading is not None:
            grading = tuple(int(d) for d in grading)
            if len(grading) != len(names) or any(d <= 0 for d in grading):
                raise StructureError('grading must give a positive degree to every generator')
        self.grading = grading
        self.characteristic = int(characteristic or 0)
        rules = []
        for lead, tail in relations:
            lead = tuple(lead)
            if any(k < 0 for k in lead) or not any(lead):
                raise StructureError('relation lead %s is not a proper monomial'
                                     % format_monomial(names, lead))
            tail = dict((tuple(e), self.coerce(c)) for e, c in dict(tail).items())
            for e in tail:
                if self.sort_key(e) >= self.sort_key(lead):
                    raise StructureError('relation %s: tail monomial %s is not smaller than the lead'
                                         % (format_monomial(names, lead), format_monomial(names, e) or '1'))
            rules.append((lead, tuple(sorted((e, c) for e, c in tail.items() if c))))
        self.relations = tuple(rules)
        self._index = dict((n, i) for i, n in enumerate(names))

    # -- Space interface -----------------------------------------------------
    element_class = None    # set to LaurentPoly below

    def one_key(self):
        return (0,) * len(self.names)

    def sort_key(self, e):
        return (sum(e), e)

    def format_key(self, e):
        return format_monomial(self.names, e)

    def basis_mul(self, a, b):
        e = tuple(x + y for x, y in zip(a, b))
        if not self.relations:
            return {e: 1}
        return self.reduce_terms({e: Fraction(1)})

    def reduce_terms(self, terms):
        '''Rewrite with the relation rules until no lead divides a monomial.'''
        if not self.relations:
            return terms
        work = dict(terms)
        done = {}
        while work:
            e = max(work, key=self.sort_key)
            c = work.pop(e)
            if not c:
                continue
            for lead, tail in self.relations:
                if divides(lead, e):
                    shift = tuple(x - y for x, y in zip(e, lead))
                    for t, tc in tail:
                        key = tuple(x + y for x, y in zip(t, shift))
                        work[key] = work.get(key, 0) + c * tc
                    break
            else:
                done[e] = done.get(e, 0) + c
        return done

    def canonical(self, terms):
        return Space.canonical(self, self.reduce_terms(terms))

    # -- ring data -----------------------------------------------------------
    def _signature(self):
        return (self.names, self.invertible, self.grading, self.characteristic, self.relations)

    def __eq__(self, other):
        return isinstance(other, GeneratorSet) and self._signature() == other._signature()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._signature())

    def __repr__(self):
        return 'GeneratorSet(%s)' % ' '.join(n + ('*' if f else '')
                                             for n, f in zip(self.names, self.invertible))

    __str__ = __repr__

    def __len__(self):
        return len(self.names)

    @property
    def ngens(self):
        return len(self.names)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise RingMismatchError('unknown generator %r (known: %s)' % (name, ', '.join(self.names)))

    def unit_vector(self, i, k=1):
        e = [0] * len(self.names)
        e[i] = k
        return tuple(e)

    def monomial(self, e, c=1):
        e = tuple(e)
        for k, flag, name in zip(e, self.invertible, self.names):
            if k < 0 and not flag:
                raise DomainError('negative power of non-invertible generator %s' % name)
        return self.element({e: c})

    def gen(self, which):
        i = which if isinstance(which, int) else self.index(which)
        return self.monomial(self.unit_vector(i))

    def gens(self):
        return [self.gen(i) for i in range(len(self.names))]

    def inverse_gen(self, i):
        if not self.invertible[i]:
            raise DomainError('generator %s is not invertible' % self.names[i])
        return self.monomial(self.unit_vector(i, -1))

    def key_degree(self, e):
        weights = self.grading or (1,) * len(e)
        return sum(w * k for w, k in zip(weights, e))

    def is_graded(self):
        return self.grading is not None

    def has_relations(self):
        return bool(self.relations)

    def monomials_of_degree(self, d):
        '''Non-negative monomials of weighted degree d (ignores relations).'''
        weights = self.grading or (1,) * len(self.names)
        out = []

        def walk(i, left, acc):
            if i == len(weights):
                if left == 0:
                    out.append(tuple(acc))
                return
            for k in range(left // weights[i] + 1):
                walk(i + 1, left - k * weights[i], acc + [k])
        walk(0, d, [])
        out = [e for e in out if not any(divides(lead, e) for lead, _ in self.relations)]
        return sorted(out, key=self.sort_key)

    def extended(self, name, invertible=False, degree=None):
        '''A new GeneratorSet with one more generator appended.'''
        grading = None
        if self.grading is not None:
            if degree is None:
                raise StructureError('graded ring needs a degree for new generator %s' % name)
            grading = self.grading + (degree,)
        rels = [(lead + (0,), dict((t + (0,), c) for t, c in tail)) for lead, tail in self.relations]
        return GeneratorSet(self.names + (name,), self.invertible + (bool(invertible),),
                            grading, self.characteristic, rels)

    def permuted(self, order):
        '''Same ring with generators listed in a new order (list of names).'''
        idx = [self.index(n) for n in order]
        grading = None if self.grading is None else [self.grading[i] for i in idx]
        rels = [(tuple(lead[i] for i in idx), dict((tuple(t[i] for i in idx), c) for t, c in tail))
                for lead, tail in self.relations]
        return GeneratorSet(order, [self.invertible[i] for i in idx], grading,
                            self.characteristic, rels)

    def embed(self, p):
        '''Move a polynomial of a ring whose generators are a subset of ours.'''
        if p.space == self:
            return p
        src = p.space
        pos = [self.index(n) for n in src.names]
        terms = {}
        for e, c in p.terms.items():
            key = [0] * len(self.names)
            for i, k in zip(pos, e):
                key[i] = k
            terms[tuple(key)] = c
        return self.element(terms)


# =============================================================================
# LaurentPoly Class
# =============================================================================
class LaurentPoly(Element):

    '''Element of a GeneratorSet ring; keys are exponent tuples.'''

    __slots__ = ()

    @property
    def ring(self):
        return self.space

    def monomials(self):
        return self.sorted_terms()

    def derivative(self, k):
        '''Partial derivative with respect to generator k.'''
        terms = {}
        for e, c in self.terms.items():
            if e[k]:
                key = e[:k] + (e[k] - 1,) + e[k + 1:]
                terms[key] = terms.get(key, 0) + c * e[k]
        return LaurentPoly(self.space, terms)

    def is_unit(self):
        if len(self.terms) != 1:
            return False
        (e, c), = self.terms.items()
        return all(k == 0 or flag for k, flag in zip(e, self.space.invertible))

    def inverse(self):
        if not self.is_unit():
            raise DomainError('%s is not a unit' % self)
        (e, c), = self.terms.items()
        return LaurentPoly(self.space, {tuple(-k for k in e): 1 / Fraction(c)})

    def __pow__(self, n):
        if n < 0:
            if not self.is_unit():
                raise DomainError('negative power of non-unit %s' % self)
            return Element.__pow__(self.inverse(), -n)
        if len(self.terms) == 1 and not self.space.relations:
            (e, c), = self.terms.items()
            return LaurentPoly(self.space, {tuple(k * n for k in e): c ** n})
        return Element.__pow__(self, n)

    def __truediv__(self, other):
        if isinstance(other, LaurentPoly):
            return self * other.inverse()
        return self.scale(1 / Fraction(other))

    def degree(self):
        '''Largest weighted degree of a term; None for zero.'''
        if not self.terms:
            return None
        return max(self.space.key_degree(e) for e in self.terms)

    def homogeneous_degree(self):
        '''Weighted degree when every term shares it, else None.'''
        degrees = set(self.space.key_degree(e) for e in self.terms)
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def evaluate(self, images, inverses=None, one=None):
        return evaluate_terms(self.terms, images, inverses, one)

    def constant(self):
        return self.scalar_part()


GeneratorSet.element_class = LaurentPoly


def evaluate_terms(terms, images, inverses=None, one=None):
    '''
    Algebra-map extension: substitute images[i] for generator i (and
    inverses[i] for its inverse) in a term dict. Images may be any
    algebra elements supporting +, * and scale.
    '''
    if one is None:
        one = images[0] * 0 + 1 if images else Fraction(1)
    powers = {}

    def power(i, k):
        key = (i, k)
        if key not in powers:
            if k > 0:
                base = images[i]
            else:
                if inverses is None or inverses[i] is None:
                    raise DomainError('no inverse available for generator %d' % i)
                base = inverses[i]
            acc = base
            for _ in range(abs(k) - 1):
                acc = acc * base
            powers[key] = acc
        return powers[key]

    total = None
    for e, c in terms.items():
        m = None
        for i, k in enumerate(e):
            if k:
                p = power(i, k)
                m = p if m is None else m * p
        if m is None:
            m = one
        m = m.scale(c) if hasattr(m, 'scale') else m * c
        total = m if total is None else total + m
    if total is None:
        total = one.scale(0) if hasattr(one, 'scale') else one * 0
    return total


def random_poly(ring, rng=None, max_degree=2, nterms=3, coeff_range=3):
    '''Random element with small integer coefficients (seeded through rng).'''
    rng = rng or random.Random(0)
    terms = {}
    n = len(ring.names)
    for _ in range(nterms):
        e = [0] * n
        for _ in range(rng.randint(0, max_degree)):
            i = rng.randrange(n)
            if ring.invertible[i] and rng.random() < 0.4:
                e[i] -= 1
            else:
                e[i] += 1
        c = rng.randint(-coeff_range, coeff_range)
        key = tuple(e)
        terms[key] = terms.get(key, 0) + c
    return ring.element(terms)
