#!/usr/bin/env python
'''
cohomology

The Poisson cochain complex X^s(A) = Hom_A(Omega^s, A) of alternating
multiderivations with coboundary

    dQ(f_0..f_s) = sum_i (-1)^i {f_i, Q(..^i..)}
                 + sum_{i<j} (-1)^{i+j} Q({f_i, f_j}, ..^i..^j..)

its degreewise dimensions HP^s_w for graded polynomial algebras, and the
differential b of the chain complex C_n = A^e @_A Omega^n.

A multiderivation is stored by its values on dx_I, I increasing; both
differentials are evaluated on generator differentials only.
'''

# =============================================================================
# Standard Python modules
# =============================================================================
import itertools
import logging
import random
from concurrent.futures import ThreadPoolExecutor

# =============================================================================
# Extension modules
# =============================================================================
from poissonhopf import linalg
from poissonhopf.errors import NotSupportedError, RingMismatchError
from poissonhopf.polynomial import random_poly
from poissonhopf.report import Check, Report
from poissonhopf.space import join_terms
from poissonhopf.uea import UEA

log = logging.getLogger(__name__)


def _insert(m, rest):
    '''dx_m ^ dx_rest as (sign, sorted indices); sign 0 when m repeats.'''
    if m in rest:
        return 0, None
    pos = sum(1 for i in rest if i < m)
    return (-1) ** pos, tuple(sorted(rest + (m,)))


def _wedge_name(names, I):
    if not I:
        return '1'
    return '^'.join('d%s' % names[i] for i in I)


# =============================================================================
# MultiDerivation Class
# =============================================================================
class MultiDerivation(object):

    '''
    Alternating s-derivation of A with values in A.

    **Arguments:**

    - ring -> GeneratorSet
    - arity -> INT: s
    - components -> DICT: increasing index tuple I (length s) -> LaurentPoly,
      the value Q(dx_I); missing tuples are 0
    '''

    def __init__(self, ring, arity, components=None):
        self.ring = ring
        self.arity = arity
        self.components = {}
        for I, value in (components or {}).items():
            I = tuple(I)
            if len(I) != arity:
                raise ValueError('component %r does not have arity %d' % (I, arity))
            if list(I) != sorted(set(I)):
                raise ValueError('component indices %r must be strictly increasing' % (I,))
            if value.space != ring:
                raise RingMismatchError('component values must live in %s' % ring)
            if value:
                self.components[I] = value

    @classmethod
    def function(cls, f):
        '''A 0-cochain, an element of A.'''
        return cls(f.space, 0, {(): f})

    def __repr__(self):
        return 'MultiDerivation(arity=%d, %d components)' % (self.arity, len(self.components))

    def __str__(self):
        if not self.components:
            return '0'
        names = self.ring.names
        return ', '.join('%s: %s' % (_wedge_name(names, I), v) for I, v in sorted(self.components.items()))

    def __eq__(self, other):
        return isinstance(other, MultiDerivation) and self.arity == other.arity \
            and self.components == other.components

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def __bool__(self):
        return bool(self.components)

    def __add__(self, other):
        if self.arity != other.arity:
            raise ValueError('cannot add cochains of arity %d and %d' % (self.arity, other.arity))
        out = dict(self.components)
        for I, v in other.components.items():
            out[I] = out[I] + v if I in out else v
        return MultiDerivation(self.ring, self.arity, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return MultiDerivation(self.ring, self.arity, dict((I, v.scale(c)) for I, v in self.components.items()))

    def __call__(self, I):
        '''Value on generator differentials dx_I for any index tuple.'''
        I = tuple(I)
        if len(set(I)) < len(I):
            return self.ring.zero()
        order = sorted(range(len(I)), key=lambda k: I[k])
        sign = _perm_sign(order)
        value = self.components.get(tuple(sorted(I)))
        if value is None:
            return self.ring.zero()
        return value.scale(sign)

    def evaluate(self, *fs):
        '''Q(df_1, ..., df_s) by multilinearity over A.'''
        if len(fs) != self.arity:
            raise ValueError('expected %d arguments' % self.arity)
        if not self.arity:
            return self.components.get((), self.ring.zero())
        n = self.ring.ngens
        partials = [[f.derivative(k) for k in range(n)] for f in fs]
        total = self.ring.zero()
        for I, value in self.components.items():
            for order in itertools.permutations(range(self.arity)):
                coeff = self.ring.one()
                for slot, pos in enumerate(order):
                    coeff = coeff * partials[slot][I[pos]]
                    if not coeff:
                        break
                if coeff:
                    total = total + (coeff * value).scale(_perm_sign(order))
        return total

    def weight(self):
        '''The weight w with deg Q(dx_I) = w + deg x_I, or None if mixed.'''
        ring = self.ring
        if not ring.is_graded():
            return None
        weights = set()
        for I, value in self.components.items():
            d = value.homogeneous_degree()
            if d is None:
                return None
            weights.add(d - sum(ring.grading[i] for i in I))
        if len(weights) != 1:
            return None
        return weights.pop()


def _perm_sign(order):
    sign = 1
    order = list(order)
    for i in range(len(order)):
        while order[i] != i:
            j = order[i]
            order[i], order[j] = order[j], order[i]
            sign = -sign
    return sign


def coboundary(A, Q):
    '''The Poisson coboundary dQ, an (s+1)-multiderivation.'''
    ring = A.ring
    if Q.ring != ring:
        raise RingMismatchError('cochain lives over %s, not %s' % (Q.ring, ring))
    if ring.has_relations():
        raise NotSupportedError('multiderivations are only built over rings without relations')
    n = ring.ngens
    s = Q.arity
    out = {}
    for I in itertools.combinations(range(n), s + 1):
        total = ring.zero()
        for k, i in enumerate(I):
            value = Q.components.get(I[:k] + I[k + 1:])
            if value:
                total = total + A.hamiltonian(i, value).scale((-1) ** k)
        for k, l in itertools.combinations(range(s + 1), 2):
            br = A.gen_bracket(I[k], I[l])
            if not br:
                continue
            rest = tuple(i for p, i in enumerate(I) if p != k and p != l)
            for m in range(n):
                sign, J = _insert(m, rest)
                if not sign:
                    continue
                value = Q.components.get(J)
                if not value:
                    continue
                d = br.derivative(m)
                if d:
                    total = total + (d * value).scale(sign * (-1) ** (k + l))
        if total:
            out[I] = total
    return MultiDerivation(ring, s + 1, out)


def random_cochain(ring, arity, rng=None, max_degree=2):
    rng = rng or random.Random(0)
    components = {}
    for I in itertools.combinations(range(ring.ngens), arity):
        components[I] = random_poly(ring, rng, max_degree, nterms=2)
    return MultiDerivation(ring, arity, components)


# =============================================================================
# Degreewise Poisson cohomology
# =============================================================================
def _check_graded(A):
    ring = A.ring
    if not ring.is_graded():
        raise NotSupportedError('Poisson cohomology is only computed for graded rings')
    if ring.has_relations() or any(ring.invertible):
        raise NotSupportedError('Poisson cohomology is only computed for polynomial rings')
    if min(ring.grading) <= 0:
        raise NotSupportedError('Poisson cohomology needs positive generator degrees')
    return A.bracket_degree()


def cochain_basis(A, arity, weight):
    '''Basis keys (I, e) of the weight-w cochains: Q(dx_I) = x^e.'''
    ring = A.ring
    if arity < 0 or arity > ring.ngens:
        return []
    out = []
    for I in itertools.combinations(range(ring.ngens), arity):
        d = weight + sum(ring.grading[i] for i in I)
        if d < 0:
            continue
        for e in ring.monomials_of_degree(d):
            out.append((I, e))
    return out


def _coboundary_rank(A, arity, weight):
    '''Rank of d on the weight-w cochains of the given arity.'''
    ring = A.ring
    vectors = []
    for I, e in cochain_basis(A, arity, weight):
        dQ = coboundary(A, MultiDerivation(ring, arity, {I: ring.monomial(e)}))
        v = {}
        for J, value in dQ.components.items():
            for f, c in value.terms.items():
                v[(J, f)] = c
        vectors.append(v)
    return linalg.rank(vectors, ring.characteristic)


def hp_dimension(A, arity, weight, shift=None):
    '''dim HP^s_w = dim C^s_w - rank d^s_w - rank d^(s-1)_(w-c).'''
    if shift is None:
        shift = _check_graded(A)
    dim = len(cochain_basis(A, arity, weight))
    if not dim:
        return 0
    image = _coboundary_rank(A, arity - 1, weight - shift) if arity > 0 else 0
    return dim - _coboundary_rank(A, arity, weight) - image


def hp_compute(A, arity, max_degree, threads=1):
    '''
    Dimensions of HP^s_w for w = 0..max_degree, as a list.

    Raises NotSupportedError for ungraded rings or rings with relations or
    invertible generators, StructureError for a non-homogeneous bracket.
    '''
    shift = _check_graded(A)
    weights = list(range(max_degree + 1))
    log.info('HP^%d of %s for weights 0..%d (bracket degree %d)', arity, A.ring, max_degree, shift)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda w: hp_dimension(A, arity, w, shift), weights))
    return [hp_dimension(A, arity, w, shift) for w in weights]


def hp_table(A, max_arity, max_degree, threads=1):
    '''{s: [dim HP^s_0, ..., dim HP^s_D]} for s = 0..max_arity.'''
    return dict((s, hp_compute(A, s, max_degree, threads)) for s in range(max_arity + 1))


def format_hp_table(table):
    lines = []
    for s in sorted(table):
        lines.append('HP^%d: %s' % (s, ' '.join(str(d) for d in table[s])))
    return lines


# =============================================================================
# ChainElement Class
# =============================================================================
class ChainElement(object):

    '''
    Element of A^e @_A Omega^n: terms (PBW key, I) -> coefficient, the
    PBW key a basis element of A^e and I an increasing index tuple.

    **Arguments:**

    - U -> UEA
    - terms -> DICT
    '''

    def __init__(self, U, terms=None):
        self.U = U
        self.terms = {}
        for key, c in (terms or {}).items():
            if c:
                self.terms[key] = c

    @classmethod
    def pure(cls, u, I):
        '''u @ dx_I with I in any order, normalized with the sorting sign.'''
        I = tuple(I)
        if len(set(I)) < len(I):
            return cls(u.space)
        sign = _perm_sign(sorted(range(len(I)), key=lambda k: I[k]))
        J = tuple(sorted(I))
        return cls(u.space, dict(((key, J), c * sign) for key, c in u.terms.items()))

    def degree(self):
        '''The set of wedge lengths present.'''
        return sorted(set(len(I) for _, I in self.terms))

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return ChainElement(self.U, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return ChainElement(self.U, dict((key, c * v) for key, v in self.terms.items()))

    def __eq__(self, other):
        return isinstance(other, ChainElement) and self.terms == other.terms

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def parts(self):
        '''{I: PBWElement}.'''
        out = {}
        for (key, I), c in self.terms.items():
            out.setdefault(I, {})[key] = c
        return dict((I, self.U.element(t)) for I, t in out.items())

    def __str__(self):
        if not self.terms:
            return '0'
        names = self.U.ring.names
        pieces = []
        for I, u in sorted(self.parts().items(), key=lambda kv: (len(kv[0]), kv[0])):
            if not I:
                pieces.append((1, str(u)))
            else:
                pieces.append((1, '(%s)@%s' % (u, _wedge_name(names, I))))
        return join_terms(pieces)


def homology_boundary(A, c):
    '''
    b(u @ dx_I) = sum_k (-1)^k u h_(x_ik) @ dx_(I-ik)
                + sum_(k<l) (-1)^(k+l) u @ d{x_ik, x_il} ^ dx_(I-ik-il)

    with d{..} = sum_m d_m{..} dx_m, the coefficient moved into A^e.
    '''
    U = c.U
    ring = A.ring
    out = ChainElement(U)
    for I, u in c.parts().items():
        for k, i in enumerate(I):
            rest = I[:k] + I[k + 1:]
            out = out + ChainElement.pure(u * U.h(i), rest).scale((-1) ** k)
        for k, l in itertools.combinations(range(len(I)), 2):
            br = A.gen_bracket(I[k], I[l])
            if not br:
                continue
            rest = tuple(i for p, i in enumerate(I) if p != k and p != l)
            for m in range(ring.ngens):
                d = br.derivative(m)
                if d:
                    out = out + ChainElement.pure(u * U.m(d), (m,) + rest).scale((-1) ** (k + l))
    return out


def random_chain(U, length, rng=None, word_length=2):
    '''A chain u @ dx_I with |I| = length (capped by the number of generators).'''
    rng = rng or random.Random(0)
    n = U.ring.ngens
    length = min(length, n)
    I = tuple(sorted(rng.sample(range(n), length)))
    u = U.normal_form(U.random_word(rng, word_length))
    return ChainElement.pure(u, I)


# =============================================================================
# Reports
# =============================================================================
def complex_report(A, rng=None, samples=10, max_arity=2, report=None, chains=None):
    '''d o d = 0 on random cochains and b o b = 0 on random chains (chains defaults to samples).'''
    chains = samples if chains is None else chains
    rng = rng or random.Random(0)
    report = report if report is not None else Report()
    ring = A.ring
    if ring.has_relations() or ring.characteristic:
        report.note('cochain complexes skipped: relations or positive characteristic')
        return report
    check = Check('coboundary-square', report)
    for s in range(min(max_arity, ring.ngens) + 1):
        for t in range(samples):
            Q = random_cochain(ring, s, rng)
            check.verify('s=%d,#%d' % (s, t), coboundary(A, coboundary(A, Q)))
    check.report()
    check = Check('boundary-square', report)
    U = UEA(A)
    for n in range(2, min(3, ring.ngens) + 1):
        for t in range(chains):
            c = random_chain(U, n, rng)
            check.verify('n=%d,#%d' % (n, t), homology_boundary(A, homology_boundary(A, c)))
    check.report()
    return report


def cohomology_report(A, max_degree=4, threads=1, report=None):
    '''HP table as notes plus constants in HP^0 and generator order invariance.'''
    report = report if report is not None else Report()
    try:
        table = hp_table(A, A.ring.ngens, max_degree, threads)
    except NotSupportedError as exc:
        report.note('cohomology skipped: %s' % exc)
        return report
    for line in format_hp_table(table):
        report.note(line)
    check = Check('hp-constants', report)
    if table[0][0] < 1:
        check.fail('HP^0_0', table[0][0])
    check.report()
    check = Check('hp-order-invariance', report)
    order = list(reversed(A.ring.names))
    B = A.permuted(order)
    for s in sorted(table):
        other = hp_compute(B, s, max_degree, threads)
        if other != table[s]:
            check.fail('s=%d' % s, ' '.join(str(d) for d in other))
    check.report()
    return report
