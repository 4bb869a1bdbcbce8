#!/usr/bin/env python
'''
uea

The universal enveloping algebra B^e of a Poisson algebra B, generated
by m(f) and h(f) for f in B subject to

    m(fg) = m(f)m(g)                  h({f,g}) = h(f)h(g) - h(g)h(f)
    h(fg) = m(g)h(f) + m(f)h(g)       m({f,g}) = h(f)m(g) - m(g)h(f)
    m(1) = 1

Elements are kept in PBW normal form: sums of f * h(x_1)^j_1 ... h(x_n)^j_n
with the polynomial coefficient f on the left and the h-letters in
generator order. Rewriting uses two rules,

    h_k m(f)   -> m(f) h_k + m({x_k, f})
    h_k h_m    -> h_m h_k + h({x_k, x_m})      (k > m)

and when B is a Poisson Hopf algebra, B^e is a Hopf algebra with
Delta^e(m(f)) = m(f_1)@m(f_2), Delta^e(h(f)) = m(f_1)@h(f_2) + h(f_1)@m(f_2),
eps^e(h) = 0, S^e(m(f)) = m(S f) and

    S^e(h(f)) = -m(S f_1) h(f_2) m(S f_3)

summed over (Delta@id)Delta(f) = f_1@f_2@f_3. The left adjoint action of
h(f) maps m(B) into itself: (ad h(f))(m(b)) = m({f_1, b} S f_2).
'''

# =============================================================================
# Standard Python modules
# =============================================================================
import itertools
import logging
import random
from fractions import Fraction

# =============================================================================
# Extension modules
# =============================================================================
from poissonhopf.errors import NotSupportedError, StructureError
from poissonhopf.linalg import SpanEchelon
from poissonhopf.polynomial import compositions, format_monomial, random_poly
from poissonhopf.report import Check, Report
from poissonhopf.space import Space, Element
from poissonhopf.tensor import TensorElement, as_tensor, tensor

log = logging.getLogger(__name__)


def _add(terms, key, c):
    v = terms.get(key, 0) + c
    if v:
        terms[key] = v
    else:
        terms.pop(key, None)


class PBWElement(Element):

    '''Element of B^e; keys are (poly exponents, h exponents).'''

    __slots__ = ()

    def h_parts(self):
        '''Map h-monomial J -> coefficient polynomial f_J.'''
        ring = self.space.ring
        parts = {}
        for (e, J), c in self.terms.items():
            parts.setdefault(J, {})[e] = c
        return dict((J, ring.element(t)) for J, t in parts.items())

    def coefficient(self, J=None):
        '''Coefficient polynomial of h^J (J = 0 by default).'''
        space = self.space
        J = J or space.zero_h
        return space.ring.element(dict((e, c) for (e, K), c in self.terms.items() if K == J))

    def h_degree(self):
        return max([sum(J) for (e, J) in self.terms] or [0])


class NCWord(object):

    '''
    Unnormalized word: coefficient times a product of letters, each
    ('m', f) or ('h', f) with f a polynomial of the base ring.
    '''

    def __init__(self, letters, coefficient=1):
        self.letters = list(letters)
        self.coefficient = Fraction(coefficient)

    def __str__(self):
        body = '*'.join('%s(%s)' % (kind, f) for kind, f in self.letters) or '1'
        return body if self.coefficient == 1 else '%s*%s' % (self.coefficient, body)

    __repr__ = __str__

    def __len__(self):
        return len(self.letters)


# =============================================================================
# UEA Class
# =============================================================================
class UEA(Space):

    '''
    B^e with PBW normal forms.

    **Arguments:**

    - algebra -> PoissonAlgebra, or a HopfData (which also enables the
      Hopf structure maps)

    Rings with relations and positive characteristic are not supported.
    '''

    element_class = PBWElement

    def __init__(self, algebra):
        hopf = None
        if hasattr(algebra, 'delta_of'):
            hopf, algebra = algebra, algebra.algebra
        self.algebra = algebra
        self.hopf = hopf
        ring = self.ring = algebra.ring
        if ring.has_relations():
            raise NotSupportedError('B^e is only built over (Laurent) polynomial rings without relations')
        if ring.characteristic:
            raise NotSupportedError('B^e needs characteristic 0')
        self.characteristic = 0
        self.n = ring.ngens
        self.zero_h = (0,) * self.n
        self._mul_cache = {}
        self._hh_cache = {}
        self._br_cache = {}
        self._delta_h_cache = {}

    def __repr__(self):
        return 'UEA(%s)' % self.ring

    # -- Space interface -----------------------------------------------------
    def one_key(self):
        return (self.ring.one_key(), self.zero_h)

    def sort_key(self, key):
        e, J = key
        return (sum(J), J, sum(e), e)

    def format_key(self, key):
        e, J = key
        pieces = []
        mono = format_monomial(self.ring.names, e)
        if mono:
            pieces.append(mono)
        for name, j in zip(self.ring.names, J):
            if j == 1:
                pieces.append('h(%s)' % name)
            elif j:
                pieces.append('h(%s)^%d' % (name, j))
        return '*'.join(pieces)

    def basis_mul(self, a, b):
        key = (a, b)
        cached = self._mul_cache.get(key)
        if cached is None:
            e1, J1 = a
            terms = {b: Fraction(1)}
            for k in reversed(range(self.n)):
                for _ in range(J1[k]):
                    terms = self._lmul_h(k, terms)
            cached = self._lmul_mono(e1, terms)
            self._mul_cache[key] = cached
        return cached

    # -- generators ----------------------------------------------------------
    def m(self, f):
        '''m(f) for a polynomial f.'''
        return PBWElement(self, dict(((e, self.zero_h), c) for e, c in f.terms.items()))

    def h(self, k):
        J = list(self.zero_h)
        J[k] = 1
        return PBWElement(self, {(self.ring.one_key(), tuple(J)): 1})

    def h_of(self, f):
        '''h(f) = sum_k d_k(f) h(x_k).'''
        terms = {}
        for k in range(self.n):
            d = f.derivative(k)
            J = list(self.zero_h)
            J[k] = 1
            J = tuple(J)
            for e, c in d.terms.items():
                _add(terms, (e, J), c)
        return PBWElement(self, terms)

    # -- rewriting -----------------------------------------------------------
    def _gen_bracket_mono(self, k, e):
        '''{x_k, x^e} as a term dict (cached).'''
        key = (k, e)
        if key not in self._br_cache:
            ring = self.ring
            self._br_cache[key] = self.algebra(ring.gen(k), ring.monomial(e)).terms
        return self._br_cache[key]

    def _lmul_mono(self, e, terms):
        if not any(e):
            return dict(terms)
        out = {}
        for (f, J), c in terms.items():
            _add(out, (tuple(a + b for a, b in zip(e, f)), J), c)
        return out

    def _lmul_h(self, k, terms):
        '''h_k * sum c x^e h^J, term dicts in and out.'''
        out = {}
        for (e, J), c in terms.items():
            for (f, K), d in self._hh(k, J).items():
                _add(out, (tuple(a + b for a, b in zip(e, f)), K), c * d)
            for f, d in self._gen_bracket_mono(k, e).items():
                _add(out, (f, J), c * d)
        return out

    def _hh(self, k, J):
        '''Normal form of h_k h^J.'''
        key = (k, J)
        cached = self._hh_cache.get(key)
        if cached is not None:
            return cached
        first = next((i for i, j in enumerate(J) if j), None)
        one = self.ring.one_key()
        if first is None or first >= k:
            K = list(J)
            K[k] += 1
            result = {(one, tuple(K)): Fraction(1)}
        else:
            rest = list(J)
            rest[first] -= 1
            rest = tuple(rest)
            result = self._lmul_h(first, self._hh(k, rest))
            br = self.algebra.gen_bracket(k, first)
            for p in range(self.n):
                d = br.derivative(p)
                if d:
                    for key2, c in self._lmul_mono_poly(d, self._hh(p, rest)).items():
                        _add(result, key2, c)
        self._hh_cache[key] = result
        return result

    def _lmul_mono_poly(self, f, terms):
        out = {}
        for e, c in f.terms.items():
            for key, d in self._lmul_mono(e, terms).items():
                _add(out, key, c * d)
        return out

    def lmul_h(self, k, u):
        return PBWElement(self, self._lmul_h(k, u.terms))

    def lmul_poly(self, f, u):
        return PBWElement(self, self._lmul_mono_poly(f, u.terms))

    def normal_form(self, word, strategy='right'):
        '''
        PBW normal form of an NCWord. 'right' feeds letters into the result
        from the right end; 'left' multiplies normal forms from the left;
        'leftmost' and 'rightmost' rewrite the letter sequence (see rewrite).
        '''
        if strategy == 'right':
            terms = {self.one_key(): Fraction(1)}
            for kind, f in reversed(word.letters):
                if kind == 'm':
                    terms = self._lmul_mono_poly(f, terms)
                else:
                    out = {}
                    for k in range(self.n):
                        d = f.derivative(k)
                        if d:
                            for key, c in self._lmul_mono_poly(d, self._lmul_h(k, terms)).items():
                                _add(out, key, c)
                    terms = out
            return PBWElement(self, terms).scale(word.coefficient)
        if strategy == 'left':
            result = self.one()
            for kind, f in word.letters:
                result = result * (self.m(f) if kind == 'm' else self.h_of(f))
            return result.scale(word.coefficient)
        if strategy in ('leftmost', 'rightmost'):
            return self.rewrite(word, strategy)
        raise ValueError('unknown strategy %r' % strategy)

    # -- letter rewriting ----------------------------------------------------
    def _x(self, e):
        return (('x', e),) if any(e) else ()

    def letter_terms(self, word):
        '''Expand an NCWord into letter tuples over ('x', e) and ('h', k).'''
        terms = {(): word.coefficient}
        for kind, f in word.letters:
            pieces = []
            if kind == 'm':
                for e, c in f.terms.items():
                    pieces.append((self._x(e), c))
            else:
                for k in range(self.n):
                    for e, c in f.derivative(k).terms.items():
                        pieces.append((self._x(e) + (('h', k),), c))
            out = {}
            for w, c in terms.items():
                for p, d in pieces:
                    _add(out, w + p, c * d)
            terms = out
        return terms

    def redexes(self, w):
        '''Positions i where the letter pair w[i], w[i+1] can be rewritten.'''
        for i in range(len(w) - 1):
            (s, a), (t, b) = w[i], w[i + 1]
            if t == 'x' or (s == 'h' and a > b):
                yield i

    def rewrite_at(self, w, i):
        '''One rewriting step on the pair at position i.'''
        (s, a), (t, b) = w[i], w[i + 1]
        head, tail = w[:i], w[i + 2:]
        if s == 'x':
            return {head + self._x(tuple(p + q for p, q in zip(a, b))) + tail: Fraction(1)}
        out = {head + (w[i + 1], w[i]) + tail: Fraction(1)}
        if t == 'x':
            for f, c in self._gen_bracket_mono(a, b).items():
                _add(out, head + self._x(f) + tail, c)
            return out
        br = self.algebra.gen_bracket(a, b)
        for p in range(self.n):
            for f, c in br.derivative(p).terms.items():
                _add(out, head + self._x(f) + (('h', p),) + tail, c)
        return out

    def _pbw_key(self, w):
        e = self.ring.one_key()
        if w and w[0][0] == 'x':
            e, w = w[0][1], w[1:]
        J = [0] * self.n
        for _, k in w:
            J[k] += 1
        return (e, tuple(J))

    def rewrite(self, word, strategy='leftmost'):
        '''
        Normal form by rewriting letter sequences, one step at a time at
        the leftmost or at the rightmost redex of each word.
        '''
        if strategy not in ('leftmost', 'rightmost'):
            raise ValueError('unknown strategy %r' % strategy)
        pending = self.letter_terms(word)
        done = {}
        steps = 0
        while pending:
            w, c = pending.popitem()
            found = list(self.redexes(w))
            if not found:
                _add(done, self._pbw_key(w), c)
                continue
            steps += 1
            i = found[0] if strategy == 'leftmost' else found[-1]
            for v, d in self.rewrite_at(w, i).items():
                _add(pending, v, c * d)
        log.debug('%s rewriting of %s: %d steps', strategy, word, steps)
        return PBWElement(self, done)

    def word(self, *letters):
        return NCWord(letters)

    def random_word(self, rng=None, length=3, degree=1):
        rng = rng or random.Random(0)
        letters = []
        for _ in range(length):
            f = random_poly(self.ring, rng, degree, nterms=2)
            if not f:
                f = self.ring.gen(rng.randrange(self.n))
            letters.append((rng.choice('mh'), f))
        return NCWord(letters, rng.choice([1, -1, 2, Fraction(1, 2)]))

    # -- B^e acting on B -----------------------------------------------------
    def regular_action(self, u, a):
        '''m(f).a = fa, h(x_k).a = {x_k, a}; the h-letters act right to left.'''
        ring = self.ring
        total = ring.zero()
        for (e, J), c in u.terms.items():
            v = a
            for k in reversed(range(self.n)):
                for _ in range(J[k]):
                    v = self.algebra(ring.gen(k), v)
            total = total + ring.monomial(e) * v.scale(c)
        return total

    # -- Hopf structure ------------------------------------------------------
    def _need_hopf(self):
        if self.hopf is None:
            raise StructureError('B^e Hopf structure needs a Poisson Hopf algebra B')
        return self.hopf

    def _m_tensor(self, t):
        return t.map_legs([self.m, self.m], (self, self))

    def delta_h(self, k):
        '''Delta^e(h(x_k)) = sum m(a)@h(b) + h(a)@m(b) over Delta(x_k) = sum a@b.'''
        if k not in self._delta_h_cache:
            B = self._need_hopf()
            total = TensorElement((self, self))
            for (a, b), c in B.delta[k].items():
                total = total + (tensor(self.m(a), self.h_of(b)) + tensor(self.h_of(a), self.m(b))).scale(c)
            self._delta_h_cache[k] = total
        return self._delta_h_cache[k]

    def _delta_hJ(self, J):
        key = ('J', J)
        if key not in self._delta_h_cache:
            result = TensorElement.unit((self, self))
            for k in range(self.n):
                for _ in range(J[k]):
                    result = result * self.delta_h(k)
            self._delta_h_cache[key] = result
        return self._delta_h_cache[key]

    def delta(self, u):
        B = self._need_hopf()
        total = TensorElement((self, self))
        ring = self.ring
        for (e, J), c in u.terms.items():
            d = self._m_tensor(B.delta_of(ring.monomial(e)))
            total = total + (d * self._delta_hJ(J)).scale(c)
        return total

    def counit(self, u):
        B = self._need_hopf()
        ring = self.ring
        return ring.coerce(sum((c * B.counit_of(ring.monomial(e))
                                for (e, J), c in u.terms.items() if not any(J)), Fraction(0)))

    def antipode_h(self, k):
        '''S^e(h(x_k)) = -sum m(S a) h(b) m(S c) over (Delta@id)Delta(x_k) = sum a@b@c.'''
        key = ('S', k)
        if key not in self._delta_h_cache:
            B = self._need_hopf()
            ring = self.ring
            d = B.delta_of(ring.gen(k)).map_legs([B.delta_of, _id], (ring, ring, ring))
            total = self.zero()
            for (a, b, c), coeff in d.items():
                term = self.m(B.antipode_of(a)) * self.h_of(b) * self.m(B.antipode_of(c))
                total = total - term.scale(coeff)
            self._delta_h_cache[key] = total
        return self._delta_h_cache[key]

    def antipode(self, u):
        '''Anti-algebra map: S^e(f h^J) = S^e(h_n)^j_n ... S^e(h_1)^j_1 m(S f).'''
        B = self._need_hopf()
        ring = self.ring
        total = self.zero()
        sh = [self.antipode_h(k) for k in range(self.n)]
        for (e, J), c in u.terms.items():
            v = self.one()
            for k in reversed(range(self.n)):
                for _ in range(J[k]):
                    v = v * sh[k]
            total = total + (v * self.m(B.antipode_of(ring.monomial(e)))).scale(c)
        return total

    def structure_map(self, kind, u):
        if kind == 'delta':
            return self.delta(u)
        if kind in ('counit', 'eps'):
            return self.counit(u)
        if kind in ('antipode', 'S'):
            return self.antipode(u)
        raise ValueError('unknown structure map %r' % kind)

    def adjoint_left(self, u, v):
        '''(ad_l u)(v) = u_1 v S(u_2).'''
        total = self.zero()
        for (a, b), c in self.delta(u).items():
            total = total + (a * v * self.antipode(b)).scale(c)
        return total

    # -- PBW slabs -----------------------------------------------------------
    def pbw_slab(self, degree):
        '''
        PBW keys (e, J) of a slab. Graded rings without invertible
        generators: weighted degree exactly `degree` (deg h_k = deg x_k).
        Otherwise: |e|_1 + |J| <= degree.
        '''
        ring = self.ring
        if ring.is_graded() and not any(ring.invertible):
            out = []
            weights = ring.grading
            for d in range(degree + 1):
                for e in ring.monomials_of_degree(d):
                    for J in _weighted(weights, degree - d):
                        out.append((e, J))
            return sorted(out, key=self.sort_key)
        out = []
        for total in range(degree + 1):
            for split in range(total + 1):
                for e in _signed_compositions(ring.invertible, split):
                    for J in compositions(self.n, total - split):
                        out.append((e, J))
        return sorted(out, key=self.sort_key)

    def slab_words(self, length):
        '''All letter words of the given length over m(x_i), m(x_i^-1), h(x_i).'''
        ring = self.ring
        letters = []
        for i in range(self.n):
            letters.append(('m', ring.gen(i)))
            if ring.invertible[i]:
                letters.append(('m', ring.inverse_gen(i)))
            letters.append(('h', ring.gen(i)))
        return [NCWord(w) for w in itertools.product(letters, repeat=length)]


def _weighted(weights, total):
    if not weights:
        return [()] if total == 0 else []
    out = []
    for k in range(total // weights[0] + 1):
        for rest in _weighted(weights[1:], total - k * weights[0]):
            out.append((k,) + rest)
    return out


def _signed_compositions(invertible, total):
    '''Exponent vectors with sum |e_i| == total; negatives only where invertible.'''
    out = []
    for base in compositions(len(invertible), total):
        choices = [((k, -k) if (flag and k) else (k,)) for flag, k in zip(invertible, base)]
        out.extend(itertools.product(*choices))
    return out


def h_of(U, f):
    return U.h_of(f)


def normal_form(U, word, strategy='right'):
    return U.normal_form(word, strategy)


def uea_mul(U, u, v):
    return u * v


def uea_structure_map(U, kind, u):
    return U.structure_map(kind, u)


# =============================================================================
# Reports
# =============================================================================
def _id(u):
    return u


def relations_report(U, rng=None, samples=20, report=None):
    '''The five defining relations of B^e on random f, g (degree <= 2).'''
    rng = rng or random.Random(0)
    report = report if report is not None else Report()
    A = U.algebra
    ring = U.ring
    checks = [Check('relation-m-product', report), Check('relation-h-bracket', report),
              Check('relation-h-product', report), Check('relation-m-bracket', report),
              Check('relation-m-one', report)]
    for t in range(samples):
        f = random_poly(ring, rng, 2)
        g = random_poly(ring, rng, 2)
        mf, mg, hf, hg = U.m(f), U.m(g), U.h_of(f), U.h_of(g)
        checks[0].equal(t, U.m(f * g), mf * mg)
        checks[1].equal(t, U.h_of(A(f, g)), hf * hg - hg * hf)
        checks[2].equal(t, U.h_of(f * g), mg * hf + mf * hg)
        checks[3].equal(t, U.m(A(f, g)), hf * mg - mg * hf)
    checks[4].equal(None, U.m(ring.one()), U.one())
    for c in checks:
        c.report()
    return report


def confluence_report(U, rng=None, samples=20, length=4, report=None):
    '''
    Leftmost and rightmost letter rewriting reach the same normal form on
    random words, and both agree with the multiplicative fold.
    '''
    rng = rng or random.Random(0)
    check = Check('confluence', report)
    for t in range(samples):
        word = U.random_word(rng, length)
        left = U.rewrite(word, 'leftmost')
        check.equal(t, left, U.rewrite(word, 'rightmost'))
        check.equal('%d,fold' % t, left, U.normal_form(word, 'right'))
    return check.report()


def pbw_count(U, degree):
    '''Number of PBW monomials of degree exactly `degree` (see pbw_slab).'''
    ring = U.ring
    if ring.is_graded() and not any(ring.invertible):
        return sum(len(ring.monomials_of_degree(k)) * len(_weighted(ring.grading, degree - k))
                   for k in range(degree + 1))
    return sum(len(_signed_compositions(ring.invertible, k)) * len(compositions(U.n, degree - k))
               for k in range(degree + 1))


def pbw_report(U, degree=3, report=None):
    '''
    The normal forms of all letter words of degree <= d (d <= 4) span a
    space of rank equal to the number of PBW monomials of degree <= d,
    and contain every one of them. When brackets raise the degree the
    rank may only exceed the count. Also the filtration bound: a word
    with j h-letters normalizes to h-degree at most j.
    '''
    report = report if report is not None else Report()
    ring = U.ring
    graded = ring.is_graded() and not any(ring.invertible)
    letters = []
    for i in range(U.n):
        weight = ring.grading[i] if graded else 1
        letters.append((weight, ('m', ring.gen(i))))
        if ring.invertible[i]:
            letters.append((weight, ('m', ring.inverse_gen(i))))
        letters.append((weight, ('h', ring.gen(i))))
    count = Check('pbw-count', report)
    span = SpanEchelon(U.sort_key)
    words = {0: [()]}
    support = set()
    slab = set()
    expected = 0
    for d in range(min(degree, 4) + 1):
        if d:
            words[d] = [w + (letter,) for weight, letter in letters if weight <= d
                        for w in words[d - weight]]
        for w in words[d]:
            u = U.normal_form(NCWord(w))
            support.update(u.terms)
            span.add(u.terms)
        expected += pbw_count(U, d)
        slab.update(U.pbw_slab(d))
        log.debug('pbw degree %d: %d words, rank %d, %d monomials', d, len(words[d]), span.rank, expected)
        if support <= slab:
            count.verify(d, span.rank - expected)
        elif span.rank < expected:
            count.fail(d, '%d < %d' % (span.rank, expected))
        missing = [k for k in sorted(slab, key=U.sort_key) if not span.contains({k: 1})]
        if missing:
            count.fail('%d,missing' % d, U.element({missing[0]: 1}))
    count.report()
    filtration = Check('pbw-filtration', report)
    for length in range(1, min(degree, 2) + 1):
        for word in U.slab_words(length):
            hs = sum(1 for kind, f in word.letters if kind == 'h')
            u = U.normal_form(word)
            if u.h_degree() > hs:
                filtration.fail(str(word), u)
    filtration.report()
    return report


def decomposition_report(U, rng=None, samples=12, report=None):
    '''
    B^e = B + (h-part) as left modules: u.1 is the h-free coefficient of u,
    and the regular action is a module action.
    '''
    rng = rng or random.Random(0)
    report = report if report is not None else Report()
    ring = U.ring
    split = Check('decomposition', report)
    action = Check('regular-action', report)
    for t in range(samples):
        u = U.normal_form(U.random_word(rng, 3))
        v = U.normal_form(U.random_word(rng, 2))
        a = random_poly(ring, rng, 2)
        split.equal(t, U.regular_action(u, ring.one()), u.coefficient())
        action.equal(t, U.regular_action(u * v, a), U.regular_action(u, U.regular_action(v, a)))
    split.report()
    action.report()
    return report


def hopf_report(U, degree=3, rng=None, samples=6, report=None):
    '''
    Hopf axioms of B^e on every PBW monomial of the slabs up to degree,
    and multiplicativity of Delta^e and eps^e on random pairs.
    '''
    U._need_hopf()
    rng = rng or random.Random(0)
    report = report if report is not None else Report()
    coassoc = Check('uea-coassociativity', report)
    counit = Check('uea-counit', report)
    antipode = Check('uea-antipode', report)
    for d in range(degree + 1):
        for key in U.pbw_slab(d):
            u = U.element({key: 1})
            label = U.format_key(key) or '1'
            du = U.delta(u)
            coassoc.verify(label, du.map_legs([U.delta, _id]) - du.map_legs([_id, U.delta]))
            counit.verify(label + ',left', du.map_legs([U.counit, _id], (U,)) - as_tensor(u))
            counit.verify(label + ',right', du.map_legs([_id, U.counit], (U,)) - as_tensor(u))
            eu = U.scalar(U.counit(u))
            antipode.verify(label + ',left', du.map_legs([U.antipode, _id], (U, U)).contract() - eu)
            antipode.verify(label + ',right', du.map_legs([_id, U.antipode], (U, U)).contract() - eu)
    for c in (coassoc, counit, antipode):
        c.report()
    mult = Check('uea-multiplicative', report)
    for t in range(samples):
        u = U.normal_form(U.random_word(rng, 2))
        v = U.normal_form(U.random_word(rng, 2))
        mult.equal('delta,%d' % t, U.delta(u * v), U.delta(u) * U.delta(v))
        mult.verify('eps,%d' % t, U.counit(u * v) - U.counit(u) * U.counit(v))
        mult.equal('S,%d' % t, U.antipode(u * v), U.antipode(v) * U.antipode(u))
    mult.report()
    return report


def normality_report(U, rng=None, samples=6, report=None):
    '''
    m(B) is normal in B^e: for every generator y, (ad_l h(y))(m(b)) has no
    h-part and equals m({y_1, b} S y_2), on generators b and random b.
    '''
    B = U._need_hopf()
    rng = rng or random.Random(0)
    report = report if report is not None else Report()
    A, ring = U.algebra, U.ring
    targets = [(name, ring.gen(i)) for i, name in enumerate(ring.names)]
    for t in range(samples):
        targets.append(('f%d' % t, random_poly(ring, rng, 2, nterms=2)))
    inside = Check('adjoint-normal', report)
    formula = Check('adjoint-bracket', report)
    for k, y in enumerate(ring.names):
        d = B.delta_of(ring.gen(k))
        for label, b in targets:
            v = U.adjoint_left(U.h(k), U.m(b))
            inside.verify('%s,%s' % (y, label), v - U.m(v.coefficient()))
            expected = d.map_legs([lambda a, b=b: A(a, b), B.antipode_of], (ring,)).contract()
            formula.equal('%s,%s' % (y, label), v.coefficient(), expected)
    inside.report()
    formula.report()
    return report
