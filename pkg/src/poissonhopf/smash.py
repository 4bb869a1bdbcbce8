#!/usr/bin/env python
'''
smash

Graded biproducts C = R#kG with {g, t} = 0 on the group and
{g, y} = g (g*y) for y in R, and the smash product R^e#(kG)^e.

(kG)^e is the enveloping algebra of kG with the zero bracket; it is
commutative with basis g^a h^b and is identified with S(g)@kG through
h(g_i) -> y_i@1, g_i -> 1@g_i. It acts on R^e by

    g.y = y                   g.h(y) = h(y) + g*y
    h_g.y = g*y               h_g.h(y) = h(g*y) + g*(g*y)

with group-likes acting as automorphisms and h_g as a twisted derivation
(Delta h_g = g@h_g + h_g@g). The maps gamma(xg) = x#g and
lambda(xg) = x#h(g) + (1#g)(h(x)#1) generate the smash product.
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
from poissonhopf.errors import StructureError
from poissonhopf.hopf import HopfData
from poissonhopf.linalg import SpanEchelon
from poissonhopf.poisson import PoissonAlgebra, check_jacobi
from poissonhopf.polynomial import GeneratorSet, compositions
from poissonhopf.report import Check, Report
from poissonhopf.space import Space, Element
from poissonhopf.tensor import tensor
from poissonhopf.uea import UEA, _signed_compositions

log = logging.getLogger(__name__)


def _add(terms, key, c):
    v = terms.get(key, 0) + c
    if v:
        terms[key] = v
    else:
        terms.pop(key, None)


def _restrict(p, ring):
    '''Move a polynomial into ring, which must hold every generator it uses.'''
    src = p.space
    terms = {}
    for e, c in p.terms.items():
        key = [0] * ring.ngens
        for name, k in zip(src.names, e):
            if k:
                if name not in ring.names:
                    raise StructureError('%s involves %s, which is not a generator of R' % (p, name))
                key[ring.index(name)] = k
        terms[tuple(key)] = c
    return ring.element(terms)


# =============================================================================
# (kG)^e
# =============================================================================
class KGEnvelope(object):

    '''
    (kG)^e for a free abelian group G, built as the enveloping algebra of
    the Laurent ring with zero bracket.

    **Arguments:**

    - group -> INT or LIST: rank, or the names of the free generators
    '''

    def __init__(self, group):
        if isinstance(group, int):
            if group < 1:
                raise StructureError('rank must be at least 1')
            group = ['g%d' % (i + 1) for i in range(group)]
        self.names = list(group)
        self.rank = len(self.names)
        self.ring = GeneratorSet(self.names, [True] * self.rank)
        self.hopf = HopfData(PoissonAlgebra(self.ring))
        self.U = UEA(self.hopf)

    def __repr__(self):
        return 'KGEnvelope(%s)' % ', '.join(self.names)

    def g(self, a):
        '''Group element g^a as an element of (kG)^e.'''
        return self.U.m(self.ring.monomial(tuple(a)))

    def h(self, i):
        return self.U.h(i)

    def generators(self):
        '''Algebra generators g_i, g_i^-1 and h(g_i), labelled.'''
        out = []
        for i, name in enumerate(self.names):
            out.append((name, self.U.m(self.ring.gen(i))))
            out.append((name + '^-1', self.U.m(self.ring.inverse_gen(i))))
            out.append(('h(%s)' % name, self.U.h(i)))
        return out

    def xi_inverse(self, u):
        '''(kG)^e -> S(g)@kG as {(b, a): c}: g^a h^b -> y^b@g^a.'''
        return dict(((J, e), c) for (e, J), c in u.terms.items())

    def beta_kge(self, a):
        '''g^a -> sum_j a_j y_j@g^(a - e_j), as {(b, a): c}.'''
        out = {}
        for j, aj in enumerate(a):
            if aj:
                b = [0] * self.rank
                b[j] = 1
                e = list(a)
                e[j] -= 1
                out[(tuple(b), tuple(e))] = Fraction(aj)
        return out


def kg_env(group, degree=2, report=None):
    '''
    Build (kG)^e and verify it: generators commute, the words of length
    <= degree span exactly the slab |a|_1 + |b| <= degree with independent
    monomials, g^-1 h(g) is primitive, and Xi^-1 h(g^a) matches beta.
    Returns (KGEnvelope, Report).
    '''
    report = report if report is not None else Report()
    K = KGEnvelope(group)
    U = K.U
    gens = K.generators()
    comm = Check('kge-commutative', report)
    for (la, a), (lb, b) in itertools.combinations(gens, 2):
        comm.verify('%s,%s' % (la, lb), a * b - b * a)
    comm.report()

    slab = Check('kge-slab', report)
    for d in range(degree + 1):
        keys = set(k for k in U.pbw_slab(d))
        span = SpanEchelon(U.sort_key)
        for length in range(d + 1):
            for word in itertools.product([u for _, u in gens], repeat=length):
                prod = U.one()
                for u in word:
                    prod = prod * u
                span.add(prod.terms)
        slab.verify('degree-%d' % d, len(keys) - span.rank)
        missing = [k for k in keys if not span.contains({k: 1})]
        if missing:
            slab.fail('degree-%d,missing' % d, U.element({missing[0]: 1}))
    slab.report()

    prim = Check('kge-primitive', report)
    for i, name in enumerate(K.names):
        u = U.m(K.ring.inverse_gen(i)) * U.h(i)
        d = U.delta(u)
        prim.verify(name, d - tensor(u, U.one()) - tensor(U.one(), u))
    prim.report()

    beta = Check('kge-beta', report)
    for a in itertools.product(range(-2, 3), repeat=K.rank):
        if not any(a):
            continue
        lhs = K.xi_inverse(U.h_of(K.ring.monomial(a)))
        rhs = K.beta_kge(a)
        if lhs != rhs:
            beta.fail(K.ring.format_key(a), U.h_of(K.ring.monomial(a)))
        else:
            beta.count += 1
    beta.report()
    return K, report


# =============================================================================
# BiproductInput Class
# =============================================================================
class BiproductInput(object):

    '''
    Graded biproduct data: a connected Poisson Hopf algebra R, a free
    abelian group G and the derivations g_i* of R.

    **Arguments:**

    - hopf -> HopfData: R (polynomial, no invertible generators)
    - group -> LIST: names of the free generators of G
    - star -> DICT: (g, y) -> LaurentPoly g*y = g^-1 {g, y} in R
    '''

    def __init__(self, hopf, group, star=None):
        self.hopf = hopf
        self.R = hopf.algebra
        ring = self.ring = hopf.ring
        if any(ring.invertible):
            raise StructureError('R must be a polynomial ring without invertible generators')
        self.group = list(group)
        self.rank = len(self.group)
        self.star_table = [[ring.zero() for _ in range(ring.ngens)] for _ in range(self.rank)]
        for (g, y), value in (star or {}).items():
            if g not in self.group:
                raise StructureError('%s is not a group generator' % g)
            self.star_table[self.group.index(g)][ring.index(y)] = _restrict(value, ring)
        cring = self.cring = GeneratorSet(list(ring.names) + self.group,
                                          [False] * ring.ngens + [True] * self.rank)
        table = {}
        for (i, j), value in self.R.table.items():
            table[(ring.names[i], ring.names[j])] = cring.embed(value)
        for i, g in enumerate(self.group):
            for k, y in enumerate(ring.names):
                value = self.star_table[i][k]
                if value:
                    table[(g, y)] = cring.gen(g) * cring.embed(value)
        self.C = PoissonAlgebra(cring, table)
        self.K = KGEnvelope(self.group)
        self.Re = UEA(hopf)
        self.smash = SmashAlgebra(self)

    def __repr__(self):
        return 'BiproductInput(%s # k%s)' % (self.ring, self.group)

    @classmethod
    def from_file(cls, af):
        '''Split a parsed file with a [biproduct] section into R and G.'''
        if af.biproduct is None:
            raise StructureError('the file has no [biproduct] section')
        if af.hopf is None:
            raise StructureError('a biproduct needs the coalgebra of R')
        group = af.biproduct['group']
        names = [n for n in af.ring.names if n not in group]
        src = af.ring
        ring = GeneratorSet(names, [False] * len(names))
        table = {}
        for (i, j), value in af.algebra.table.items():
            a, b = src.names[i], src.names[j]
            if a in names and b in names:
                table[(a, b)] = _restrict(value, ring)
        R = PoissonAlgebra(ring, table)
        delta, counit, antipode = {}, {}, {}
        for n in names:
            i = src.index(n)
            d = af.hopf.delta[i]
            delta[n] = d.map_legs([lambda p: _restrict(p, ring)] * 2, (ring, ring))
            counit[n] = af.hopf.counit[i]
            antipode[n] = _restrict(af.hopf.antipode[i], ring)
        B = cls(HopfData(R, delta, counit, antipode), group, af.biproduct['star'])
        B.given = af.algebra
        return B

    # -- star ----------------------------------------------------------------
    def star(self, i, f):
        '''g_i * f for f in R (a derivation of R).'''
        ring = self.ring
        total = ring.zero()
        for k in range(ring.ngens):
            s = self.star_table[i][k]
            if s:
                d = f.derivative(k)
                if d:
                    total = total + d * s
        return total

    def star_exp(self, a, f):
        '''(g^a) * f = sum_i a_i g_i * f.'''
        total = self.ring.zero()
        for i, ai in enumerate(a):
            if ai:
                total = total + self.star(i, f).scale(ai)
        return total

    # -- (kG)^e acting on R^e ------------------------------------------------
    def act_g(self, a, u):
        Re = self.Re
        ring = self.ring
        shifts = [Re.h(k) + Re.m(self.star_exp(a, ring.gen(k))) for k in range(ring.ngens)]
        total = Re.zero()
        for (e, J), c in u.terms.items():
            v = Re.m(ring.monomial(e))
            for k in range(ring.ngens):
                for _ in range(J[k]):
                    v = v * shifts[k]
            total = total + v.scale(c)
        return total

    def act_h(self, i, u):
        Re = self.Re
        ring = self.ring
        total = Re.zero()
        for (e, J), c in u.terms.items():
            letters = [('m', ring.monomial(e))]
            for k in range(ring.ngens):
                letters.extend([('h', k)] * J[k])
            G, Hh = Re.one(), Re.zero()
            for kind, x in reversed(letters):
                if kind == 'm':
                    gL = Re.m(x)
                    hL = Re.m(self.star(i, x))
                else:
                    s = self.star(i, ring.gen(x))
                    gL = Re.h(x) + Re.m(s)
                    hL = Re.h_of(s) + Re.m(self.star(i, s))
                Hh = gL * Hh + hL * G
                G = gL * G
            total = total + Hh.scale(c)
        return total

    def act_key(self, key, u):
        '''g^a h^b . u for the (kG)^e basis key (a, b).'''
        a, b = key
        for i in range(self.rank):
            for _ in range(b[i]):
                u = self.act_h(i, u)
        if any(a):
            u = self.act_g(a, u)
        return u

    def smash_action(self, actor, target):
        '''actor in (kG)^e acting on target in R^e.'''
        total = self.Re.zero()
        for key, c in actor.terms.items():
            total = total + self.act_key(key, target).scale(c)
        return total

    # -- gamma and lambda ----------------------------------------------------
    def _split(self, e):
        n = self.ring.ngens
        return e[:n], e[n:]

    def gamma(self, c):
        '''gamma(x g^a) = x#g^a for c in C.'''
        S = self.smash
        total = S.zero()
        for e, coeff in c.terms.items():
            er, eg = self._split(e)
            total = total + S.pair(self.Re.m(self.ring.monomial(er)),
                                   self.K.g(eg)).scale(coeff)
        return total

    def lam(self, c):
        '''lambda(x g^a) = x#h(g^a) + (1#g^a)(h(x)#1) for c in C.'''
        S = self.smash
        K = self.K
        total = S.zero()
        for e, coeff in c.terms.items():
            er, eg = self._split(e)
            x = self.ring.monomial(er)
            ga = K.ring.monomial(eg)
            t = S.pair(self.Re.m(x), K.U.h_of(ga)) + S.k(K.U.m(ga)) * S.r(self.Re.h_of(x))
            total = total + t.scale(coeff)
        return total

    def c_elements(self):
        '''The elements y_k, g_i, g_i^-1 and y_k g_i of C, labelled.'''
        cr = self.cring
        out = []
        for y in self.ring.names:
            out.append((y, cr.gen(y)))
        for g in self.group:
            out.append((g, cr.gen(g)))
            out.append((g + '^-1', cr.gen(g) ** -1))
        for y in self.ring.names:
            for g in self.group:
                out.append(('%s*%s' % (y, g), cr.gen(y) * cr.gen(g)))
        return out


def _g_star(C, g, y):
    '''g^-1 {g, y} computed inside C.'''
    return g.inverse() * C(g, y)


def check_star(B, report=None):
    '''Jacobi in C and the identities of the * action, computed in C.'''
    report = report if report is not None else Report()
    check_jacobi(B.C, report)
    cr = B.cring
    C = B.C
    gs = [cr.gen(g) for g in B.group]
    ys = [cr.gen(y) for y in B.ring.names]
    add = Check('star-additive', report)
    sq = Check('star-square', report)
    comp = Check('star-compose', report)
    for i, j in itertools.combinations_with_replacement(range(B.rank), 2):
        g, t = gs[i], gs[j]
        for k, y in enumerate(ys):
            label = '%s,%s,%s' % (B.group[i], B.group[j], B.ring.names[k])
            add.verify(label, _g_star(C, g * t, y) - _g_star(C, g, y) - _g_star(C, t, y))
            comp.verify(label, _g_star(C, g, _g_star(C, t, y))
                        - g.inverse() * t.inverse() * C(g, C(t, y)))
            if i == j:
                sq.verify(label, _g_star(C, g, _g_star(C, g, y)) - C(g, C(y, g.inverse())))
    for k, y in enumerate(ys):
        for i, g in enumerate(gs):
            add.verify('%s^-1,%s' % (B.group[i], B.ring.names[k]),
                       _g_star(C, g.inverse(), y) + _g_star(C, g, y))
    for c in (add, sq, comp):
        c.report()
    given = getattr(B, 'given', None)
    if given is not None:
        bb = Check('biproduct-bracket', report)
        src = given.ring
        for (i, j), value in given.table.items():
            a, b = src.names[i], src.names[j]
            if (a in B.group) != (b in B.group):
                bb.verify('%s,%s' % (a, b), cr.embed(value) - C(cr.gen(a), cr.gen(b)))
        bb.report()
    return report


# =============================================================================
# Smash product
# =============================================================================
class SmashElement(Element):

    '''Element of R^e#(kG)^e; keys are (R^e key, (kG)^e key).'''

    __slots__ = ()


class SmashAlgebra(Space):

    '''
    R^e#(kG)^e with (r#k)(r'#k') = r (k_1 . r') # k_2 k'.

    **Arguments:**

    - biproduct -> BiproductInput
    '''

    element_class = SmashElement

    def __init__(self, biproduct):
        self.B = biproduct
        self._mul_cache = {}
        self._act_cache = {}

    def __repr__(self):
        return 'SmashAlgebra(%r)' % self.B

    def one_key(self):
        return (self.B.Re.one_key(), self.B.K.U.one_key())

    def sort_key(self, key):
        r, k = key
        return (self.B.Re.sort_key(r), self.B.K.U.sort_key(k))

    def format_key(self, key):
        r, k = key
        if key == self.one_key():
            return ''
        return '%s#%s' % (self.B.Re.format_key(r) or '1', self.B.K.U.format_key(k) or '1')

    def _act(self, kkey, rkey):
        key = (kkey, rkey)
        cached = self._act_cache.get(key)
        if cached is None:
            Re = self.B.Re
            cached = self.B.act_key(kkey, Re.element({rkey: 1})).terms
            self._act_cache[key] = cached
        return cached

    def basis_mul(self, a, b):
        key = (a, b)
        cached = self._mul_cache.get(key)
        if cached is None:
            Re = self.B.Re
            KU = self.B.K.U
            r1, k1 = a
            r2, k2 = b
            cached = {}
            for (k1a, k1b), c in KU.delta(KU.element({k1: 1})).terms.items():
                moved = Re.mul_terms({r1: 1}, self._act(k1a, r2))
                right = KU.basis_mul(k1b, k2)
                for rk, rc in moved.items():
                    for kk, kc in right.items():
                        _add(cached, (rk, kk), c * rc * kc)
            self._mul_cache[key] = cached
        return cached

    def pair(self, r, k):
        '''r#k from elements of R^e and (kG)^e.'''
        terms = {}
        for rk, rc in r.terms.items():
            for kk, kc in k.terms.items():
                _add(terms, (rk, kk), rc * kc)
        return SmashElement(self, terms)

    def r(self, u):
        return self.pair(u, self.B.K.U.one())

    def k(self, v):
        return self.pair(self.B.Re.one(), v)

    def slab(self, degree):
        '''Keys with |e| + |J| + |a|_1 + |b| <= degree.'''
        out = []
        for d in range(degree + 1):
            for split in range(d + 1):
                rkeys = _l1_keys(self.B.Re, split)
                kkeys = _l1_keys(self.B.K.U, d - split)
                out.extend((r, k) for r in rkeys for k in kkeys)
        return out


def _l1_keys(U, total):
    '''PBW keys (e, J) of U with |e|_1 + |J| == total.'''
    out = []
    for split in range(total + 1):
        for e in _signed_compositions(U.ring.invertible, split):
            for J in compositions(U.n, total - split):
                out.append((e, J))
    return out


def smash_action(B, actor, target):
    return B.smash_action(actor, target)


def smash_mul(B, u, v):
    return u * v


# =============================================================================
# Checks
# =============================================================================
def _smash_generators(B):
    S = B.smash
    Re = B.Re
    K = B.K
    out = []
    for k, y in enumerate(B.ring.names):
        out.append((y, S.r(Re.m(B.ring.gen(k)))))
        out.append(('h(%s)' % y, S.r(Re.h(k))))
    for label, v in K.generators():
        out.append((label, S.k(v)))
    return out


def check_module_algebra(B, rng=None, samples=6, report=None):
    '''
    (kG)^e.(uv) = (k_1.u)(k_2.v) on random pairs of R^e, the module
    axioms on generator pairs, and associativity of the smash product.
    '''
    report = report if report is not None else Report()
    rng = rng or random.Random(0)
    Re = B.Re
    KU = B.K.U
    actors = B.K.generators()
    mod = Check('module-algebra', report)
    axioms = Check('module-axioms', report)
    for n in range(samples):
        u = Re.normal_form(Re.random_word(rng, 2))
        v = Re.normal_form(Re.random_word(rng, 2))
        for label, k in actors:
            lhs = B.smash_action(k, u * v)
            rhs = Re.zero()
            for (ka, kb), c in KU.delta(k).items():
                rhs = rhs + (B.smash_action(ka, u) * B.smash_action(kb, v)).scale(c)
            mod.verify('%s,%d' % (label, n), lhs - rhs)
        for (la, a), (lb, b) in itertools.product(actors, repeat=2):
            axioms.verify('%s,%s,%d' % (la, lb, n),
                          B.smash_action(a, B.smash_action(b, u)) - B.smash_action(a * b, u))
    mod.report()
    axioms.report()
    assoc = Check('smash-associativity', report)
    gens = _smash_generators(B)
    for n in range(samples):
        (la, a), (lb, b), (lc, c) = [gens[rng.randrange(len(gens))] for _ in range(3)]
        assoc.verify('%s,%s,%s' % (la, lb, lc), (a * b) * c - a * (b * c))
    assoc.report()
    return report


def check_generation(B, degree=2, report=None):
    '''
    lambda is a Lie map, gamma{a,b} = [lambda a, gamma b] and
    lambda(ab) = gamma(a) lambda(b) + gamma(b) lambda(a) on the elements
    y_k, g_i^(+-1), y_k g_i of C; products of at most `degree` images of
    gamma and lambda span the slab of total degree <= degree.
    '''
    report = report if report is not None else Report()
    C = B.C
    elems = B.c_elements()
    lie = Check('generation-lie', report)
    mixed = Check('generation-bracket', report)
    leib = Check('generation-leibniz', report)
    mult = Check('generation-gamma', report)
    for (la, a), (lb, b) in itertools.product(elems, repeat=2):
        label = '%s,%s' % (la, lb)
        br = C(a, b)
        lam_a, lam_b = B.lam(a), B.lam(b)
        gam_a, gam_b = B.gamma(a), B.gamma(b)
        lie.verify(label, B.lam(br) - (lam_a * lam_b - lam_b * lam_a))
        mixed.verify(label, B.gamma(br) - (lam_a * gam_b - gam_b * lam_a))
        leib.verify(label, B.lam(a * b) - gam_a * lam_b - gam_b * lam_a)
        mult.verify(label, B.gamma(a * b) - gam_a * gam_b)
    for c in (lie, mixed, leib, mult):
        c.report()

    S = B.smash
    cr = B.cring
    images = []
    for y in B.ring.names:
        images.append(B.gamma(cr.gen(y)))
        images.append(B.lam(cr.gen(y)))
    for g in B.group:
        images.append(B.gamma(cr.gen(g)))
        images.append(B.gamma(cr.gen(g) ** -1))
        images.append(B.lam(cr.gen(g)))
    span = SpanEchelon(S.sort_key)
    for length in range(degree + 1):
        for word in itertools.product(images, repeat=length):
            prod = S.one()
            for w in word:
                prod = prod * w
            span.add(prod.terms)
    keys = S.slab(degree)
    check = Check('generation-span', report)
    missing = [k for k in keys if not span.contains({k: 1})]
    check.verify('degree-%d' % degree, len(missing))
    check.report()
    report.note('smash slab of degree <= %d has dimension %d' % (degree, len(keys)))
    return report
