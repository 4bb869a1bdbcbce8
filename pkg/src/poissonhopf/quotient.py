#!/usr/bin/env python
'''
quotient

The Hopf algebra H(B) = B^e/B^eB^+ and the comodule structure of B^e
over it:

    pi(f h^I)  = eps(f) y^I                   (quotient map)
    theta(b)   = pi(h(b)) = sum_k eps(d_k b) y_k
    lambda     = (id @ pi) Delta^e            (right H(B)-coaction)
    Upsilon    : B^e -> B @ H(B)              (normal basis map)
    beta(x@y)  = (x@1) lambda(y)              (Galois map)

Upsilon is computed two ways: from the partition formula on h-words, and
as u.(1@1) for the B^e-module structure of B@H(B) given by

    m(f).(b@v) = fb@v,    h(a).(b@v) = {a,b}@v + a_1 b@theta(a_2) v.

For connected B the Lie algebra a = m/m^2 carries the cobracket
d'(y_i) = (theta@theta)(Delta - Delta^op)(x_i).
'''

# =============================================================================
# Standard Python modules
# =============================================================================
import itertools
import logging
import random

# =============================================================================
# Extension modules
# =============================================================================
from sympy.utilities.iterables import multiset_partitions

from poissonhopf import linalg
from poissonhopf.errors import DomainError, NotSupportedError
from poissonhopf.liealgebra import HAlgebra, lie_on_a
from poissonhopf.polynomial import compositions, random_poly
from poissonhopf.report import Check, Report
from poissonhopf.tensor import TensorElement, tensor
from poissonhopf.uea import UEA

log = logging.getLogger(__name__)


def _id(x):
    return x


def set_partitions(items):
    '''All set partitions of a list of distinct items, blocks keeping the list order.'''
    if not items:
        yield []
        return
    items = list(items)
    for part in multiset_partitions(len(items)):
        yield [[items[i] for i in block] for block in part]


# =============================================================================
# QuotientComodule Class
# =============================================================================
class QuotientComodule(object):

    '''
    H(B) with the maps pi, theta, lambda, Upsilon and beta for B^e.

    **Arguments:**

    - U -> UEA: enveloping algebra of a Poisson Hopf algebra (built with
      a HopfData)
    '''

    def __init__(self, U):
        self.U = U
        self.hopf = U._need_hopf()
        self.ring = U.ring
        self.algebra = U.algebra
        self.lie = lie_on_a(self.hopf)
        self.H = HAlgebra(self.lie)
        self._block_cache = {}
        self._upsilon_cache = {}
        self._p_cache = {}
        self._matrix = None
        self._inverse = None

    def __repr__(self):
        return 'QuotientComodule(%s)' % self.ring

    # -- pi and theta --------------------------------------------------------
    def theta(self, b):
        H = self.H
        total = {}
        for k in range(self.ring.ngens):
            c = self.hopf.counit_of(b.derivative(k))
            if c:
                key = list(H.zero_key)
                key[k] = 1
                total[tuple(key)] = c
        return H.element(total)

    def pi(self, u):
        terms = {}
        eps = self.hopf.counit_of
        ring = self.ring
        for (e, J), c in u.terms.items():
            v = eps(ring.monomial(e))
            if v:
                terms[J] = terms.get(J, 0) + c * v
        return self.H.element(terms)

    # -- coaction ------------------------------------------------------------
    def comodule_lambda(self, u):
        U = self.U
        return U.delta(u).map_legs([_id, self.pi], (U, self.H))

    def _block(self, S, positions):
        '''
        T @ theta for one block p_1 < ... < p_s of positions in S: the
        last element is Sweedler split, its first leg is bracketed with
        the others from the inside out.
        '''
        key = tuple(S[p] for p in positions)
        cached = self._block_cache.get(key)
        if cached is None:
            A = self.algebra
            ring = self.ring
            last = S[positions[-1]]
            cached = TensorElement((ring, self.H))
            for (a, b), c in self.hopf.delta_of(last).items():
                t = a
                for p in reversed(positions[:-1]):
                    t = A(S[p], t)
                if t:
                    cached = cached + tensor(t, self.theta(b)).scale(c)
            self._block_cache[key] = cached
        return cached

    def _partition_sum(self, S, positions):
        '''Sum over set partitions of the positions of T_P @ theta_P.'''
        ring = self.ring
        total = TensorElement((ring, self.H))
        if not positions:
            return TensorElement.unit((ring, self.H))
        for part in set_partitions(list(positions)):
            blocks = sorted((sorted(block) for block in part), key=lambda bl: bl[-1])
            t = TensorElement.unit((ring, self.H))
            for block in blocks:
                t = t * self._block(S, block)
                if not t:
                    break
            total = total + t
        return total

    def partition_lambda(self, S):
        '''
        lambda(h(s_1) ... h(s_n)) by the partition formula: a sum over the
        positions J kept as h-letters and the set partitions P of the
        remaining positions of T_P h_J @ theta_P.
        '''
        U = self.U
        n = len(S)
        total = TensorElement((U, self.H))
        for r in range(n + 1):
            for kept in itertools.combinations(range(n), r):
                hJ = U.one()
                for p in kept:
                    hJ = hJ * U.h_of(S[p])
                rest = [p for p in range(n) if p not in kept]
                part = self._partition_sum(S, rest)
                if part:
                    total = total + part.map_legs([lambda f, hJ=hJ: U.m(f) * hJ, _id], (U, self.H))
        return total

    def h_word(self, S):
        U = self.U
        u = U.one()
        for s in S:
            u = u * U.h_of(s)
        return u

    # -- Upsilon -------------------------------------------------------------
    def _pbw_word(self, J):
        ring = self.ring
        S = []
        for k, j in enumerate(J):
            S.extend([ring.gen(k)] * j)
        return S

    def upsilon_h(self, J):
        cached = self._upsilon_cache.get(J)
        if cached is None:
            S = self._pbw_word(J)
            cached = self._partition_sum(S, list(range(len(S))))
            self._upsilon_cache[J] = cached
        return cached

    def upsilon(self, u):
        '''Upsilon(f h^I) = (f@1) * (partition sum of h^I).'''
        ring = self.ring
        total = TensorElement((ring, self.H))
        one = self.H.one()
        for (e, J), c in u.terms.items():
            total = total + tensor(ring.monomial(e), one).scale(c) * self.upsilon_h(J)
        return total

    def p(self, k):
        '''p(x_k) = (x_k)_1 @ theta((x_k)_2).'''
        cached = self._p_cache.get(k)
        if cached is None:
            ring = self.ring
            cached = TensorElement((ring, self.H))
            for (a, b), c in self.hopf.delta[k].items():
                cached = cached + tensor(a, self.theta(b)).scale(c)
            self._p_cache[k] = cached
        return cached

    def act(self, u, t):
        '''B^e acting on B@H(B).'''
        ring = self.ring
        A = self.algebra
        one = self.H.one()
        total = TensorElement((ring, self.H))
        for (e, J), c in u.terms.items():
            v = t
            for k in reversed(range(self.U.n)):
                for _ in range(J[k]):
                    x = ring.gen(k)
                    v = v.map_legs([lambda b, x=x: A(x, b), _id], (ring, self.H)) + self.p(k) * v
            total = total + tensor(ring.monomial(e), one).scale(c) * v
        return total

    def upsilon_module(self, u):
        return self.act(u, TensorElement.unit((self.ring, self.H)))

    def rho(self, t):
        '''id @ Delta_H on B@H(B).'''
        return t.map_legs([_id, self.H.delta], (self.ring, self.H, self.H))

    # -- Galois map ----------------------------------------------------------
    def galois_beta(self, x, y):
        return (tensor(x, self.H.one())) * self.comodule_lambda(y)

    def beta(self, z):
        '''beta on a tensor z in B^e@B^e.'''
        U = self.U
        total = TensorElement((U, self.H))
        for (x, y), c in z.items():
            total = total + self.galois_beta(x, y).scale(c)
        return total

    # -- invariant matrix ----------------------------------------------------
    def invariant_matrix(self):
        '''M[a][j] = sum a_1 eps(d_j a_2) over generators a, as LaurentPolys.'''
        if self._matrix is None:
            ring = self.ring
            n = ring.ngens
            M = [[ring.zero() for _ in range(n)] for _ in range(n)]
            for a in range(n):
                for (l, r), c in self.hopf.delta[a].items():
                    for j in range(n):
                        v = self.hopf.counit_of(r.derivative(j))
                        if v:
                            M[a][j] = M[a][j] + l.scale(c * v)
            self._matrix = M
        return self._matrix

    def inverse_matrix(self):
        if self._inverse is None:
            self._inverse = linalg.invert_matrix(self.invariant_matrix(), self.ring.one())
        return self._inverse

    def _w(self, j):
        '''w_j = sum_a N[j][a] h_a with Upsilon(w_j) = 1@y_j.'''
        U = self.U
        N = self.inverse_matrix()
        total = U.zero()
        for a in range(self.ring.ngens):
            if N[j][a]:
                total = total + U.m(N[j][a]) * U.h(a)
        return total

    def upsilon_preimage(self, I):
        '''w_I with Upsilon(w_I) = 1@y^I, peeling the smallest index.'''
        U = self.U
        if not any(I):
            return U.one()
        j0 = next(i for i, v in enumerate(I) if v)
        rest = list(I)
        rest[j0] -= 1
        inner = self.upsilon_preimage(tuple(rest))
        return self._w(j0) * inner

    def galois_preimage(self, I):
        '''z_I in B^e@B^e with beta(z_I) = 1@y^I, peeling the largest index.'''
        U = self.U
        spaces = (U, U)
        if not any(I):
            return TensorElement.unit(spaces)
        j0 = max(i for i, v in enumerate(I) if v)
        rest = list(I)
        rest[j0] -= 1
        inner = self.galois_preimage(tuple(rest))
        N = self.inverse_matrix()
        total = TensorElement(spaces)
        for a in range(self.ring.ngens):
            if not N[j0][a]:
                continue
            n = U.m(N[j0][a])
            ha = U.h(a)
            total = total + tensor(n, U.one()) * inner * tensor(U.one(), ha)
            total = total - tensor(n * ha, U.one()) * inner
        return total


# =============================================================================
# Functional interface
# =============================================================================
def _structure(U):
    q = getattr(U, '_quotient', None)
    if q is None:
        q = U._quotient = QuotientComodule(U)
    return q


def quotient_pi(U, u):
    return _structure(U).pi(u)


def comodule_lambda(U, u):
    return _structure(U).comodule_lambda(u)


def partition_lambda(U, S):
    return _structure(U).partition_lambda(S)


def upsilon(U, u):
    return _structure(U).upsilon(u)


def upsilon_module(U, u):
    return _structure(U).upsilon_module(u)


def galois_beta(U, x, y):
    return _structure(U).galois_beta(x, y)


def invariant_matrix(B):
    return _structure(UEA(B)).invariant_matrix()


# =============================================================================
# Cobracket
# =============================================================================
class Cobracket(object):

    '''
    Lie cobracket d' on a = m/m^2 of a connected Poisson Hopf algebra.

    **Arguments:**

    - q -> QuotientComodule
    '''

    def __init__(self, q):
        if q.hopf.group_likes():
            raise NotSupportedError('the cobracket is only computed without group-likes')
        self.q = q
        self.H = q.H
        self.values = [self.of(q.ring.gen(i)) for i in range(q.ring.ngens)]

    def of(self, b):
        '''(theta@theta)(Delta b - Delta^op b) for a representative b.'''
        q = self.q
        d = q.hopf.delta_of(b)
        return (d - d.flip()).map_legs([q.theta, q.theta], (self.H, self.H))

    def __call__(self, u):
        '''d' of a degree one element of H(B).'''
        total = TensorElement((self.H, self.H))
        for k, c in self.H.to_vector(u).items():
            total = total + self.values[k].scale(c)
        return total

    def act(self, a, t):
        '''Adjoint action of a in a on a@a.'''
        H = self.H
        return t.map_legs([lambda u: H.commutator(a, u), _id], (H, H)) \
            + t.map_legs([_id, lambda u: H.commutator(a, u)], (H, H))

    def lines(self):
        names = self.q.lie.names
        return ["d'(%s) = %s" % (names[k], factored(v)) for k, v in enumerate(self.values)]


def factored(t):
    '''Print c*(...) when every coefficient has the same magnitude c != 1.'''
    mags = set(abs(c) for c in t.terms.values())
    if len(t.terms) > 1 and len(mags) == 1:
        c = mags.pop()
        if c != 1:
            return '%s*(%s)' % (c, t.scale(1 / c))
    return str(t)


def cobracket(B):
    return Cobracket(_structure(UEA(B)))


# =============================================================================
# Reports
# =============================================================================
def _index_words(ring, length):
    '''Ordered generator index tuples (with repetition) of the given length.'''
    return list(itertools.product(range(ring.ngens), repeat=length))


def _pbw_keys(U, degree):
    '''PBW keys f h^I with |f| <= 1 and |I| <= degree.'''
    ring = U.ring
    polys = [ring.one_key()]
    for i in range(ring.ngens):
        polys.append(ring.unit_vector(i))
        if ring.invertible[i]:
            polys.append(ring.unit_vector(i, -1))
    return [(e, J) for J in _h_keys(U.n, degree) for e in polys]


def _h_keys(n, degree):
    out = []
    for d in range(degree + 1):
        out.extend(compositions(n, d))
    return out


def lie_report(q, report=None):
    '''Records the bracket table and checks theta is a Lie map on generators.'''
    report = report if report is not None else Report()
    ring = q.ring
    H = q.H
    check = Check('lie-theta', report)
    for i, j in itertools.combinations(range(ring.ngens), 2):
        label = '%s,%s' % (ring.names[i], ring.names[j])
        lhs = q.theta(q.algebra.gen_bracket(i, j))
        check.verify(label, lhs - H.commutator(H.y(i), H.y(j)))
    check.report()
    for name, label in zip(q.lie.names, q.lie.labels):
        report.note('%s = theta(%s)' % (name, label))
    for line in q.lie.table():
        report.note(line)
    return report


def partition_report(q, length=4, report=None):
    '''Partition formulas against lambda and Upsilon on generator words.'''
    report = report if report is not None else Report()
    cl = Check('partition-lambda', report)
    cu = Check('partition-upsilon', report)
    names = q.ring.names
    for n in range(1, length + 1):
        for word in _index_words(q.ring, n):
            S = [q.ring.gen(k) for k in word]
            label = ','.join(names[k] for k in word)
            u = q.h_word(S)
            cl.verify(label, q.partition_lambda(S) - q.comodule_lambda(u))
            cu.verify(label, q._partition_sum(S, list(range(n))) - q.upsilon_module(u))
    cl.report()
    cu.report()
    return report


def comodule_report(q, degree=3, report=None):
    '''(Upsilon@id) lambda = rho Upsilon on PBW monomials of degree <= d.'''
    report = report if report is not None else Report()
    U = q.U
    check = Check('comodule-map', report)
    cu = Check('upsilon-module', report)
    for key in U.pbw_slab(degree):
        u = U.element({key: 1})
        label = U.format_key(key) or '1'
        lhs = q.comodule_lambda(u).map_legs([q.upsilon, _id], (q.ring, q.H, q.H))
        check.verify(label, lhs - q.rho(q.upsilon(u)))
        cu.verify(label, q.upsilon(u) - q.upsilon_module(u))
    check.report()
    cu.report()
    return report


def primitive_report(q, rng=None, samples=12, report=None):
    '''
    theta(x_i) is primitive and equals (pi@pi)Delta^e(h(x_i)); pi kills
    products of two augmentation ideal elements of B.
    '''
    report = report if report is not None else Report()
    rng = rng or random.Random(0)
    U = q.U
    H = q.H
    ring = q.ring
    check = Check('primitive', report)
    for k, name in enumerate(ring.names):
        y = q.theta(ring.gen(k))
        prim = tensor(y, H.one()) + tensor(H.one(), y)
        check.verify(name + ',delta', H.delta(y) - prim)
        check.verify(name + ',pi', U.delta(U.h(k)).map_legs([q.pi, q.pi], (H, H)) - prim)
    check.report()
    cc = Check('coradical', report)
    eps = q.hopf.counit_of
    for n in range(samples):
        a = random_poly(ring, rng, 2)
        b = random_poly(ring, rng, 2)
        a = a - eps(a)
        b = b - eps(b)
        cc.verify('pair-%d' % n, q.pi(U.m(a) * U.m(b)))
        cc.verify('h-pair-%d' % n, q.pi(U.h_of(a) * U.m(b)))
    cc.report()
    return report


def normal_basis_report(q, degree=3, report=None):
    '''
    Upsilon is injective on the slab {f h^I : |f| <= 1, |I| <= d} (exact
    rank) and 1@y^I has the explicit preimage w_I for |I| <= d.
    '''
    report = report if report is not None else Report()
    U = q.U
    keys = _pbw_keys(U, degree)
    images = [q.upsilon(U.element({k: 1})).terms for k in keys]
    r = linalg.rank(images)
    inj = Check('normal-basis-injective', report)
    inj.verify('degree-%d' % degree, len(keys) - r)
    inj.report()
    sur = Check('normal-basis-surjective', report)
    try:
        for I in _h_keys(U.n, degree):
            target = tensor(q.ring.one(), q.H.monomial(I))
            sur.verify(q.H.format_key(I) or '1', q.upsilon(q.upsilon_preimage(I)) - target)
    except DomainError as err:
        sur.fail('matrix', err)
    sur.report()
    report.note('normal basis verified to degree %d' % degree)
    return report


def galois_report(q, degree=2, rng=None, samples=6, report=None):
    '''
    beta(z_I) = 1@y^I for |I| <= d, which spans every slab since beta is
    left B^e-linear; beta is balanced over B on random samples.
    '''
    report = report if report is not None else Report()
    rng = rng or random.Random(0)
    U = q.U
    check = Check('galois-surjective', report)
    try:
        for I in _h_keys(U.n, degree):
            target = tensor(U.one(), q.H.monomial(I))
            check.verify(q.H.format_key(I) or '1', q.beta(q.galois_preimage(I)) - target)
    except DomainError as err:
        check.fail('matrix', err)
    check.report()
    cb = Check('galois-balanced', report)
    for n in range(samples):
        x = U.normal_form(U.random_word(rng, 2))
        y = U.normal_form(U.random_word(rng, 2))
        b = U.m(random_poly(q.ring, rng, 1))
        cb.verify('sample-%d' % n, q.galois_beta(x * b, y) - q.galois_beta(x, b * y))
    cb.report()
    return report


def cobracket_report(q, report=None):
    '''Co-Jacobi and the cocycle condition of d' on basis elements.'''
    report = report if report is not None else Report()
    cob = Cobracket(q)
    H = q.H
    n = q.ring.ngens
    names = q.lie.names
    for line in cob.lines():
        report.note(line)
    anti = Check('cobracket-antisymmetry', report)
    cojac = Check('co-jacobi', report)
    for k in range(n):
        d = cob.values[k]
        anti.verify(names[k], d + d.flip())
        dd = d.map_legs([_id, cob], (H, H, H))
        cojac.verify(names[k], dd + dd.permute([1, 2, 0]) + dd.permute([2, 0, 1]))
    anti.report()
    cojac.report()
    comp = Check('cobracket-cocycle', report)
    for i, j in itertools.combinations(range(n), 2):
        a, b = H.y(i), H.y(j)
        lhs = cob(H.commutator(a, b))
        rhs = cob.act(a, cob(b)) - cob.act(b, cob(a))
        comp.verify('%s,%s' % (names[i], names[j]), lhs - rhs)
    comp.report()
    rep = Check('cobracket-representative', report)
    eps = q.hopf.counit_of
    gens = q.ring.gens()
    for i in range(n):
        for j, k in itertools.combinations_with_replacement(range(n), 2):
            shift = (gens[j] - eps(gens[j])) * (gens[k] - eps(gens[k]))
            rep.verify('%s+%s%s' % (q.ring.names[i], q.ring.names[j], q.ring.names[k]),
                       cob.of(gens[i] + shift) - cob.values[i])
    rep.report()
    return report
