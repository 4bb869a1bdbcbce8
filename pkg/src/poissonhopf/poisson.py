#!/usr/bin/env python
'''
poisson

Poisson brackets on (Laurent) polynomial rings, Poisson modules and
Poisson Ore extensions B[x; alpha, delta]_p.

A bracket is determined by its values on generator pairs; it is extended
to all of B as the biderivation

    {f, g} = sum_{i,j} d_i(f) d_j(g) {x_i, x_j}

which also gives {f, g^-1} = -g^-2 {f, g} on invertible generators.
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
from poissonhopf.errors import StructureError, RingMismatchError
from poissonhopf.polynomial import random_poly
from poissonhopf.report import Check, Report
from poissonhopf.space import join_terms

log = logging.getLogger(__name__)


def raw_derivative(terms, k):
    '''Derivative of an unreduced term dict (relation representatives).'''
    out = {}
    for e, c in terms.items():
        if e[k]:
            key = e[:k] + (e[k] - 1,) + e[k + 1:]
            out[key] = out.get(key, 0) + c * e[k]
    return out


def relation_terms(ring):
    '''Each relation lead - tail as a raw term dict.'''
    out = []
    for lead, tail in ring.relations:
        terms = {lead: 1}
        for e, c in tail:
            terms[e] = terms.get(e, 0) - c
        out.append((ring.format_key(lead), terms))
    return out


def apply_derivation(values, f):
    '''Extend generator values of a derivation D to D(f) = sum d_i(f) D(x_i).'''
    ring = f.space
    total = ring.zero()
    for i, v in enumerate(values):
        if v:
            d = f.derivative(i)
            if d:
                total = total + d * v
    return total


def apply_derivation_raw(values, ring, terms):
    total = ring.zero()
    for i, v in enumerate(values):
        if v:
            total = total + ring.element(raw_derivative(terms, i)) * v
    return total


# =============================================================================
# PoissonAlgebra Class
# =============================================================================
class PoissonAlgebra(object):

    '''
    A commutative (Laurent) polynomial ring with a Poisson bracket.

    **Arguments:**

    - ring -> GeneratorSet: the underlying commutative algebra
    - table -> DICT: (i, j) -> LaurentPoly giving {x_i, x_j}; indices may be
      generator names; pairs with i > j are stored negated as (j, i)

    The algebra is only marked `verified` after check_jacobi passes.
    '''

    def __init__(self, ring, table=None):
        self.ring = ring
        self.table = {}
        for (a, b), value in (table or {}).items():
            i = a if isinstance(a, int) else ring.index(a)
            j = b if isinstance(b, int) else ring.index(b)
            if i == j:
                raise StructureError('bracket {%s,%s} must be 0 by antisymmetry'
                                     % (ring.names[i], ring.names[j]))
            if value.space != ring:
                value = ring.embed(value)
            if i > j:
                i, j, value = j, i, -value
            if (i, j) in self.table:
                raise StructureError('bracket {%s,%s} assigned twice' % (ring.names[i], ring.names[j]))
            if value:
                self.table[(i, j)] = value
        self.verified = False

    def __repr__(self):
        return 'PoissonAlgebra(%s, %d brackets)' % (self.ring, len(self.table))

    def __eq__(self, other):
        return isinstance(other, PoissonAlgebra) and self.ring == other.ring and self.table == other.table

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def is_trivial(self):
        return not self.table

    def gen_bracket(self, i, j):
        if i == j:
            return self.ring.zero()
        if i < j:
            return self.table.get((i, j), self.ring.zero())
        return -self.table.get((j, i), self.ring.zero())

    def bracket(self, f, g):
        '''Biderivation extension of the table.'''
        if f.space != self.ring or g.space != self.ring:
            raise RingMismatchError('bracket arguments must live in %s' % self.ring)
        if not self.table or not f or not g:
            return self.ring.zero()
        df = {}
        dg = {}
        total = self.ring.zero()
        for (i, j), value in self.table.items():
            for a, b in ((i, j), (j, i)):
                if a not in df:
                    df[a] = f.derivative(a)
                if b not in dg:
                    dg[b] = g.derivative(b)
            term = df[i] * dg[j] - df[j] * dg[i]
            if term:
                total = total + term * value
        return total

    __call__ = bracket

    def hamiltonian(self, i, f):
        '''{x_i, f}.'''
        return self.bracket(self.ring.gen(i), f)

    def gen_bracket_raw(self, i, terms):
        '''{x_i, r} for an unreduced representative r given as raw terms.'''
        total = self.ring.zero()
        for j in range(self.ring.ngens):
            b = self.gen_bracket(i, j)
            if b:
                total = total + self.ring.element(raw_derivative(terms, j)) * b
        return total

    def bracket_degree(self):
        '''
        The constant c with deg {x_i, x_j} = deg x_i + deg x_j + c on every
        nonzero bracket; 0 for the trivial bracket. Raises StructureError
        for ungraded rings or non-homogeneous brackets.
        '''
        ring = self.ring
        if not ring.is_graded():
            raise StructureError('bracket degree needs a graded ring')
        shifts = set()
        for (i, j), value in self.table.items():
            d = value.homogeneous_degree()
            if d is None:
                raise StructureError('bracket {%s,%s} = %s is not homogeneous'
                                     % (ring.names[i], ring.names[j], value))
            shifts.add(d - ring.grading[i] - ring.grading[j])
        if len(shifts) > 1:
            raise StructureError('bracket degrees are not constant: %s' % sorted(shifts))
        return shifts.pop() if shifts else 0

    def permuted(self, order):
        '''The same Poisson algebra with generators listed in a new order.'''
        ring = self.ring.permuted(order)
        table = {}
        for (i, j), value in self.table.items():
            table[(self.ring.names[i], self.ring.names[j])] = ring.embed(value)
        out = PoissonAlgebra(ring, table)
        out.verified = self.verified
        return out

    def named_table(self):
        return dict(((self.ring.names[i], self.ring.names[j]), v) for (i, j), v in self.table.items())


def extend_bracket(A, f, g):
    return A.bracket(f, g)


def jacobi_sum(A, a, b, c):
    return A(a, A(b, c)) + A(b, A(c, a)) + A(c, A(a, b))


def check_jacobi(A, report=None):
    '''
    Jacobi identity on every generator triple i <= j <= k, plus (for
    rings with relations) that the relation ideal is a Poisson ideal.
    Marks A verified on success.
    '''
    ring = A.ring
    report = report if report is not None else Report()
    check = Check('jacobi', report)
    gens = ring.gens()
    for i, j, k in itertools.combinations_with_replacement(range(ring.ngens), 3):
        check.verify('%s,%s,%s' % (ring.names[i], ring.names[j], ring.names[k]),
                     jacobi_sum(A, gens[i], gens[j], gens[k]))
    check.report()
    ok = check.passed
    if ring.has_relations():
        ideal = Check('poisson-ideal', report)
        for label, terms in relation_terms(ring):
            for i in range(ring.ngens):
                ideal.verify('%s,%s' % (ring.names[i], label), A.gen_bracket_raw(i, terms))
        ideal.report()
        ok = ok and ideal.passed
    A.verified = ok
    return report


# =============================================================================
# Poisson modules
# =============================================================================
class PoissonModule(object):

    '''
    Finite free Poisson module with generator level action data.

    **Arguments:**

    - algebra -> PoissonAlgebra
    - action -> LIST: action[i][j] is the rank-length list of coefficients of
      {x_i, e_j} in the basis e_1..e_rank
    - names -> LIST: basis names (default "e" for rank 1, else e1..en)

    Elements are lists of LaurentPoly coefficients. The action extends by
    {ab, m} = a{b, m} + b{a, m} and {a, bm} = {a, b}m + b{a, m}.
    '''

    def __init__(self, algebra, action, names=None):
        self.algebra = algebra
        ring = algebra.ring
        self.rank = len(action[0]) if action else 0
        if len(action) != ring.ngens:
            raise StructureError('module action needs one row per generator')
        self.action = [[[ring.embed(c) if c.space != ring else c for c in vec] for vec in row]
                       for row in action]
        for row in self.action:
            if len(row) != self.rank or any(len(vec) != self.rank for vec in row):
                raise StructureError('module action rows must all have rank %d' % self.rank)
        if names is None:
            names = ['e'] if self.rank == 1 else ['e%d' % (k + 1) for k in range(self.rank)]
        self.names = list(names)

    @classmethod
    def regular(cls, algebra):
        '''A itself, free on e = 1: {x_i, 1} = 0.'''
        ring = algebra.ring
        return cls(algebra, [[[ring.zero()]] for _ in range(ring.ngens)], names=['1'])

    def zero(self):
        return [self.algebra.ring.zero() for _ in range(self.rank)]

    def basis(self, j):
        v = self.zero()
        v[j] = self.algebra.ring.one()
        return v

    def add(self, u, v):
        return [a + b for a, b in zip(u, v)]

    def scale(self, f, v):
        return [f * a for a in v]

    def act_basis(self, f, j):
        '''{f, e_j} = sum_i d_i(f) {x_i, e_j}.'''
        out = self.zero()
        for i in range(self.algebra.ring.ngens):
            d = f.derivative(i)
            if d:
                out = self.add(out, self.scale(d, self.action[i][j]))
        return out

    def act(self, f, m):
        out = self.zero()
        for j, a in enumerate(m):
            if not a:
                continue
            out[j] = out[j] + self.algebra(f, a)
            out = self.add(out, self.scale(a, self.act_basis(f, j)))
        return out

    def format(self, v):
        pieces = []
        ring = self.algebra.ring
        for name, a in zip(self.names, v):
            for e, c in a.sorted_terms():
                mono = ring.format_key(e)
                pieces.append((c, '%s*%s' % (mono, name) if mono else name))
        return join_terms(pieces)


def check_poisson_module(A, M, rng=None, samples=6, report=None):
    '''
    Axiom {{a,b}, m} = {a,{b,m}} - {b,{a,m}} on all generator pairs and
    basis elements, then spot checks of the extended action on random
    inputs of degree <= 2.
    '''
    report = report if report is not None else Report()
    ring = A.ring
    gens = ring.gens()
    check = Check('module', report)
    for i, j in itertools.combinations(range(ring.ngens), 2):
        for k in range(M.rank):
            e = M.basis(k)
            lhs = M.act(A(gens[i], gens[j]), e)
            rhs = [a - b for a, b in zip(M.act(gens[i], M.act(gens[j], e)),
                                         M.act(gens[j], M.act(gens[i], e)))]
            residual = [a - b for a, b in zip(lhs, rhs)]
            if any(residual):
                check.fail('%s,%s,%s' % (ring.names[i], ring.names[j], M.names[k]), M.format(residual))
            else:
                check.count += 1
    check.report()
    rng = rng or random.Random(0)
    spot = Check('module-extension', report)
    for n in range(samples):
        a = random_poly(ring, rng, 2)
        b = random_poly(ring, rng, 2)
        m = [random_poly(ring, rng, 1) for _ in range(M.rank)]
        # {ab, m} = a{b, m} + b{a, m}
        r2 = [x - y - z for x, y, z in zip(M.act(a * b, m), M.scale(a, M.act(b, m)), M.scale(b, M.act(a, m)))]
        if any(r2):
            spot.fail('product-%d' % n, M.format(r2))
        # {a, bm} = {a, b}m + b{a, m}
        r3 = [x - y - z for x, y, z in zip(M.act(a, M.scale(b, m)), M.scale(A(a, b), m),
                                           M.scale(b, M.act(a, m)))]
        if any(r3):
            spot.fail('module-%d' % n, M.format(r3))
        # axiom (1) for the extended action
        r1 = [x - y + z for x, y, z in zip(M.act(A(a, b), m), M.act(a, M.act(b, m)), M.act(b, M.act(a, m)))]
        if any(r1):
            spot.fail('bracket-%d' % n, M.format(r1))
    spot.report()
    return report


# =============================================================================
# Poisson Ore extensions
# =============================================================================
class OreData(object):

    '''
    Data (alpha, delta) of a Poisson Ore extension B[x; alpha, delta]_p with
    {x, b} = alpha(b) x + delta(b).

    **Arguments:**

    - base -> PoissonAlgebra
    - alpha -> DICT: generator name -> LaurentPoly value of the Poisson derivation alpha
    - delta -> DICT: generator name -> LaurentPoly value of the derivation delta

    Unlisted generators map to 0.
    '''

    def __init__(self, base, alpha=None, delta=None):
        self.base = base
        self.alpha = self._values(alpha)
        self.delta = self._values(delta)

    def _values(self, assign):
        ring = self.base.ring
        values = [ring.zero() for _ in range(ring.ngens)]
        for name, v in (assign or {}).items():
            i = name if isinstance(name, int) else ring.index(name)
            values[i] = ring.embed(v) if v.space != ring else v
        return values

    def apply_alpha(self, f):
        return apply_derivation(self.alpha, f)

    def apply_delta(self, f):
        return apply_derivation(self.delta, f)


def check_ore_data(D, report=None):
    '''
    alpha must be a Poisson derivation and delta must satisfy
    delta{a,b} = {delta a, b} + {a, delta b} + alpha(a)delta(b) - delta(a)alpha(b)
    on every generator pair.
    '''
    report = report if report is not None else Report()
    A = D.base
    ring = A.ring
    gens = ring.gens()
    ca = Check('ore-alpha', report)
    cd = Check('ore-delta', report)
    for i, j in itertools.combinations(range(ring.ngens), 2):
        a, b = gens[i], gens[j]
        label = '%s,%s' % (ring.names[i], ring.names[j])
        ab = A(a, b)
        ca.verify(label, D.apply_alpha(ab) - A(D.alpha[i], b) - A(a, D.alpha[j]))
        cd.verify(label, D.apply_delta(ab) - A(D.delta[i], b) - A(a, D.delta[j])
                  - D.alpha[i] * D.delta[j] + D.delta[i] * D.alpha[j])
    ca.report()
    cd.report()
    if ring.has_relations():
        ideal = Check('ore-ideal', report)
        for label, terms in relation_terms(ring):
            ideal.verify('alpha,' + label, apply_derivation_raw(D.alpha, ring, terms))
            ideal.verify('delta,' + label, apply_derivation_raw(D.delta, ring, terms))
        ideal.report()
    return report


def make_ore_extension(D, name, degree=None, report=None):
    '''
    B[x; alpha, delta]_p on the base ring extended by a new generator x,
    with {x, b} = alpha(b) x + delta(b). The result is checked for Jacobi
    and marked verified.
    '''
    pre = check_ore_data(D)
    if not pre.passed:
        raise StructureError('Ore data rejected: %s' % '; '.join(r.line() for r in pre.failures()))
    base = D.base
    ring = base.ring
    if ring.is_graded() and degree is None:
        raise StructureError('graded base needs a degree for %s' % name)
    new = ring.extended(name, False, degree if ring.is_graded() else None)
    x = new.gen(ring.ngens)
    table = {}
    for (i, j), value in base.table.items():
        table[(i, j)] = new.embed(value)
    n = ring.ngens
    for i in range(n):
        # {x_i, x} = -(alpha(x_i) x + delta(x_i))
        value = -(new.embed(D.alpha[i]) * x + new.embed(D.delta[i]))
        if value:
            table[(i, n)] = value
    out = PoissonAlgebra(new, table)
    result = check_jacobi(out, report)
    if not result.passed:
        raise StructureError('Ore extension by %s fails Jacobi' % name)
    log.debug('Ore extension by %s: %d brackets', name, len(out.table))
    return out


def random_triple_jacobi(A, rng, samples=12, degree=3, report=None):
    '''Jacobi on random elements of degree <= degree (consequence test).'''
    report = report if report is not None else Report()
    check = Check('jacobi-random', report)
    for n in range(samples):
        a, b, c = [random_poly(A.ring, rng, degree) for _ in range(3)]
        check.verify('sample-%d' % n, jacobi_sum(A, a, b, c))
    return check.report()
