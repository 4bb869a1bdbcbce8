#!/usr/bin/env python
'''
linalg

Exact linear algebra over Q (or GF(p)). Vectors are dicts basis key ->
Fraction, so elements of any Space or tensor product feed in directly
through their `terms`. Dense problems go through numpy object arrays of
Fractions; long streams of vectors go through a sparse incremental
echelon form.
'''

# =============================================================================
# Standard Python modules
# =============================================================================
import logging
from fractions import Fraction

# =============================================================================
# Extension modules
# =============================================================================
import numpy

from poissonhopf.errors import DomainError

log = logging.getLogger(__name__)


def to_matrix(vectors, columns=None):
    '''Stack dict vectors as the rows of an object array; returns (matrix, columns).'''
    if columns is None:
        seen = {}
        for v in vectors:
            for k in v:
                seen.setdefault(k, len(seen))
        columns = list(seen)
    index = dict((k, j) for j, k in enumerate(columns))
    m = numpy.empty((len(vectors), len(columns)), dtype=object)
    m.fill(Fraction(0))
    for i, v in enumerate(vectors):
        for k, c in v.items():
            m[i, index[k]] = Fraction(c)
    return m, columns


def row_echelon(m, prime=0):
    '''
    In-place forward elimination of an object array; returns the pivot
    columns. With prime > 0 the entries are reduced modulo prime.
    '''
    n_rows, n_cols = m.shape
    if prime:
        for r in range(n_rows):
            m[r, :] = [_modp(x, prime) for x in m[r, :]]
    pivots = []
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r == n_rows:
            break
        nonzero = [r for r in range(piv_r, n_rows) if m[r, piv_c] != 0]
        if not nonzero:
            continue
        i_row = nonzero[0]
        if i_row != piv_r:
            m[[piv_r, i_row]] = m[[i_row, piv_r]]
        fp = m[piv_r, piv_c]
        for r in nonzero[1:]:
            frp = m[r, piv_c] / fp
            m[r, piv_c:] = m[r, piv_c:] - m[piv_r, piv_c:] * frp
            if prime:
                m[r, piv_c:] = [_modp(x, prime) for x in m[r, piv_c:]]
        pivots.append(piv_c)
        piv_r += 1
    return pivots


def _modp(x, p):
    x = Fraction(x)
    return Fraction((x.numerator * pow(x.denominator, -1, p)) % p)


def rank(vectors, prime=0):
    '''Exact rank of a list of dict vectors.'''
    vectors = [v for v in vectors if v]
    if not vectors:
        return 0
    m, columns = to_matrix(vectors)
    r = len(row_echelon(m, prime))
    log.debug('rank of %d x %d system: %d', len(vectors), len(columns), r)
    return r


class SpanEchelon(object):

    '''
    Incremental sparse echelon basis of a span of dict vectors.

    Each stored row is normalized to leading coefficient 1 on its pivot,
    and pivots are chosen as the largest key under `order`.
    '''

    def __init__(self, order=None, prime=0):
        self.rows = {}
        self.order = order or (lambda k: k)
        self.prime = prime

    def _clean(self, v):
        out = {}
        for k, c in v.items():
            c = _modp(c, self.prime) if self.prime else Fraction(c)
            if c:
                out[k] = c
        return out

    def reduce(self, v):
        v = self._clean(v)
        while v:
            lead = max(v, key=self.order)
            row = self.rows.get(lead)
            if row is None:
                return v
            c = v[lead]
            for k, rc in row.items():
                nv = v.get(k, 0) - c * rc
                if self.prime:
                    nv = _modp(nv, self.prime)
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        return v

    def add(self, v):
        '''Insert v; return True when it enlarged the span.'''
        v = self.reduce(v)
        if not v:
            return False
        lead = max(v, key=self.order)
        inv = 1 / v[lead]
        self.rows[lead] = self._clean(dict((k, c * inv) for k, c in v.items()))
        return True

    def contains(self, v):
        return not self.reduce(v)

    @property
    def rank(self):
        return len(self.rows)

    def __len__(self):
        return len(self.rows)


def invert_matrix(m, ring_one):
    '''
    Gauss-Jordan inverse of a square matrix (list of lists) over a
    commutative ring, pivoting only on units. Entries must be elements
    supporting is_unit() and inverse(); raises DomainError when no unit
    pivot exists.
    '''
    n = len(m)
    a = [list(row) + [ring_one if i == j else ring_one.scale(0) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col].is_unit():
                piv = r
                break
        if piv is None:
            raise DomainError('no unit pivot in column %d' % col)
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col].inverse()
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]
