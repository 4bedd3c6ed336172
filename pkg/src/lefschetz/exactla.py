"""Exact dense linear algebra over Q and prime fields.

Scalars are plain Python objects: Fraction over the rationals, canonical
residues (ints in [0, p)) over F_p.  Matrices are small dense arrays; the
elimination kernels are exact in every mode.  Over F_p the work is done in
vectorized numpy integer arithmetic: int64 when p < 2**31, a split 31-bit
multiply with Mersenne folding for the default prime 2**61 - 1, and python
big-int object arrays for any other prime.  Over Q elimination runs on
Fractions.  Rational search work is expected to go through F_p first and be
re-certified over Q afterwards, which is why the default prime is large.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from .errors import ShapeMismatch

DEFAULT_PRIME = (1 << 61) - 1  # Mersenne, fits the fold-based numpy kernel

_M61 = (1 << 61) - 1


def _is_prime(n):
    # deterministic Miller-Rabin, valid far beyond 64 bits
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field Q; elements are fractions.Fraction."""

    char = 0
    prime = None
    name = "q"

    def convert(self, x):
        return Fraction(x)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def random_element(self, rng):
        # integer entries from a large box, so genericity failures are rare
        return Fraction(rng.randint(-(1 << 31), 1 << 31))

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field F_p; elements are canonical residues in [0, p)."""

    _cache = {}

    def __new__(cls, p):
        p = int(p)
        if p in cls._cache:
            return cls._cache[p]
        if not _is_prime(p):
            raise ValueError("%d is not prime" % p)
        self = super().__new__(cls)
        self.char = p
        self.prime = p
        self.name = "fp:%d" % p
        cls._cache[p] = self
        return self

    zero = 0
    one = 1

    def convert(self, x):
        if isinstance(x, Fraction):
            if x.denominator % self.prime == 0:
                raise ZeroDivisionError("denominator divisible by p")
            return x.numerator * pow(x.denominator, self.prime - 2, self.prime) % self.prime
        return int(x) % self.prime

    def random_element(self, rng):
        return rng.randrange(self.prime)

    def __repr__(self):
        return "GF(%d)" % self.prime


QQ = RationalField()
GF = PrimeField


def default_prime_field():
    return GF(DEFAULT_PRIME)


def parse_field(spec):
    """Field from a CLI-style tag: "q", "fp", or "fp:<prime>"."""
    if spec in ("q", "Q", "qq", "QQ"):
        return QQ
    if spec in ("fp", "Fp", "FP"):
        return default_prime_field()
    if spec.startswith("fp:"):
        return GF(int(spec[3:]))
    raise ValueError("unknown field spec %r (use q or fp:<prime>)" % spec)


def as_rng(seed_or_rng):
    if isinstance(seed_or_rng, random.Random):
        return seed_or_rng
    return random.Random(seed_or_rng)


def spawn_rng(seed, index):
    """Deterministic per-trial stream derived from (seed, trial-index)."""
    return random.Random((int(seed) << 20) ^ (index * 0x9E3779B1))


def symmetric_lift(x, p):
    """Residue lifted to the integer of least absolute value."""
    x = x % p
    return x if 2 * x <= p else x - p


# ---- matrices -------------------------------------------------------------


class Matrix:
    """Dense matrix over a field, stored as a list of entry lists."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field, rows, ncols=None):
        conv = field.convert
        data = [[conv(x) for x in row] for row in rows]
        if data:
            ncols_seen = {len(r) for r in data}
            if len(ncols_seen) != 1:
                raise ShapeMismatch("ragged rows")
            ncols = ncols_seen.pop()
        elif ncols is None:
            raise ShapeMismatch("empty matrix needs an explicit column count")
        self.field = field
        self.rows = data
        self.nrows = len(data)
        self.ncols = ncols

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field is other.field
                and self.ncols == other.ncols and self.rows == other.rows)

    def __repr__(self):
        return "Matrix(%r, %dx%d)" % (self.field, self.nrows, self.ncols)

    def entry(self, i, j):
        return self.rows[i][j]

    def column(self, j):
        return [r[j] for r in self.rows]

    def transpose(self):
        return Matrix(self.field, list(zip(*self.rows)) if self.rows else [],
                      ncols=self.nrows)

    def rank(self):
        return rank(self)

    def det(self):
        return det(self)


def identity(field, n):
    one, zero = field.one, field.zero
    return Matrix(field, [[one if i == j else zero for j in range(n)]
                          for i in range(n)])


def matmul(a, b):
    if a.field is not b.field:
        raise ShapeMismatch("field mismatch")
    if a.ncols != b.nrows:
        raise ShapeMismatch("inner dimensions disagree")
    f = a.field
    bt = list(zip(*b.rows)) if b.rows else [()] * b.ncols
    if f.char == 0:
        out = [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a.rows]
    else:
        p = f.prime
        out = [[sum(x * y for x, y in zip(row, col)) % p for col in bt]
               for row in a.rows]
    return Matrix(f, out, ncols=b.ncols)


def mat_vec(a, v):
    if len(v) != a.ncols:
        raise ShapeMismatch("vector length disagrees")
    f = a.field
    v = [f.convert(x) for x in v]
    if f.char == 0:
        return [sum(x * y for x, y in zip(row, v)) for row in a.rows]
    p = f.prime
    return [sum(x * y for x, y in zip(row, v)) % p for row in a.rows]


# ---- elimination kernels ---------------------------------------------------

_U = np.uint64
_MASK31 = _U(0x7FFFFFFF)
_MASK30 = _U(0x3FFFFFFF)
_M61U = _U(_M61)


def _m61_mul(a, b):
    """(a * b) mod 2**61 - 1 for uint64 arrays with entries < 2**61."""
    a0 = a & _MASK31
    a1 = a >> _U(31)
    b0 = b & _MASK31
    b1 = b >> _U(31)
    hi = a1 * b1                      # < 2**60
    mid = a1 * b0 + a0 * b1           # < 2**62
    lo = a0 * b0                      # < 2**62
    m0 = mid & _MASK30
    m1 = mid >> _U(30)
    t = (hi << _U(1)) + m1 + (m0 << _U(31)) + (lo & _M61U) + (lo >> _U(61))
    t = (t & _M61U) + (t >> _U(61))
    return t - np.where(t >= _M61U, _M61U, _U(0))


def _np_rref(a, p):
    """In-place reduced row echelon over F_p on a numpy array."""
    small = p < (1 << 31)
    m61 = p == _M61
    nr, nc = a.shape
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        if small:
            a[r] = (a[r] * inv) % p
        elif m61:
            a[r] = _m61_mul(a[r], _U(inv))
        else:
            a[r] = (a[r] * inv) % p
        full = a[:, c].copy()
        full[r] = 0
        touched = np.nonzero(full)[0]
        if touched.size:
            if small:
                a[touched] = (a[touched] - full[touched, None] * a[r][None, :]) % p
            elif m61:
                neg = _M61U - full[touched]
                s = a[touched] + _m61_mul(neg[:, None], a[r][None, :])
                s = (s & _M61U) + (s >> _U(61))
                a[touched] = s - np.where(s >= _M61U, _M61U, _U(0))
            else:
                a[touched] = (a[touched] - full[touched, None] * a[r][None, :]) % p
        pivots.append(c)
        r += 1
    return a, pivots


def _fp_array(rows, ncols, p):
    nr = len(rows)
    if p < (1 << 31):
        dtype = np.int64
    elif p == _M61:
        dtype = np.uint64
    else:
        dtype = object
    a = np.zeros((nr, ncols), dtype=dtype)
    for i, row in enumerate(rows):
        # canonical residues up front: pivot search tests entries against 0
        a[i] = [int(x) % p for x in row]
    return a


def _q_rref(rows):
    rows = [list(r) for r in rows]
    nc = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(nc):
        if r == len(rows):
            break
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref_rows(field, rows, ncols):
    """Reduced row echelon form of raw rows; returns (rows, pivot columns).

    Zero rows are dropped.  This is the workhorse shared by the matrix API
    and the face-ring engine.
    """
    if field.char == 0:
        if not rows:
            return [], []
        reduced, pivots = _q_rref(rows)
        return reduced, pivots
    p = field.prime
    if not rows:
        return [], []
    a = _fp_array(rows, ncols, p)
    a, pivots = _np_rref(a, p)
    reduced = [[int(x) for x in a[i]] for i in range(len(pivots))]
    return reduced, pivots


def rref(m):
    """Canonical reduced row echelon form (zero rows dropped) and pivots."""
    reduced, pivots = rref_rows(m.field, m.rows, m.ncols)
    return Matrix(m.field, reduced, ncols=m.ncols), tuple(pivots)


def rank(m):
    return len(rref_rows(m.field, m.rows, m.ncols)[1])


def kernel_basis(m):
    """Matrix whose columns form a basis of the right kernel."""
    reduced, pivots = rref_rows(m.field, m.rows, m.ncols)
    pivot_set = set(pivots)
    free = [j for j in range(m.ncols) if j not in pivot_set]
    f = m.field
    zero, one = f.zero, f.one
    cols = []
    for j in free:
        v = [zero] * m.ncols
        v[j] = one
        for row, pc in zip(reduced, pivots):
            x = row[j]
            v[pc] = -x if f.char == 0 else (-x) % f.prime
        cols.append(v)
    if cols:
        return Matrix(f, list(map(list, zip(*cols))), ncols=len(cols))
    return Matrix(f, [[] for _ in range(m.ncols)], ncols=0)


def solve(m, b):
    """A particular solution of M x = b (free variables zero), or None."""
    if len(b) != m.nrows:
        raise ShapeMismatch("right-hand side has wrong length")
    f = m.field
    b = [f.convert(x) for x in b]
    aug = [row + [bx] for row, bx in zip(m.rows, b)]
    reduced, pivots = rref_rows(f, aug, m.ncols + 1)
    if m.ncols in pivots:
        return None
    x = [f.zero] * m.ncols
    for row, pc in zip(reduced, pivots):
        x[pc] = row[m.ncols]
    return x


def det(m):
    """Determinant by exact elimination (square matrices)."""
    if m.nrows != m.ncols:
        raise ShapeMismatch("determinant of a non-square matrix")
    f = m.field
    n = m.nrows
    rows = [list(r) for r in m.rows]
    sign_flip = False
    result = f.one
    p = f.prime
    for c in range(n):
        pr = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pr is None:
            return f.zero
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            sign_flip = not sign_flip
        pv = rows[c][c]
        result = result * pv if f.char == 0 else result * pv % p
        inv = 1 / pv if f.char == 0 else pow(pv, p - 2, p)
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                g = rows[i][c] * inv if f.char == 0 else rows[i][c] * inv % p
                rows[i] = [x - g * y for x, y in zip(rows[i], rows[c])]
                if f.char != 0:
                    rows[i] = [x % p for x in rows[i]]
    if sign_flip:
        result = -result if f.char == 0 else (-result) % p
    return result


def random_vector(n, field, rng):
    rng = as_rng(rng)
    return [field.random_element(rng) for _ in range(n)]


def random_matrix(nrows, ncols, field, rng):
    rng = as_rng(rng)
    return Matrix(field, [[field.random_element(rng) for _ in range(ncols)]
                          for _ in range(nrows)])
