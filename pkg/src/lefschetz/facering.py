"""Stanley-Reisner rings, linear systems of parameters, Artinian reductions.

The reduction engine presents the quotient k[complex]/(Theta) degree by
degree.  In each degree i the graded piece is spanned by all degree-i
monomials whose support is a face; the relation space is spanned by
theta_j * m over all degree-(i-1) face monomials m, and the chosen basis is
the set of non-pivot monomials of the reduced echelon form of that relation
space.  Two exact strategies compute the same data:

* "macaulay": materialize the relation rows on face-monomial coordinates
  directly (the construction above, word for word).  Cost scales with the
  number of face monomials, good for complexes with many vertices.

* "substitution": row-reduce Theta to solve for d pivot variables, rewrite
  them away, and eliminate the surviving relations (the substituted minimal
  non-face monomials) on monomials in the free variables only.  Exact and
  equivalent, and far smaller when the complex has few vertices relative to
  d (boundaries of simplices, joins, cross-polytopes).

Both produce face-supported standard monomial bases and identical graded
dimensions; strategy choice is deterministic from the input sizes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import exactla
from .errors import (
    DegreeOutOfRange,
    GenericityExhausted,
    NotAFace,
    NotLsop,
    ShapeMismatch,
)
from .exactla import Matrix, as_rng
from .vectors import GradedVector, f_to_h, f_vector


# ---- monomials -------------------------------------------------------------
#
# A monomial is a nondecreasing tuple of vertex labels with repetition;
# its degree is the tuple length and its support the underlying set.


def mono_insert(mono, v):
    return tuple(sorted(mono + (v,)))


def mono_support(mono):
    return tuple(sorted(set(mono)))


def _compositions(total, parts):
    """All positive integer compositions of total into parts summands."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cuts in itertools.combinations(range(1, total), parts - 1):
        prev = 0
        out = []
        for c in cuts + (total,):
            out.append(c - prev)
            prev = c
        yield tuple(out)


def face_monomials(c, i):
    """All degree-i monomials with face support, in lexicographic order."""
    if i == 0:
        return [()]
    out = []
    for s in range(1, min(i, c.dim + 1) + 1):
        for face in c.faces(s - 1):
            for comp in _compositions(i, s):
                mono = tuple(v for v, e in zip(face, comp) for _ in range(e))
                out.append(mono)
    out.sort()
    return out


def count_face_monomials(c, i):
    if i == 0:
        return 1
    return sum(len(c.faces(s - 1)) * comb(i - 1, s - 1)
               for s in range(1, min(i, c.dim + 1) + 1))


@lru_cache(maxsize=None)
def minimal_nonfaces(c, max_size=None):
    """Minimal non-faces (as sorted vertex tuples) up to the given size."""
    cap = c.dim + 2 if max_size is None else max_size
    out = []
    verts = c.vertices
    for s in range(2, min(cap, len(verts)) + 1):
        for cand in itertools.combinations(verts, s):
            if c.has_face(cand):
                continue
            if all(c.has_face(cand[:j] + cand[j + 1:]) for j in range(s)):
                out.append(cand)
    return tuple(out)


# ---- linear systems --------------------------------------------------------


@dataclass(frozen=True)
class LinearSystem:
    """d linear forms on the vertex variables, as a d x m coefficient matrix.

    Column j corresponds to the j-th vertex in the complex's sorted vertex
    tuple.  Entries live in the attached field.
    """

    field: object
    rows: tuple
    vertices: tuple

    @classmethod
    def from_rows(cls, field, rows, vertices):
        conv = field.convert
        rows = tuple(tuple(conv(x) for x in row) for row in rows)
        if any(len(r) != len(vertices) for r in rows):
            raise ShapeMismatch("system rows must match the vertex count")
        return cls(field=field, rows=rows, vertices=tuple(vertices))

    @property
    def d(self):
        return len(self.rows)

    @property
    def m(self):
        return len(self.vertices)

    def matrix(self):
        return Matrix(self.field, [list(r) for r in self.rows], ncols=self.m)

    def submatrix_rank(self, columns):
        rows = [[r[j] for j in columns] for r in self.rows]
        _, pivots = exactla.rref_rows(self.field, rows, len(columns))
        return len(pivots)


def is_lsop(c, system):
    """Linear system of parameters test: full column rank on every facet."""
    if system.vertices != c.vertices:
        raise ShapeMismatch("system vertex order disagrees with the complex")
    if system.d != c.dim + 1:
        return False
    vindex = {v: j for j, v in enumerate(c.vertices)}
    for F in c.facets:
        cols = [vindex[v] for v in F]
        if system.submatrix_rank(cols) != len(F):
            return False
    return True


@dataclass(frozen=True)
class GenericityReport:
    generic: bool
    exhaustive: bool
    minors_checked: int

    def __bool__(self):
        return self.generic


def is_generic(system, rng=None, exhaustive_limit=10 ** 5, sample_count=10 ** 4):
    """All d x d minors nonsingular; sampled when there are too many."""
    d, m = system.d, system.m
    if d > m:
        return GenericityReport(False, True, 0)
    field = system.field
    total = comb(m, d)
    checked = 0
    if total <= exhaustive_limit:
        for cols in itertools.combinations(range(m), d):
            sub = Matrix(field, [[row[j] for j in cols] for row in system.rows])
            checked += 1
            if exactla.det(sub) == field.zero:
                return GenericityReport(False, True, checked)
        return GenericityReport(True, True, checked)
    rng = as_rng(0 if rng is None else rng)
    cols_pool = list(range(m))
    for _ in range(sample_count):
        cols = sorted(rng.sample(cols_pool, d))
        sub = Matrix(field, [[row[j] for j in cols] for row in system.rows])
        checked += 1
        if exactla.det(sub) == field.zero:
            return GenericityReport(False, False, checked)
    return GenericityReport(True, False, checked)


def random_lsop(c, field, rng, max_tries=32, require_generic=False):
    """Sample random linear systems until one passes is_lsop (and, if asked,
    the genericity minor test)."""
    rng = as_rng(rng)
    d = c.dim + 1
    m = len(c.vertices)
    for _ in range(max_tries):
        rows = [[field.random_element(rng) for _ in range(m)] for _ in range(d)]
        system = LinearSystem.from_rows(field, rows, c.vertices)
        if not is_lsop(c, system):
            continue
        if require_generic and not is_generic(system, rng=rng):
            continue
        return system
    raise GenericityExhausted(
        "no l.s.o.p. after %d tries (field too small?)" % max_tries)


# ---- the reduction engine --------------------------------------------------


class _DegreeData:
    __slots__ = ("basis", "basis_index", "red")

    def __init__(self, basis, red):
        self.basis = basis
        self.basis_index = {b: k for k, b in enumerate(basis)}
        self.red = red  # monomial -> coefficient tuple over basis


class GradedQuotient:
    """The Artinian reduction k[complex]/(Theta), presented per degree.

    Degrees are computed lazily and cached.  The chosen basis in each degree
    consists of face-supported monomials; reduce_monomial expresses any
    monomial in that basis.
    """

    def __init__(self, c, system, strategy="auto"):
        if not is_lsop(c, system):
            raise NotLsop("the given system is not an l.s.o.p. for this complex")
        self.complex = c
        self.system = system
        self.field = system.field
        self.d = c.dim + 1
        self.vertices = c.vertices
        self._vindex = {v: j for j, v in enumerate(c.vertices)}
        self._degrees = {}
        self._mono_red_cache = {}
        self._vertex_mult_cache = {}
        self._subst = None
        if strategy == "auto":
            strategy = self._pick_strategy()
        if strategy not in ("macaulay", "substitution"):
            raise ValueError("unknown strategy %r" % (strategy,))
        self.strategy = strategy
        if strategy == "substitution":
            self._setup_substitution()

    # -- strategy selection ------------------------------------------------

    def _pick_strategy(self):
        m, d = len(self.vertices), self.d
        free = m - d
        if free < 0:
            return "macaulay"
        if comb(m, min(d + 1, m)) > 2 * 10 ** 5:
            return "macaulay"
        subst_cols = comb(free + d - 1, d) if d > 0 else 1
        macaulay_cols = count_face_monomials(self.complex, d)
        return "substitution" if subst_cols <= macaulay_cols else "macaulay"

    # -- substitution setup --------------------------------------------------

    def _setup_substitution(self):
        field = self.field
        rows = [list(r) for r in self.system.rows]
        reduced, pivots = exactla.rref_rows(field, rows, len(self.vertices))
        if len(pivots) != self.d:
            raise NotLsop("system matrix does not have full row rank")
        pivot_set = set(pivots)
        free_cols = [j for j in range(len(self.vertices)) if j not in pivot_set]
        free_verts = tuple(self.vertices[j] for j in free_cols)
        rewrite = {}
        for row, pc in zip(reduced, pivots):
            v = self.vertices[pc]
            terms = []
            for j in free_cols:
                x = row[j]
                if x != field.zero:
                    neg = -x if field.char == 0 else (-x) % field.prime
                    terms.append((self.vertices[j], neg))
            rewrite[v] = tuple(terms)
        self._subst = {
            "free_verts": free_verts,
            "free_index": {v: k for k, v in enumerate(free_verts)},
            "rewrite": rewrite,
            "nonfaces": minimal_nonfaces(self.complex),
            "poly_cache": {},
        }

    def _subst_poly(self, mono):
        """Image of a monomial under the pivot-variable rewriting, as a dict
        from free monomials to coefficients."""
        cache = self._subst["poly_cache"]
        if mono in cache:
            return cache[mono]
        field = self.field
        rewrite = self._subst["rewrite"]
        p = field.prime
        poly = {(): field.one}
        for v in mono:
            terms = rewrite.get(v, ((v, field.one),))
            new = {}
            for m0, c0 in poly.items():
                for (w, cw) in terms:
                    m1 = mono_insert(m0, w)
                    c = c0 * cw
                    if field.char != 0:
                        c %= p
                    prev = new.get(m1)
                    if prev is None:
                        new[m1] = c
                    else:
                        c = prev + c
                        if field.char != 0:
                            c %= p
                        new[m1] = c
            poly = {m: c for m, c in new.items() if c != field.zero}
        cache[mono] = poly
        return poly

    # -- degree construction -------------------------------------------------

    def _degree(self, i):
        if i in self._degrees:
            return self._degrees[i]
        if i < 0:
            raise DegreeOutOfRange("degree must be nonnegative")
        if i == 0:
            data = _DegreeData(basis=[()], red={})
        elif self.strategy == "macaulay":
            data = self._build_macaulay(i)
        else:
            data = self._build_substitution(i)
        self._degrees[i] = data
        return data

    def _build_macaulay(self, i):
        field = self.field
        c = self.complex
        monos = face_monomials(c, i)
        col = {m: k for k, m in enumerate(monos)}
        nc = len(monos)
        zero = field.zero
        rows = []
        theta = self.system.rows
        for m in face_monomials(c, i - 1):
            for trow in theta:
                row = [zero] * nc
                hit = False
                for v, a in zip(self.vertices, trow):
                    if a == zero:
                        continue
                    m2 = mono_insert(m, v)
                    k = col.get(m2)
                    if k is not None:
                        row[k] = a
                        hit = True
                if hit:
                    rows.append(row)
        reduced, pivots = exactla.rref_rows(field, rows, nc)
        pivot_set = set(pivots)
        basis = [m for k, m in enumerate(monos) if k not in pivot_set]
        free_pos = {k: idx for idx, k in
                    enumerate(k for k in range(nc) if k not in pivot_set)}
        red = {}
        for row, pc in zip(reduced, pivots):
            vec = [zero] * len(basis)
            for k, idx in free_pos.items():
                x = row[k]
                if x != zero:
                    vec[idx] = -x if field.char == 0 else (-x) % field.prime
            red[monos[pc]] = tuple(vec)
        return _DegreeData(basis=basis, red=red)

    def _build_substitution(self, i):
        field = self.field
        zero = field.zero
        free_verts = self._subst["free_verts"]
        monos = list(itertools.combinations_with_replacement(free_verts, i))
        col = {m: k for k, m in enumerate(monos)}
        nc = len(monos)
        rows = []
        for n in self._subst["nonfaces"]:
            s = len(n)
            if s > i:
                continue
            poly = self._subst_poly(n)
            if not poly:
                continue
            for mu in itertools.combinations_with_replacement(free_verts, i - s):
                row = [zero] * nc
                for pm, pc in poly.items():
                    row[col[tuple(sorted(pm + mu))]] = pc
                rows.append(row)
        reduced, pivots = exactla.rref_rows(field, rows, nc)
        pivot_set = set(pivots)
        basis = [m for k, m in enumerate(monos) if k not in pivot_set]
        free_pos = {k: idx for idx, k in
                    enumerate(k for k in range(nc) if k not in pivot_set)}
        red = {}
        for row, pc in zip(reduced, pivots):
            vec = [zero] * len(basis)
            for k, idx in free_pos.items():
                x = row[k]
                if x != zero:
                    vec[idx] = -x if field.char == 0 else (-x) % field.prime
            red[monos[pc]] = tuple(vec)
        return _DegreeData(basis=basis, red=red)

    # -- public views --------------------------------------------------------

    def dimension(self, i):
        return len(self._degree(i).basis)

    @property
    def dims(self):
        """Graded dimensions (degree 0 through d)."""
        return tuple(self.dimension(i) for i in range(self.d + 1))

    def basis(self, i):
        return tuple(self._degree(i).basis)

    def monomials(self, i):
        """All degree-i face monomials (the spanning set)."""
        return face_monomials(self.complex, i)

    def zero_vector(self, i):
        return tuple([self.field.zero] * self.dimension(i))

    def reduce_monomial(self, mono):
        """Coordinates of a monomial's class in the degree-|mono| basis."""
        mono = tuple(sorted(mono))
        key = mono
        cached = self._mono_red_cache.get(key)
        if cached is not None:
            return cached
        i = len(mono)
        data = self._degree(i)
        field = self.field
        if mono in data.basis_index:
            vec = list(self.zero_vector(i))
            vec[data.basis_index[mono]] = field.one
            out = tuple(vec)
        elif not self.complex.has_face(mono_support(mono)):
            out = self.zero_vector(i)
        elif mono in data.red:
            out = data.red[mono]
        elif self.strategy == "substitution":
            poly = self._subst_poly(mono)
            acc = [field.zero] * self.dimension(i)
            p = field.prime
            for mu, cmu in poly.items():
                if mu in data.basis_index:
                    k = data.basis_index[mu]
                    acc[k] = acc[k] + cmu
                else:
                    tail = data.red.get(mu)
                    if tail is None:
                        continue
                    for k, x in enumerate(tail):
                        if x != field.zero:
                            acc[k] = acc[k] + cmu * x
            if field.char != 0:
                acc = [x % p for x in acc]
            out = tuple(acc)
        else:
            raise DegreeOutOfRange("monomial %r missing from degree %d" % (mono, i))
        self._mono_red_cache[key] = out
        return out

    def vertex_multiplication(self, v, i):
        """Matrix of multiplication by x_v from degree i to i+1 (columns are
        images of basis monomials)."""
        key = (v, i)
        cached = self._vertex_mult_cache.get(key)
        if cached is not None:
            return cached
        cols = [self.reduce_monomial(mono_insert(b, v)) for b in self.basis(i)]
        nrows = self.dimension(i + 1)
        rows = [[colv[r] for colv in cols] for r in range(nrows)]
        mat = Matrix(self.field, rows, ncols=len(cols))
        self._vertex_mult_cache[key] = mat
        return mat

    def multiplication_matrix(self, linear_form, i):
        """Matrix of multiplication by a linear form from degree i to i+1."""
        if len(linear_form) != len(self.vertices):
            raise ShapeMismatch("linear form length must match the vertex count")
        field = self.field
        conv = field.convert
        coeffs = [conv(x) for x in linear_form]
        nrows = self.dimension(i + 1)
        ncols = self.dimension(i)
        acc = [[field.zero] * ncols for _ in range(nrows)]
        for v, w in zip(self.vertices, coeffs):
            if w == field.zero:
                continue
            mat = self.vertex_multiplication(v, i)
            for r in range(nrows):
                mrow = mat.rows[r]
                arow = acc[r]
                for k in range(ncols):
                    x = mrow[k]
                    if x != field.zero:
                        arow[k] = arow[k] + w * x
        if field.char != 0:
            p = field.prime
            acc = [[x % p for x in row] for row in acc]
        return Matrix(field, acc, ncols=ncols)

    def relation_rows(self, i):
        """The relation space in degree i as (monomial, expansion) pairs: one
        per non-basis monomial M, meaning M - expansion lies in the relations."""
        data = self._degree(i)
        return [(m, self.reduce_monomial(m))
                for m in self.monomials(i) if m not in data.basis_index]

    def relation_echelon(self, i):
        """Canonical reduced echelon basis of the degree-i relation space, as
        dense rows on the face-monomial coordinates of monomials(i).  This
        view is strategy-independent."""
        monos = self.monomials(i)
        col = {m: k for k, m in enumerate(monos)}
        data = self._degree(i)
        field = self.field
        basis_cols = [col[b] for b in data.basis]
        rows = []
        for m, vec in self.relation_rows(i):
            row = [field.zero] * len(monos)
            row[col[m]] = field.one
            for bc, x in zip(basis_cols, vec):
                if x != field.zero:
                    row[bc] = -x if field.char == 0 else (-x) % field.prime
            rows.append(row)
        reduced, _ = exactla.rref_rows(field, rows, len(monos))
        return Matrix(field, reduced, ncols=len(monos))


def artinian_reduction(c, system, field=None, strategy="auto"):
    """The graded quotient k[c]/(Theta) for an l.s.o.p. Theta."""
    if field is not None and field is not system.field:
        raise ShapeMismatch("requested field disagrees with the system's field")
    return GradedQuotient(c, system, strategy=strategy)


def multiplication_map(quotient, linear_form, i):
    """Multiplication by a degree-one form as a matrix between graded pieces."""
    if not 0 <= i < quotient.d:
        raise DegreeOutOfRange("degree %d outside 0..%d" % (i, quotient.d - 1))
    return quotient.multiplication_matrix(linear_form, i)


def face_monomial_class(quotient, face):
    """Coordinates of the squarefree face monomial x_face in its degree basis."""
    f = tuple(sorted(face))
    if not quotient.complex.has_face(f):
        raise NotAFace("%r is not a face" % (f,))
    return quotient.reduce_monomial(f)


@dataclass(frozen=True)
class SocleReport:
    """Socle dimensions and coordinate bases per degree 1..d."""

    dims: tuple
    bases: tuple

    def dim(self, i):
        return self.dims[i - 1]


def socle(quotient):
    """Joint kernel of multiplication by every vertex variable, per degree."""
    field = quotient.field
    dims = []
    bases = []
    for i in range(1, quotient.d + 1):
        ncols = quotient.dimension(i)
        if ncols == 0:
            dims.append(0)
            bases.append(())
            continue
        stacked = []
        for v in quotient.vertices:
            stacked.extend(quotient.vertex_multiplication(v, i).rows)
        mat = Matrix(field, stacked, ncols=ncols)
        ker = exactla.kernel_basis(mat)
        dims.append(ker.ncols)
        bases.append(tuple(tuple(ker.column(j)) for j in range(ker.ncols)))
    return SocleReport(dims=tuple(dims), bases=tuple(bases))


# ---- Hilbert data ----------------------------------------------------------


def hilbert_function(c, i_max):
    """Exact dims of k[c] in degrees 0..i_max (combinatorial count)."""
    return GradedVector((count_face_monomials(c, i) for i in range(i_max + 1)),
                        kind="hilbert")


@dataclass(frozen=True)
class HilbertSeries:
    """Rational form: numerator over (1 - t)^denominator_power."""

    numerator: tuple
    denominator_power: int

    def expand(self, i_max):
        d = self.denominator_power
        h = self.numerator
        out = []
        for i in range(i_max + 1):
            if d == 0:
                out.append(h[i] if i < len(h) else 0)
            else:
                out.append(sum(h[j] * comb(d - 1 + i - j, i - j)
                               for j in range(min(i, len(h) - 1) + 1)))
        return tuple(out)


def hilbert_series(c):
    """Hilbert series of k[c] as h-polynomial over (1 - t)^d."""
    d = c.dim + 1
    h = tuple(f_to_h(f_vector(c), d))
    return HilbertSeries(numerator=h, denominator_power=d)
