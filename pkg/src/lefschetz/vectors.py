"""Face, h- and g-vectors, Macaulay pseudopowers, and M-sequence tests.

Conventions.  For a (d-1)-dimensional complex the f-vector is
(f_0, ..., f_{d-1}) with f_{-1} = 1 implicit, the h-vector has length d+1,
and the g-vector is (g_0, ..., g_{floor(d/2)}) with g_0 = 1 and
g_i = h_i - h_{i-1}.  All arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import BadIndex, LawViolated, LengthMismatch


class GradedVector(tuple):
    """An integer vector graded by degree, tagged with its kind (f, h, g, ...)."""

    def __new__(cls, entries, kind=""):
        self = super().__new__(cls, (int(x) for x in entries))
        self.kind = kind
        return self

    def __repr__(self):
        return "GradedVector(%s%s)" % (tuple(self),
                                       ", kind=%r" % self.kind if self.kind else "")


# ---- f / h / g -----------------------------------------------------------


def f_vector(c):
    """Face counts (f_0, ..., f_dim) of a complex."""
    return GradedVector(c.face_counts(), kind="f")


def f_to_h(f, d=None):
    """h-vector from the f-vector: h_i = sum_j (-1)^(i-j) C(d-j, d-i) f_{j-1}."""
    f = tuple(f)
    if d is None:
        d = len(f)
    if len(f) != d:
        raise LengthMismatch("f-vector must have length d = %d, got %d" % (d, len(f)))
    full = (1,) + f
    h = []
    for i in range(d + 1):
        h.append(sum((-1) ** (i - j) * comb(d - j, d - i) * full[j]
                     for j in range(i + 1)))
    return GradedVector(h, kind="h")


def h_to_f(h, d=None):
    """f-vector from the h-vector: f_{i-1} = sum_j C(d-j, d-i) h_j."""
    h = tuple(h)
    if d is None:
        d = len(h) - 1
    if len(h) != d + 1:
        raise LengthMismatch("h-vector must have length d+1 = %d, got %d"
                             % (d + 1, len(h)))
    f = []
    for i in range(1, d + 1):
        f.append(sum(comb(d - j, d - i) * h[j] for j in range(i + 1)))
    return GradedVector(f, kind="f")


def h_vector(c, d=None):
    """h-vector of a complex, through its f-vector."""
    if d is None:
        d = c.dim + 1
    return f_to_h(f_vector(c), d)


def g_vector(h):
    """g-vector (1, h_1 - h_0, ...) up to index floor(d/2)."""
    h = tuple(h)
    d = len(h) - 1
    g = [1]
    for i in range(1, d // 2 + 1):
        g.append(h[i] - h[i - 1])
    return GradedVector(g, kind="g")


# ---- Macaulay pseudopowers and M-sequences --------------------------------


def macaulay_expansion(a, i):
    """The unique expansion a = C(a_i, i) + ... + C(a_j, j) with
    a_i > a_{i-1} > ... > a_j >= j >= 1, as a list of (a_k, k) pairs."""
    if i < 1:
        raise BadIndex("expansion index must be >= 1")
    if a < 0:
        raise ValueError("expansion requires a >= 0")
    out = []
    rem = a
    k = i
    while rem > 0:
        n = k
        while comb(n + 1, k) <= rem:
            n += 1
        out.append((n, k))
        rem -= comb(n, k)
        k -= 1
    return out


def pseudopower(a, i):
    """Macaulay upper bound a^<i>; by convention 0^<i> = 0."""
    if a == 0:
        return 0
    return sum(comb(n + 1, k + 1) for n, k in macaulay_expansion(a, i))


@dataclass(frozen=True)
class MSequenceResult:
    ok: bool
    first_failure: int | None = None

    def __bool__(self):
        return self.ok


def is_m_sequence(k):
    """Test k_0 = 1 and 0 <= k_{i+1} <= k_i^<i> for all i >= 1."""
    k = tuple(k)
    if not k or k[0] != 1:
        return MSequenceResult(False, 0)
    for i in range(1, len(k)):
        if k[i] < 0:
            return MSequenceResult(False, i)
        if i >= 2 and k[i] > pseudopower(k[i - 1], i - 1):
            return MSequenceResult(False, i)
    return MSequenceResult(True, None)


# ---- sphere h-vector conditions and counting inequalities -----------------


@dataclass(frozen=True)
class GConditionReport:
    h: tuple
    symmetric: bool
    unimodal: bool
    g_is_m: bool
    g: tuple

    @property
    def all_hold(self):
        return self.symmetric and self.unimodal and self.g_is_m


def check_g_conditions(h):
    """Symmetry h_i = h_{d-i}, unimodality up to the middle, and g an M-sequence."""
    h = tuple(h)
    d = len(h) - 1
    symmetric = all(h[i] == h[d - i] for i in range(d + 1))
    mid = d // 2
    unimodal = all(h[i] <= h[i + 1] for i in range(mid)) if d >= 1 else True
    g = g_vector(h)
    return GConditionReport(h=h, symmetric=symmetric, unimodal=unimodal,
                            g_is_m=bool(is_m_sequence(g)), g=tuple(g))


@dataclass(frozen=True)
class InequalityReport:
    lhs: int
    rhs: int
    holds: bool


def gks_inequality(c):
    """Top-degree face-count bound f_d <= (d+2) f_{d-1} for a d-dimensional complex.

    For graphs (d = 1) this is the edge bound f_1 <= 3 f_0.
    """
    d = c.dim
    if d < 1:
        raise ValueError("inequality needs dimension >= 1")
    f = c.face_counts()
    lhs, rhs = f[d], (d + 2) * f[d - 1]
    return InequalityReport(lhs=lhs, rhs=rhs, holds=lhs <= rhs)


# ---- g-vector law across bistellar moves ----------------------------------


@dataclass(frozen=True)
class GDeltaReport:
    move_index: int
    g_before: tuple
    g_after: tuple
    expected_after: tuple
    holds: bool


def expected_g_after_move(g_before, k, manifold_dim):
    """Predicted g-vector after a bistellar k-move on a d-manifold.

    For 0 <= k <= floor((d-1)/2), g_{k+1} goes up by one; for even d and
    k = d/2 nothing changes; a k-move with k > d/2 is the inverse of a
    (d-k)-move, so g_{d-k+1} goes down by one.
    """
    d = manifold_dim
    g = list(g_before)
    if k <= (d - 1) // 2:
        g[k + 1] += 1
    elif d % 2 == 0 and k == d // 2:
        pass
    else:
        g[d - k + 1] -= 1
    return tuple(g)


def pachner_g_delta(before, after, move):
    """Check the exact g-vector increment law across one bistellar move."""
    if before.dim != after.dim:
        raise LawViolated("move changed the dimension")
    d = before.dim
    gb = tuple(g_vector(h_vector(before)))
    ga = tuple(g_vector(h_vector(after)))
    expected = expected_g_after_move(gb, move.index, d)
    report = GDeltaReport(move_index=move.index, g_before=gb, g_after=ga,
                          expected_after=expected, holds=ga == expected)
    if not report.holds:
        raise LawViolated("g-vector law fails for %r: before %s, after %s, expected %s"
                          % (move, gb, ga, expected))
    return report
