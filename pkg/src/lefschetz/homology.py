"""Reduced simplicial homology over a field, and the link conditions built on it.

Betti numbers come from exact ranks of boundary matrices of the augmented
chain complex, so beta(-1) is defined and equals 1 exactly for the empty
complex { emptyset }.  The classification predicates (homology manifold and
sphere, Reisner's Cohen-Macaulay criterion, Gorenstein*, Buchsbaum,
orientability) are all phrased through link homology and are cached per
(complex, field).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import exactla
from .complexes import link
from .errors import NotAManifold, NotConnected
from .exactla import QQ, Matrix


@dataclass(frozen=True)
class BettiProfile:
    """Reduced Betti numbers beta(-1), beta(0), ..., beta(dim)."""

    dim: int
    entries: tuple

    def __getitem__(self, i):
        if -1 <= i <= self.dim:
            return self.entries[i + 1]
        return 0

    def reduced(self):
        """The tuple (beta(0), ..., beta(dim))."""
        return self.entries[1:]

    def is_sphere(self, k):
        """True if the profile matches the (reduced) homology of S^k."""
        return all(self[i] == (1 if i == k else 0) for i in range(-1, self.dim + 1))


def boundary_matrix(c, k, field=QQ):
    """Matrix of the boundary map C_k -> C_{k-1} of the augmented complex."""
    sources = c.faces(k)
    targets = c.faces(k - 1)
    index = {f: j for j, f in enumerate(targets)}
    rows = [[field.zero] * len(sources) for _ in targets]
    one = field.one
    for col, f in enumerate(sources):
        for j in range(len(f)):
            tgt = f[:j] + f[j + 1:]
            sign = one if j % 2 == 0 else -one
            if field.char != 0:
                sign = sign % field.prime
            rows[index[tgt]][col] = sign
    return Matrix(field, rows, ncols=len(sources))


@lru_cache(maxsize=None)
def reduced_betti(c, field=QQ):
    """Reduced Betti numbers of a complex over the given field."""
    D = c.dim
    ranks = [exactla.rank(boundary_matrix(c, k, field)) for k in range(D + 1)]
    ranks.append(0)  # boundary out of degree D+1
    entries = []
    # degree -1: C_{-1} is one-dimensional for every complex we admit
    entries.append(1 - (ranks[0] if D >= 0 else 0))
    for k in range(D + 1):
        f_k = len(c.faces(k))
        entries.append(f_k - ranks[k] - ranks[k + 1])
    return BettiProfile(dim=D, entries=tuple(entries))


def is_connected(c):
    """Connectivity of the 1-skeleton (union-find on vertices)."""
    verts = c.vertices
    if len(verts) <= 1:
        return True
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for (a, b) in c.faces(1):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in verts}) == 1


@lru_cache(maxsize=None)
def is_homology_manifold(c, field=QQ):
    """Every nonempty face has a link with the homology of the complementary sphere."""
    if not c.is_pure():
        return False
    D = c.dim
    for k in range(D + 1):
        for face in c.faces(k):
            lk = link(c, face)
            if not reduced_betti(lk, field).is_sphere(D - k - 1):
                return False
    return True


@lru_cache(maxsize=None)
def is_homology_sphere(c, field=QQ):
    """Homology manifold with the global homology of S^dim."""
    return (is_homology_manifold(c, field)
            and reduced_betti(c, field).is_sphere(c.dim))


@lru_cache(maxsize=None)
def is_cohen_macaulay(c, field=QQ):
    """Reisner's criterion: links (including the whole complex) have vanishing
    homology below their dimension."""
    for k in range(-1, c.dim + 1):
        for face in c.faces(k):
            lk = link(c, face)
            betti = reduced_betti(lk, field)
            if any(betti[i] != 0 for i in range(-1, lk.dim)):
                return False
    return True


def is_gorenstein_star(c, field=QQ):
    """Gorenstein* over the field, which for complexes means: homology sphere."""
    return is_homology_sphere(c, field)


@lru_cache(maxsize=None)
def is_buchsbaum(c, field=QQ):
    """Pure, with every nonempty face's link Cohen-Macaulay."""
    if not c.is_pure():
        return False
    for k in range(c.dim + 1):
        for face in c.faces(k):
            if not is_cohen_macaulay(link(c, face), field):
                return False
    return True


def is_orientable(c, field=QQ):
    """Top Betti number equal to 1, for a connected homology manifold."""
    if not is_homology_manifold(c, field):
        raise NotAManifold("orientability requires a homology manifold")
    if not is_connected(c):
        raise NotConnected("orientability check requires a connected complex")
    return reduced_betti(c, field)[c.dim] == 1


@dataclass(frozen=True)
class Classification:
    connected: bool
    homology_manifold: bool
    homology_sphere: bool
    cohen_macaulay: bool
    gorenstein_star: bool
    buchsbaum: bool
    orientable: bool | None


def classify(c, field=QQ):
    """All link-based classifications of a complex over one field."""
    manifold = is_homology_manifold(c, field)
    connected = is_connected(c)
    orientable = None
    if manifold and connected:
        orientable = reduced_betti(c, field)[c.dim] == 1
    return Classification(
        connected=connected,
        homology_manifold=manifold,
        homology_sphere=is_homology_sphere(c, field),
        cohen_macaulay=is_cohen_macaulay(c, field),
        gorenstein_star=is_gorenstein_star(c, field),
        buchsbaum=is_buchsbaum(c, field),
        orientable=orientable,
    )
