"""Finite abstract simplicial complexes and bistellar moves.

A complex is stored by its facets.  Canonical form: every face is a strictly
increasing tuple of positive integer vertex labels, the facet list is sorted,
and no facet contains another.  Instances are immutable and hashable, so
classification results can be cached per complex.

Local operations (link, star, deletion, join, cone, stellar subdivision) all
return new complexes in canonical form.  Bistellar i-moves follow the usual
convention: for a pure D-dimensional complex, an i-move removes the star of a
(D-i)-face sigma whose link is the boundary of an i-simplex on a vertex set
tau that is not itself a face, and glues in (boundary of sigma) * (simplex on
tau).  A 0-move is the stellar subdivision of a facet; a D-move is its
inverse.  Seeded random walks over these moves generate certified PL-spheres
from boundaries of simplices.
"""

from __future__ import annotations

import itertools
import json
import random

from .errors import (
    BadIndex,
    EmptyFace,
    InvalidMove,
    NoMoveAvailable,
    NotAFace,
    NotPure,
    ParseError,
    VertexCollision,
)


def canonical_face(face):
    """Sorted tuple of distinct positive integer labels."""
    t = tuple(sorted(face))
    for a, b in zip(t, t[1:]):
        if a == b:
            raise ValueError("repeated vertex %r in face %r" % (a, face))
    for v in t:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValueError("vertex labels must be positive integers, got %r" % (v,))
    return t


class SimplicialComplex:
    """Immutable simplicial complex given by generating faces.

    The constructor keeps the maximal faces of the input family, so passing
    any family of faces (not necessarily facets) is fine.  At least one face
    is required; ``SimplicialComplex([()])`` is the (-1)-dimensional complex
    whose only face is the empty set (it arises as the link of a facet).
    """

    __slots__ = ("facets", "vertices", "dim", "_face_set", "_faces_by_dim", "_hash")

    def __init__(self, faces):
        gens = sorted({canonical_face(f) for f in faces}, key=lambda f: (-len(f), f))
        if not gens:
            raise ValueError("a complex needs at least one face (use [()] for the empty face)")
        maximal = []
        for f in gens:
            fs = set(f)
            if not any(fs <= set(g) for g in maximal):
                maximal.append(f)
        object.__setattr__(self, "facets", tuple(sorted(maximal)))
        verts = sorted({v for f in maximal for v in f})
        object.__setattr__(self, "vertices", tuple(verts))
        object.__setattr__(self, "dim", max(len(f) for f in maximal) - 1)
        object.__setattr__(self, "_face_set", None)
        object.__setattr__(self, "_faces_by_dim", None)
        object.__setattr__(self, "_hash", hash(self.facets))

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "SimplicialComplex(%d vertices, dim %d, %d facets)" % (
            len(self.vertices), self.dim, len(self.facets))

    # -- face queries ------------------------------------------------------

    def _build_faces(self):
        allf = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                allf.update(itertools.combinations(f, k))
        object.__setattr__(self, "_face_set", frozenset(allf))
        by_dim = {}
        for f in allf:
            by_dim.setdefault(len(f) - 1, []).append(f)
        object.__setattr__(self, "_faces_by_dim",
                           {k: tuple(sorted(v)) for k, v in by_dim.items()})

    @property
    def face_set(self):
        if self._face_set is None:
            self._build_faces()
        return self._face_set

    def faces(self, k):
        """All k-dimensional faces, sorted.  k = -1 gives the empty face."""
        if self._faces_by_dim is None:
            self._build_faces()
        return self._faces_by_dim.get(k, ())

    def has_face(self, face):
        try:
            f = canonical_face(face)
        except ValueError:
            return False
        return f in self.face_set

    def face_counts(self):
        """Tuple (f_0, ..., f_dim)."""
        return tuple(len(self.faces(k)) for k in range(self.dim + 1))

    def is_pure(self):
        return len({len(f) for f in self.facets}) == 1

    def euler_characteristic(self):
        return sum((-1) ** k * len(self.faces(k)) for k in range(self.dim + 1))


# ---- local operations ----------------------------------------------------


def _require_face(c, face, allow_empty=False):
    f = canonical_face(face)
    if not allow_empty and not f:
        raise EmptyFace("operation requires a nonempty face")
    if f not in c.face_set:
        raise NotAFace("%r is not a face of the complex" % (f,))
    return f


def link(c, face):
    """Link of a face: all tau with tau ∪ face a face and tau ∩ face empty."""
    f = _require_face(c, face, allow_empty=True)
    fs = set(f)
    return SimplicialComplex(
        [tuple(v for v in F if v not in fs) for F in c.facets if fs <= set(F)])


def star(c, face):
    """Closed star: all tau with tau ∪ face a face of the complex."""
    f = _require_face(c, face, allow_empty=True)
    fs = set(f)
    return SimplicialComplex([F for F in c.facets if fs <= set(F)])


def deletion(c, face):
    """All faces not containing the given nonempty face."""
    f = _require_face(c, face)
    fs = set(f)
    gens = []
    for F in c.facets:
        if fs <= set(F):
            gens.extend(tuple(w for w in F if w != v) for v in f)
        else:
            gens.append(F)
    return SimplicialComplex(gens)


def join(a, b):
    """Simplicial join; vertex label sets must be disjoint."""
    overlap = set(a.vertices) & set(b.vertices)
    if overlap:
        raise VertexCollision("join operands share labels %s" % sorted(overlap))
    return SimplicialComplex([fa + fb for fa in a.facets for fb in b.facets])


def relabel(c, mapping):
    """Relabel vertices through an injective map (dict or callable)."""
    f = mapping.__getitem__ if isinstance(mapping, dict) else mapping
    images = [f(v) for v in c.vertices]
    if len(set(images)) != len(images):
        raise VertexCollision("relabeling map is not injective on the vertex set")
    return SimplicialComplex([tuple(f(v) for v in F) for F in c.facets])


def fresh_vertex(c):
    """Smallest unused positive label: max(vertices) + 1."""
    return (max(c.vertices) + 1) if c.vertices else 1


def cone(c, apex=None):
    """Cone with a fresh apex label (max + 1) unless one is supplied."""
    a = fresh_vertex(c) if apex is None else apex
    if a in c.vertices:
        raise VertexCollision("apex %r already a vertex" % (a,))
    return SimplicialComplex([F + (a,) for F in c.facets])


def stellar_subdivision(c, face):
    """Stellar subdivision at a face; a vertex subdivision returns c itself."""
    f = _require_face(c, face)
    if len(f) == 1:
        return c
    a = fresh_vertex(c)
    fs = set(f)
    gens = [F for F in c.facets if not fs <= set(F)]
    for F in c.facets:
        if fs <= set(F):
            for v in f:
                gens.append(tuple(sorted((set(F) - {v}) | {a})))
    return SimplicialComplex(gens)


# ---- bistellar moves -----------------------------------------------------


class BistellarMove:
    """An i-move: replace star(face) by boundary(face) * simplex(replacement)."""

    __slots__ = ("index", "face", "replacement")

    def __init__(self, index, face, replacement):
        object.__setattr__(self, "index", int(index))
        object.__setattr__(self, "face", canonical_face(face))
        object.__setattr__(self, "replacement", canonical_face(replacement))

    def __setattr__(self, name, value):
        raise AttributeError("BistellarMove is immutable")

    def __eq__(self, other):
        return (isinstance(other, BistellarMove)
                and (self.index, self.face, self.replacement)
                == (other.index, other.face, other.replacement))

    def __hash__(self):
        return hash((self.index, self.face, self.replacement))

    def __repr__(self):
        return "BistellarMove(%d, %r, %r)" % (self.index, self.face, self.replacement)

    def to_dict(self):
        return {"index": self.index, "face": list(self.face),
                "replacement": list(self.replacement)}

    @classmethod
    def from_dict(cls, d):
        return cls(d["index"], d["face"], d["replacement"])


def reverse_move(move):
    """The inverse move: applying both returns the original complex."""
    return BistellarMove(len(move.face) - 1, move.replacement, move.face)


def _is_simplex_boundary(c, verts):
    """True if c equals the boundary complex of the simplex on verts."""
    n = len(verts)
    if set(c.vertices) != set(verts):
        return False
    want = tuple(sorted(itertools.combinations(sorted(verts), n - 1)))
    return c.facets == want


def find_bistellar_moves(c, i):
    """All valid i-moves on a pure complex, sorted by the face they remove.

    A (D-i)-face sigma admits an i-move when its link has exactly i+1
    vertices, every i-subset of them is a face of the link, the full set is
    not, and (for i >= 1) that vertex set is not a face of the complex.
    For i = 0 the replacement is a fresh vertex, max(labels) + 1.
    """
    if not c.is_pure():
        raise NotPure("bistellar moves require a pure complex")
    D = c.dim
    if not 0 <= i <= D:
        raise BadIndex("move index %d out of range 0..%d" % (i, D))
    moves = []
    if i == 0:
        new = (fresh_vertex(c),)
        return [BistellarMove(0, F, new) for F in c.facets]
    for sigma in c.faces(D - i):
        lk = link(c, sigma)
        tau = lk.vertices
        if len(tau) != i + 1:
            continue
        if not _is_simplex_boundary(lk, tau):
            continue
        if c.has_face(tau):
            continue
        moves.append(BistellarMove(i, sigma, tau))
    return moves


def apply_bistellar(c, move, validate=True):
    """Apply a bistellar move, returning the new complex."""
    D = c.dim
    i = move.index
    sigma, tau = move.face, move.replacement
    if validate:
        if not c.is_pure():
            raise NotPure("bistellar moves require a pure complex")
        if not 0 <= i <= D:
            raise InvalidMove("index %d out of range 0..%d" % (i, D))
        if len(sigma) != D - i + 1:
            raise InvalidMove("face %r has wrong size for a %d-move" % (sigma, i))
        if not c.has_face(sigma):
            raise InvalidMove("%r is not a face" % (sigma,))
        if len(tau) != i + 1:
            raise InvalidMove("replacement %r has wrong size for a %d-move" % (tau, i))
        if set(sigma) & set(tau):
            raise InvalidMove("face and replacement overlap")
        if i == 0:
            if tau[0] in c.vertices:
                raise InvalidMove("0-move replacement %r is not fresh" % (tau,))
        else:
            if c.has_face(tau):
                raise InvalidMove("replacement %r is already a face" % (tau,))
            lk = link(c, sigma)
            if set(lk.vertices) != set(tau) or not _is_simplex_boundary(lk, tau):
                raise InvalidMove("link of %r is not the boundary simplex on %r"
                                  % (sigma, tau))
    ss = set(sigma)
    gens = [F for F in c.facets if not ss <= set(F)]
    for v in sigma:
        gens.append(tuple(sorted((ss - {v}) | set(tau))))
    return SimplicialComplex(gens)


# ---- seeded walks --------------------------------------------------------


def _walk_candidates(c, prev_move, vertex_cap):
    D = c.dim
    moves = []
    for i in range(D + 1):
        moves.extend(find_bistellar_moves(c, i))
    if prev_move is not None:
        rev = reverse_move(prev_move)
        moves = [m for m in moves if m != rev]
    if vertex_cap is not None and len(c.vertices) >= vertex_cap:
        non_grow = [m for m in moves if m.index != 0]
        if non_grow:
            moves = non_grow
    return moves


def random_pachner_walk(c, steps, rng, policy="uniform", vertex_cap=None):
    """Seeded random walk of bistellar moves.

    Returns a list of (complex, move) pairs of length steps + 1; the first
    entry is (c, None).  The reverse of the previous move is always excluded.
    Policies: "uniform" picks uniformly over all valid moves, "index-uniform"
    first picks a move index uniformly among those with a valid move, then a
    move of that index; a callable policy(rng, complex, moves) may be given.
    vertex_cap, if set, suppresses vertex-adding 0-moves once the complex has
    that many vertices (whenever an alternative exists), which keeps long
    walks at desk scale.
    """
    if isinstance(rng, int):
        rng = random.Random(rng)
    path = [(c, None)]
    prev = None
    cur = c
    for _ in range(steps):
        moves = _walk_candidates(cur, prev, vertex_cap)
        if not moves:
            raise NoMoveAvailable("no valid move at step %d" % len(path))
        if callable(policy):
            mv = policy(rng, cur, moves)
        elif policy == "uniform":
            mv = rng.choice(moves)
        elif policy == "index-uniform":
            by_index = {}
            for m in moves:
                by_index.setdefault(m.index, []).append(m)
            idx = rng.choice(sorted(by_index))
            mv = rng.choice(by_index[idx])
        else:
            raise ValueError("unknown walk policy %r" % (policy,))
        cur = apply_bistellar(cur, mv, validate=False)
        path.append((cur, mv))
        prev = mv
    return path


# ---- generators ----------------------------------------------------------


def simplex(n_vertices, offset=0):
    """The full simplex on labels offset+1 .. offset+n_vertices."""
    if n_vertices < 1:
        raise ValueError("simplex needs at least one vertex")
    return SimplicialComplex([tuple(range(offset + 1, offset + n_vertices + 1))])


def boundary_simplex(d, offset=0):
    """Boundary of the d-simplex: a (d-1)-sphere on d+1 vertices."""
    if d < 1:
        raise ValueError("boundary_simplex requires d >= 1")
    verts = range(offset + 1, offset + d + 2)
    return SimplicialComplex(list(itertools.combinations(verts, d)))


def cross_polytope_boundary(d):
    """Boundary of the d-dimensional cross-polytope: a (d-1)-sphere on 2d vertices.

    Vertices j and j+d are antipodal; facets pick one vertex from each pair.
    """
    if d < 1:
        raise ValueError("cross_polytope_boundary requires d >= 1")
    gens = []
    for signs in itertools.product((0, 1), repeat=d):
        gens.append(tuple(sorted(j + 1 + d * s for j, s in enumerate(signs))))
    return SimplicialComplex(gens)


def kuehnel_torus():
    """The 7-vertex triangulated torus (vertices 1..7, 14 facets).

    Facet orbits {i, i+1, i+3} and {i, i+2, i+3} mod 7.
    """
    gens = []
    for i in range(7):
        gens.append(tuple(sorted(((i + k) % 7) + 1 for k in (0, 1, 3))))
        gens.append(tuple(sorted(((i + k) % 7) + 1 for k in (0, 2, 3))))
    return SimplicialComplex(gens)


def projective_plane():
    """The 6-vertex real projective plane (antipodal icosahedron quotient)."""
    gens = [(1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6),
            (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6)]
    return SimplicialComplex(gens)


# ---- file formats --------------------------------------------------------


def parse_facets(text):
    """Read the facet-list text format: one facet per line, '#' comments."""
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            face = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise ParseError("expected whitespace-separated integers, got %r" % line,
                             line=lineno)
        if any(v < 1 for v in face):
            raise ParseError("vertex labels must be positive", line=lineno)
        if len(set(face)) != len(face):
            raise ParseError("repeated vertex in facet %r" % (face,), line=lineno)
        gens.append(face)
    if not gens:
        raise ParseError("no facets found")
    return SimplicialComplex(gens)


def format_facets(c):
    """Canonical facet-list text for a complex (inverse of parse_facets)."""
    return "\n".join(" ".join(str(v) for v in F) for F in c.facets) + "\n"


def complex_to_json(c):
    return {"facets": [list(F) for F in c.facets]}


def complex_from_json(obj):
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as e:
            raise ParseError("bad JSON: %s" % e)
    if not isinstance(obj, dict) or "facets" not in obj:
        raise ParseError('structured complex must be {"facets": [[...], ...]}')
    facets = obj["facets"]
    if not isinstance(facets, list) or not facets:
        raise ParseError("facets must be a nonempty list")
    try:
        return SimplicialComplex([tuple(F) for F in facets])
    except (TypeError, ValueError) as e:
        raise ParseError(str(e))


def load_complex(path):
    """Read a complex from a file, JSON or facet-list text by content."""
    with open(path) as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return complex_from_json(stripped)
    return parse_facets(text)
