"""Reduced homology and the link-based classification predicates.

The oracle below rebuilds augmented chain complexes from scratch with sympy
and never touches the package's matrix code.
"""

import itertools
import random

import pytest
import sympy
from hypothesis import given, strategies as st

from lefschetz import errors
from lefschetz.complexes import (
    SimplicialComplex,
    boundary_simplex,
    cone,
    cross_polytope_boundary,
    join,
    kuehnel_torus,
    projective_plane,
    random_pachner_walk,
)
from lefschetz.exactla import GF, QQ, matmul
from lefschetz.homology import (
    boundary_matrix,
    classify,
    is_buchsbaum,
    is_cohen_macaulay,
    is_connected,
    is_gorenstein_star,
    is_homology_manifold,
    is_homology_sphere,
    is_orientable,
    reduced_betti,
)


# ----------------------------------------------------------------------
#  oracle: augmented chain complex via sympy ranks
# ----------------------------------------------------------------------


def oracle_betti(c):
    """Reduced Betti numbers over Q, built independently with sympy."""
    faces = {k: sorted(c.faces(k)) for k in range(-1, c.dim + 1)}

    def bd(k):
        src, tgt = faces[k], faces.get(k - 1, [])
        idx = {f: i for i, f in enumerate(tgt)}
        m = sympy.zeros(len(tgt), len(src))
        for j, f in enumerate(src):
            for pos in range(len(f)):
                m[idx[f[:pos] + f[pos + 1:]], j] = (-1) ** pos
        return m

    def rk(m):
        if m.rows == 0 or m.cols == 0:
            return 0
        return m.rank()

    out = []
    for k in range(-1, c.dim + 1):
        rk_in = rk(bd(k + 1)) if k + 1 <= c.dim else 0
        rk_out = rk(bd(k))
        out.append(len(faces[k]) - rk_out - rk_in)
    return tuple(out)


def oracle_betti_gf(c, p):
    """Rank mod p done by hand on integer matrices (sympy's modular rank
    options are fussy, so eliminate explicitly)."""
    faces = {k: sorted(c.faces(k)) for k in range(-1, c.dim + 1)}

    def bd_rows(k):
        src, tgt = faces[k], faces.get(k - 1, [])
        idx = {f: i for i, f in enumerate(tgt)}
        rows = [[0] * len(src) for _ in tgt]
        for j, f in enumerate(src):
            for pos in range(len(f)):
                rows[idx[f[:pos] + f[pos + 1:]]][j] = (-1) ** pos
        return rows, len(src)

    def rk(rows, ncols, p):
        a = [[x % p for x in r] for r in rows]
        r = 0
        for ccol in range(ncols):
            pr = next((i for i in range(r, len(a)) if a[i][ccol]), None)
            if pr is None:
                continue
            a[r], a[pr] = a[pr], a[r]
            inv = pow(a[r][ccol], p - 2, p)
            a[r] = [x * inv % p for x in a[r]]
            for i in range(len(a)):
                if i != r and a[i][ccol]:
                    g = a[i][ccol]
                    a[i] = [(x - g * y) % p for x, y in zip(a[i], a[r])]
            r += 1
        return r

    out = []
    for k in range(-1, c.dim + 1):
        rows_out, ncols_out = bd_rows(k)
        rk_out = rk(rows_out, ncols_out, p)
        if k + 1 <= c.dim:
            rows_in, ncols_in = bd_rows(k + 1)
            rk_in = rk(rows_in, ncols_in, p)
        else:
            rk_in = 0
        out.append(len(faces[k]) - rk_out - rk_in)
    return tuple(out)


def betti_tuple(c, field=QQ):
    b = reduced_betti(c, field)
    return tuple(b[i] for i in range(-1, c.dim + 1))


# ----------------------------------------------------------------------
#  fixtures
# ----------------------------------------------------------------------


def two_circles():
    return SimplicialComplex([(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])


def test_sphere_betti():
    for d in (1, 2, 3, 4):
        assert betti_tuple(boundary_simplex(d + 1)) == (0,) * (d + 1) + (1,)
    assert betti_tuple(cross_polytope_boundary(3)) == (0, 0, 0, 1)


def test_empty_and_point():
    assert betti_tuple(SimplicialComplex([()])) == (1,)
    assert betti_tuple(SimplicialComplex([(1,)])) == (0, 0)
    assert betti_tuple(SimplicialComplex([(1,), (2,)])) == (0, 1)


def test_torus_betti():
    assert betti_tuple(kuehnel_torus()) == (0, 0, 2, 1)
    assert betti_tuple(kuehnel_torus(), GF(2)) == (0, 0, 2, 1)


def test_projective_plane_betti_depends_on_field():
    c = projective_plane()
    assert betti_tuple(c) == (0, 0, 0, 0)
    assert betti_tuple(c, GF(2)) == (0, 0, 1, 1)
    assert betti_tuple(c, GF(3)) == (0, 0, 0, 0)


@pytest.mark.parametrize("c", [boundary_simplex(3), cross_polytope_boundary(3),
                               kuehnel_torus(), projective_plane(), two_circles()])
def test_betti_matches_sympy_oracle(c):
    assert betti_tuple(c) == oracle_betti(c)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_betti_matches_modular_oracle(p):
    for c in (projective_plane(), kuehnel_torus(), two_circles()):
        assert betti_tuple(c, GF(p)) == oracle_betti_gf(c, p)


def test_random_complexes_match_oracle():
    rng = random.Random(71)
    verts = list(range(1, 7))
    for _ in range(12):
        k = rng.randrange(2, 4)
        pool = list(itertools.combinations(verts, k))
        facets = rng.sample(pool, rng.randrange(2, 7))
        c = SimplicialComplex(facets)
        assert betti_tuple(c) == oracle_betti(c)
        assert betti_tuple(c, GF(2)) == oracle_betti_gf(c, 2)


# ----------------------------------------------------------------------
#  structural identities
# ----------------------------------------------------------------------


def test_boundary_of_boundary_is_zero():
    for c in (boundary_simplex(4), kuehnel_torus(), projective_plane()):
        for k in range(1, c.dim + 1):
            prod = matmul(boundary_matrix(c, k - 1), boundary_matrix(c, k))
            assert all(x == 0 for row in prod.rows for x in row)


@pytest.mark.parametrize("c", [boundary_simplex(3), kuehnel_torus(),
                               projective_plane(), two_circles()])
def test_euler_characteristic_is_alternating_betti_sum(c):
    b = betti_tuple(c)
    chi_reduced = sum((-1) ** i * b[i + 1] for i in range(-1, c.dim + 1))
    assert c.euler_characteristic() - 1 == chi_reduced - b[0]


@given(st.lists(st.lists(st.integers(min_value=1, max_value=6),
                         min_size=1, max_size=3, unique=True),
                min_size=1, max_size=5))
def test_cone_is_acyclic(facets):
    c = SimplicialComplex([tuple(f) for f in facets])
    k = cone(c)
    assert betti_tuple(k) == (0,) * (k.dim + 2)


def test_join_of_spheres_is_sphere():
    c = join(boundary_simplex(2), boundary_simplex(2, offset=3))
    assert is_homology_sphere(c)
    assert betti_tuple(c) == (0, 0, 0, 0, 1)


# ----------------------------------------------------------------------
#  classification predicates
# ----------------------------------------------------------------------


def test_classify_octahedron():
    r = classify(cross_polytope_boundary(3))
    assert r.connected and r.homology_manifold and r.homology_sphere
    assert r.cohen_macaulay and r.gorenstein_star and r.buchsbaum
    assert r.orientable is True


def test_classify_torus():
    c = kuehnel_torus()
    r = classify(c)
    assert r.connected and r.homology_manifold and r.buchsbaum
    assert not r.homology_sphere and not r.cohen_macaulay
    assert not r.gorenstein_star
    assert r.orientable is True
    assert is_orientable(c)


def test_classify_projective_plane():
    c = projective_plane()
    assert is_cohen_macaulay(c)          # over Q
    assert not is_cohen_macaulay(c, GF(2))
    assert is_homology_manifold(c)
    assert not is_orientable(c)          # top betti over Q is 0
    assert is_orientable(c, GF(2))       # but 1 mod 2


def test_classify_disjoint_circles():
    c = two_circles()
    r = classify(c)
    assert not r.connected
    assert r.homology_manifold and r.buchsbaum
    assert not r.cohen_macaulay
    assert r.orientable is None
    with pytest.raises(errors.NotConnected):
        is_orientable(c)


def test_classify_non_pure():
    c = SimplicialComplex([(1, 2, 3), (3, 4)])
    r = classify(c)
    assert not r.homology_manifold and not r.buchsbaum
    assert not r.gorenstein_star
    with pytest.raises(errors.NotAManifold):
        is_orientable(c)


def test_buchsbaum_but_not_manifold():
    # three triangles sharing an edge: CM (hence Buchsbaum), not a manifold
    c = SimplicialComplex([(1, 2, 3), (1, 2, 4), (1, 2, 5)])
    assert is_cohen_macaulay(c)
    assert is_buchsbaum(c)
    assert not is_homology_manifold(c)


def test_connectivity():
    assert is_connected(boundary_simplex(3))
    assert not is_connected(two_circles())
    assert is_connected(SimplicialComplex([(1,)]))


def test_walk_preserves_sphere_classification():
    walk = random_pachner_walk(boundary_simplex(3), 15, 19)
    for cx, _ in walk[::5]:
        assert is_homology_sphere(cx)
        assert is_gorenstein_star(cx)
