"""Exact linear algebra over Q and F_p, checked against sympy and a
test-local modular elimination oracle."""

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from lefschetz.exactla import (
    DEFAULT_PRIME,
    GF,
    Matrix,
    QQ,
    _is_prime,
    _m61_mul,
    default_prime_field,
    det,
    identity,
    kernel_basis,
    mat_vec,
    matmul,
    parse_field,
    rank,
    random_matrix,
    rref,
    rref_rows,
    solve,
    spawn_rng,
    symmetric_lift,
)
from lefschetz.errors import ShapeMismatch

M61 = (1 << 61) - 1

# primes chosen to hit every elimination kernel: small word-size, the
# Mersenne fold, and the wide object-dtype fallback
KERNEL_PRIMES = [2, 3, 97, 2147483647, M61, 4294967311]


# ----------------------------------------------------------------------
#  oracles
# ----------------------------------------------------------------------


def oracle_rref_mod(rows, ncols, p):
    """Plain textbook Gauss-Jordan mod p, no numpy."""
    a = [[x % p for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(a)) if a[i][c]), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = pow(a[r][c], p - 2, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                g = a[i][c]
                a[i] = [(x - g * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def random_int_rows(rng, nrows, ncols, lo=-40, hi=40, rank_deficit=False):
    rows = [[rng.randint(lo, hi) for _ in range(ncols)] for _ in range(nrows)]
    if rank_deficit and nrows >= 2:
        k = rng.randrange(1, nrows)
        rows[k] = [2 * x + 3 * y for x, y in zip(rows[0], rows[k - 1])]
    return rows


# ----------------------------------------------------------------------
#  fields
# ----------------------------------------------------------------------


def test_prime_field_is_cached_and_validated():
    assert GF(7) is GF(7)
    assert GF(7) is not GF(11)
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ValueError):
        GF(1)


def test_is_prime_knowns():
    assert _is_prime(2) and _is_prime(3) and _is_prime(97)
    assert _is_prime(M61)
    assert _is_prime(4294967311)
    for n in (0, 1, 4, 9, 15, 561, 1 << 61, M61 - 1):
        assert not _is_prime(n)


def test_prime_field_convert():
    f = GF(7)
    assert f.convert(-1) == 6
    assert f.convert(Fraction(1, 2)) == 4
    assert f.convert(Fraction(3, 5)) == 3 * pow(5, 5, 7) % 7
    with pytest.raises(ZeroDivisionError):
        f.convert(Fraction(1, 7))


def test_rational_field_convert():
    assert QQ.convert(3) == Fraction(3)
    assert QQ.convert(Fraction(2, 4)) == Fraction(1, 2)
    assert QQ.zero == 0 and QQ.one == 1


def test_parse_field():
    assert parse_field("q") is QQ
    assert parse_field("QQ") is QQ
    assert parse_field("fp") is default_prime_field()
    assert parse_field("fp:97") is GF(97)
    assert default_prime_field().prime == DEFAULT_PRIME
    with pytest.raises(ValueError):
        parse_field("gf2")
    with pytest.raises(ValueError):
        parse_field("fp:8")


def test_symmetric_lift():
    assert symmetric_lift(6, 7) == -1
    assert symmetric_lift(3, 7) == 3
    assert symmetric_lift(4, 8 - 1) == -3
    p = 101
    for x in range(-250, 250):
        y = symmetric_lift(x, p)
        assert (y - x) % p == 0
        assert -p // 2 <= y <= p // 2


def test_spawn_rng_deterministic_streams():
    a = [spawn_rng(9, 4).random() for _ in range(3)]
    b = [spawn_rng(9, 4).random() for _ in range(3)]
    c = [spawn_rng(9, 5).random() for _ in range(3)]
    assert a == b
    assert a != c


# ----------------------------------------------------------------------
#  the Mersenne multiply kernel
# ----------------------------------------------------------------------


@given(st.integers(min_value=0, max_value=M61 - 1),
       st.integers(min_value=0, max_value=M61 - 1))
def test_m61_mul_matches_bigint(a, b):
    import numpy as np
    got = int(_m61_mul(np.uint64(a), np.uint64(b)))
    assert got == a * b % M61


def test_m61_mul_edges():
    import numpy as np
    for a in (0, 1, 2, (1 << 31) - 1, 1 << 31, M61 - 1):
        for b in (0, 1, M61 - 1, (1 << 35) + 17):
            got = int(_m61_mul(np.uint64(a), np.uint64(b)))
            assert got == a * b % M61


# ----------------------------------------------------------------------
#  elimination over F_p against the local oracle
# ----------------------------------------------------------------------


@pytest.mark.parametrize("p", KERNEL_PRIMES)
def test_fp_rref_matches_oracle(p):
    rng = random.Random(p)
    for nrows, ncols in [(1, 1), (3, 5), (5, 3), (6, 6), (8, 4)]:
        for deficit in (False, True):
            rows = random_int_rows(rng, nrows, ncols, rank_deficit=deficit)
            got_rows, got_piv = rref_rows(GF(p), rows, ncols)
            exp_rows, exp_piv = oracle_rref_mod(rows, ncols, p)
            assert got_piv == exp_piv
            assert [[x % p for x in r] for r in got_rows] == exp_rows


def test_rref_empty_and_zero():
    assert rref_rows(GF(97), [], 4) == ([], [])
    assert rref_rows(QQ, [], 4) == ([], [])
    got, piv = rref_rows(GF(97), [[0, 0], [0, 0]], 2)
    assert got == [] and piv == []


# ----------------------------------------------------------------------
#  rank / det / kernel against sympy over Q
# ----------------------------------------------------------------------


def test_q_rank_det_match_sympy():
    rng = random.Random(17)
    for trial in range(12):
        n = rng.randrange(1, 6)
        m = rng.randrange(1, 6)
        rows = [[Fraction(rng.randint(-9, 9), rng.randint(1, 7))
                 for _ in range(m)] for _ in range(n)]
        mat = Matrix(QQ, rows)
        sym = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator)
                             for x in r] for r in rows])
        assert rank(mat) == sym.rank()
        if n == m:
            d = det(mat)
            assert sympy.Rational(d.numerator, d.denominator) == sym.det()


def test_fp_det_commutes_with_reduction():
    rng = random.Random(23)
    for p in (97, M61):
        for trial in range(6):
            n = rng.randrange(1, 6)
            rows = [[rng.randint(-30, 30) for _ in range(n)] for _ in range(n)]
            dz = int(sympy.Matrix(rows).det())
            dp = det(Matrix(GF(p), rows))
            assert dp == dz % p


def test_det_shape_and_singular():
    with pytest.raises(ShapeMismatch):
        det(Matrix(QQ, [[1, 2, 3], [4, 5, 6]]))
    assert det(Matrix(QQ, [[1, 2], [2, 4]])) == 0
    assert det(Matrix(GF(5), [[1, 2], [2, 4]])) == 0


def test_kernel_basis_annihilates():
    rng = random.Random(31)
    for field in (QQ, GF(97), GF(M61)):
        for trial in range(8):
            n, m = rng.randrange(1, 6), rng.randrange(1, 7)
            mat = Matrix(field, random_int_rows(rng, n, m, rank_deficit=True))
            ker = kernel_basis(mat)
            assert rank(mat) + ker.ncols == m
            if ker.ncols:
                prod = matmul(mat, ker)
                assert all(x == field.zero for r in prod.rows for x in r)
            assert rank(ker) == ker.ncols


def test_solve_roundtrip_and_inconsistent():
    rng = random.Random(41)
    for field in (QQ, GF(101)):
        for trial in range(8):
            n, m = rng.randrange(1, 6), rng.randrange(1, 6)
            mat = Matrix(field, random_int_rows(rng, n, m))
            x0 = [field.convert(rng.randint(-5, 5)) for _ in range(m)]
            b = mat_vec(mat, x0)
            x = solve(mat, b)
            assert x is not None
            assert mat_vec(mat, x) == b
    # plainly inconsistent: 0 = 1
    assert solve(Matrix(QQ, [[0, 0], [0, 0]]), [1, 0]) is None
    with pytest.raises(ShapeMismatch):
        solve(Matrix(QQ, [[1, 2]]), [1, 2])


# ----------------------------------------------------------------------
#  rref structure
# ----------------------------------------------------------------------


@pytest.mark.parametrize("field", [QQ, GF(97), GF(M61)])
def test_rref_is_idempotent_and_canonical(field):
    rng = random.Random(53)
    for trial in range(6):
        mat = Matrix(field,
                     random_int_rows(rng, rng.randrange(1, 6), rng.randrange(1, 6),
                                     rank_deficit=True))
        red, piv = rref(mat)
        again, piv2 = rref(red)
        assert again.rows == red.rows and piv2 == piv
        assert list(piv) == sorted(piv)
        for i, c in enumerate(piv):
            col = red.column(c)
            assert col[i] == field.one
            assert all(x == field.zero for j, x in enumerate(col) if j != i)


def test_matrix_shape_errors():
    with pytest.raises(ShapeMismatch):
        Matrix(QQ, [[1, 2], [3]])
    with pytest.raises(ShapeMismatch):
        Matrix(QQ, [])
    assert Matrix(QQ, [], ncols=3).shape == (0, 3)
    with pytest.raises(ShapeMismatch):
        matmul(Matrix(QQ, [[1, 2]]), Matrix(QQ, [[1, 2]]))
    with pytest.raises(ShapeMismatch):
        matmul(Matrix(QQ, [[1, 2]]), Matrix(GF(5), [[1], [2]]))
    with pytest.raises(ShapeMismatch):
        mat_vec(Matrix(QQ, [[1, 2]]), [1, 2, 3])


def test_matmul_identity_and_transpose():
    rng = random.Random(61)
    mat = random_matrix(3, 4, GF(97), rng)
    assert matmul(identity(GF(97), 3), mat).rows == mat.rows
    assert mat.transpose().transpose().rows == mat.rows
    assert mat.transpose().shape == (4, 3)
