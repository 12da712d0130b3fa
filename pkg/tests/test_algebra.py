import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from edgecore.algebra import (
    GF,
    QQ,
    DimensionError,
    FieldMismatch,
    Mat,
    Poly,
    determinant,
    intersect_row_spaces,
    kernel,
    parse_field,
    poly_mul,
    rank,
    row_reduce,
)
from edgecore.algebra.poly import Monomial, monomials_of_degree

small = st.integers(-6, 6)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


# --- fields -----------------------------------------------------------------------

def test_parse_field():
    assert parse_field("q") is QQ
    assert parse_field("fp:7") is GF(7)
    with pytest.raises(ValueError):
        parse_field("fp:4")
    with pytest.raises(ValueError):
        parse_field("r")


def test_rationals_lowest_terms():
    x = QQ(Fraction(6, -4))
    assert (x.numerator, x.denominator) == (-3, 2)


def test_fp_residue_range_and_inverse():
    F = GF(5)
    assert int(F(-1)) == 4
    assert F(3) * (1 / F(3)) == 1
    assert F(Fraction(1, 2)) == 3
    with pytest.raises(ZeroDivisionError):
        F(1) / F(0)


def test_fp_mixing_fields_fails():
    with pytest.raises(FieldMismatch):
        GF(3)(1) + GF(5)(1)
    with pytest.raises(FieldMismatch):
        QQ(GF(3)(1))


def test_fp_matches_integer_arithmetic():
    rng = random.Random(0)
    for _ in range(1000):
        p = rng.choice([2, 3, 5, 7, 101])
        a, b, c = (rng.randint(-10**6, 10**6) for _ in range(3))
        F = GF(p)
        assert int(F(a) * F(b) + F(c)) == (a * b + c) % p
        assert int(F(a) - F(b) * F(c)) == (a - b * c) % p


# --- row reduction ---------------------------------------------------------------

def test_row_reduce_examples():
    rref, rk, piv = row_reduce(Mat.identity(2, QQ))
    assert rref == Mat.identity(2, QQ) and rk == 2 and piv == [0, 1]
    rref, rk, _ = row_reduce(Mat([[1, 2], [2, 4]], QQ))
    assert rref.tolist() == [[1, 2], [0, 0]] and rk == 1
    assert rank(Mat([[1, 1], [1, -1]], GF(2))) == 1
    assert row_reduce(Mat([], QQ, 3))[1] == 0


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_row_reduce_against_sympy(rows):
    rref, rk, piv = row_reduce(Mat(rows, QQ))
    want, want_piv = oracles.rref_oracle(rows)
    assert rk == len(want_piv)
    assert piv == want_piv
    assert [list(r) for r in rref.rows[:rk]] == want


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_row_reduce_idempotent(rows):
    rref, _, _ = row_reduce(Mat(rows, QQ))
    assert row_reduce(rref)[0] == rref


@settings(max_examples=100, deadline=None)
@given(matrices(), st.randoms(use_true_random=False))
def test_rank_bounds_and_row_permutation(rows, rng):
    m = Mat(rows, QQ)
    rk = rank(m)
    assert rk <= min(m.nrows, m.ncols)
    perm = list(range(m.nrows))
    rng.shuffle(perm)
    assert rank(m.submatrix(perm)) == rk


# --- determinant ----------------------------------------------------------------

def test_determinant_examples():
    assert determinant(Mat.identity(3, QQ)) == 1
    b0 = [[0, 4, 0, -1], [-2, 0, 1, 0], [0, -3, 0, 2], [3, 0, -4, 0]]
    assert determinant(Mat(b0, QQ)) == 25
    assert determinant(Mat([[1, 1], [1, 1]], QQ)) == 0
    with pytest.raises(DimensionError):
        determinant(Mat([[1, 2, 3]], QQ))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
def test_determinant_against_sympy(rows):
    assert determinant(Mat(rows, QQ)) == oracles.det_oracle(rows)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.randoms(use_true_random=False))
def test_block_lower_triangular_determinant(a, b, rng):
    A = [[rng.randint(-5, 5) for _ in range(a)] for _ in range(a)]
    D = [[rng.randint(-5, 5) for _ in range(b)] for _ in range(b)]
    C = [[rng.randint(-5, 5) for _ in range(a)] for _ in range(b)]
    M = [A[i] + [0] * b for i in range(a)] + [C[i] + D[i] for i in range(b)]
    assert determinant(Mat(M, QQ)) == determinant(Mat(A, QQ)) * determinant(Mat(D, QQ))


def test_determinant_over_fp():
    assert determinant(Mat([[1, 2], [3, 4]], GF(5))) == GF(5)(-2)


# --- intersections and kernels ---------------------------------------------------

def test_intersection_examples():
    V = Mat([[1, 2, 0], [0, 1, 1]], QQ)
    assert rank(intersect_row_spaces([V, V])) == 2
    assert intersect_row_spaces([Mat([[1, 0]], QQ), Mat([[0, 1]], QQ)]).nrows == 0
    with pytest.raises(DimensionError):
        intersect_row_spaces([Mat([[1, 0]], QQ), Mat([[1, 0, 0]], QQ)])


def test_three_random_five_dim_subspaces():
    rng = random.Random(7)
    spaces = [[[rng.randint(-3, 3) for _ in range(10)] for _ in range(5)] for _ in range(3)]
    got = intersect_row_spaces([Mat(s, QQ) for s in spaces])
    assert got.nrows == oracles.intersection_dim(spaces, 10)


@settings(max_examples=60, deadline=None)
@given(matrices(4, 6), matrices(4, 6))
def test_intersection_dimension_formula(a, b):
    c = min(len(a[0]), len(b[0]))
    a = [r[:c] for r in a]
    b = [r[:c] for r in b]
    A, B = Mat(a, QQ), Mat(b, QQ)
    got = intersect_row_spaces([A, B]).nrows
    assert got == rank(A) + rank(B) - rank(A.vstack(B))


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_kernel_is_annihilated(rows):
    m = Mat(rows, QQ)
    k = kernel(m)
    assert k.nrows == m.ncols - rank(m)
    for v in k.rows:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in m.rows)


# --- polynomials ------------------------------------------------------------------

def x(i, n=4, F=QQ):
    return Poly.var(i - 1, n, F)


def test_poly_mul_examples():
    one = Poly.monomial(Monomial.one(4), QQ)
    f = x(1) * x(2)
    assert poly_mul(f, one) == f
    assert poly_mul(x(1) * x(2), x(3) * x(4)) == Poly.monomial((1, 1, 1, 1), QQ)
    e = [x(1) * x(2), x(2) * x(3), x(3) * x(4), x(1) * x(4)]
    g = poly_mul(e[0] + e[3], e[2] + e[3])
    assert len(g) == 4 and g.is_homogeneous and g.degree == 4


def test_poly_zero_terms_dropped():
    f = x(1) - x(1)
    assert not f and len(f) == 0
    assert not (x(1, F=GF(2)) + x(1, F=GF(2)))


def test_poly_field_mismatch():
    with pytest.raises(FieldMismatch):
        x(1) + x(1, F=GF(3))


def test_monomials_lex_order():
    mons = monomials_of_degree(3, 2)
    assert len(mons) == 6
    assert list(mons) == sorted(mons)
    assert all(m.degree == 2 for m in mons)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(st.lists(st.integers(0, 2), min_size=3, max_size=3), small), max_size=4),
       st.lists(st.tuples(st.lists(st.integers(0, 2), min_size=3, max_size=3), small), max_size=4))
def test_poly_mul_commutes_and_degrees_add(fa, ga):
    def build(terms):
        f = Poly.zero(QQ, 3)
        for e, c in terms:
            f = f + Poly.monomial(e, QQ, c)
        return f
    f, g = build(fa), build(ga)
    assert poly_mul(f, g) == poly_mul(g, f)
    if f and g and f.is_homogeneous and g.is_homogeneous:
        h = poly_mul(f, g)
        assert not h or (h.is_homogeneous and h.degree == f.degree + g.degree)
