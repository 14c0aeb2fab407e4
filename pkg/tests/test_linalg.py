import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torsionlab.linalg import (GF, QQ, ZZ, CompositionNotZero, DomainError, Echelon, ExactMatrix,
                               homology_over_field, homology_over_integers, integer_determinant, kernel_basis,
                               p_valuation, rank, smith_normal_form, solve)
from torsionlab.linalg.smith import diagonal

small_ints = st.integers(min_value=-9, max_value=9)


@st.composite
def int_matrices(draw, max_dim=6):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=r, max_size=r))
    return ExactMatrix.from_rows(ZZ, rows, cols=c)


@settings(max_examples=60, deadline=None)
@given(int_matrices())
def test_snf_factorization(m):
    u, d, v = smith_normal_form(m)
    assert u @ m @ v == d
    assert abs(integer_determinant(u)) == 1
    assert abs(integer_determinant(v)) == 1
    diag = diagonal(d)
    for a, b in zip(diag, diag[1:]):
        assert a >= 0 and (b % a == 0 if a else b == 0)
    for i in range(d.rows):
        for j in range(d.cols):
            if i != j:
                assert d[i, j] == 0


def test_snf_known():
    m = ExactMatrix.from_rows(ZZ, [[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    _, d, _ = smith_normal_form(m)
    assert diagonal(d) == [2, 6, 12]


@settings(max_examples=60, deadline=None)
@given(int_matrices())
def test_rank_nullity(m):
    q = ExactMatrix.from_rows(QQ, m.to_rows(), cols=m.cols)
    ker = kernel_basis(q)
    assert rank(q) + len(ker) == q.cols
    for v in ker:
        assert all(x == 0 for x in q.apply(v))


@settings(max_examples=40, deadline=None)
@given(int_matrices(), st.lists(small_ints, min_size=6, max_size=6))
def test_solve_roundtrip(m, x):
    q = ExactMatrix.from_rows(QQ, m.to_rows(), cols=m.cols)
    b = q.apply([Fraction(t) for t in x[:q.cols]])
    sol = solve(q, b)
    assert sol is not None
    assert q.apply(sol) == b


def test_solve_inconsistent():
    q = ExactMatrix.from_rows(QQ, [[1, 0], [1, 0]])
    assert solve(q, [1, 2]) is None


def test_echelon_membership():
    e = Echelon(QQ, 3)
    assert e.add((1, 2, 3))
    assert not e.add((2, 4, 6))
    assert e.contains((Fraction(1, 2), 1, Fraction(3, 2)))
    assert e.dim == 1


def test_gf2_arithmetic():
    F = GF(2)
    m = ExactMatrix.from_rows(F, [[1, 1], [1, 1]])
    assert rank(m) == 1
    assert (m @ m).is_zero()


def _exhaustive_gf2(d_in, d_out):
    n = d_in.rows
    vecs = [tuple(GF(2).convert(x) for x in v) for v in product((0, 1), repeat=n)]
    ker = [v for v in vecs if d_out.rows == 0 or all(x == 0 for x in d_out.apply(v))]
    image = {d_in.apply(tuple(GF(2).convert(x) for x in c)) for c in product((0, 1), repeat=d_in.cols)}
    return (len(ker) // len(image)).bit_length() - 1


def test_field_homology_matches_enumeration():
    rng = random.Random(5)
    F = GF(2)
    for _ in range(30):
        n = rng.randint(1, 6)
        b = rng.randint(1, 4)
        d_out = ExactMatrix.from_rows(F, [[rng.randint(0, 1) for _ in range(n)] for _ in range(b)], cols=n)
        ker = kernel_basis(d_out)
        cols = []
        for _ in range(rng.randint(1, 4)):
            acc = [F.zero] * n
            for v in ker:
                if rng.random() < 0.5:
                    acc = [x + y for x, y in zip(acc, v)]
            cols.append(acc)
        d_in = ExactMatrix.from_columns(F, cols, n)
        assert homology_over_field(d_in, d_out).dimension == _exhaustive_gf2(d_in, d_out)


def test_integer_homology_of_rp2():
    # cellular chain complex of RP^2: Z <-0- Z <-2- Z
    d2 = ExactMatrix.from_rows(ZZ, [[2]])
    d1 = ExactMatrix.from_rows(ZZ, [[0]])
    h1 = homology_over_integers(d2, d1)
    assert h1.rank == 0 and h1.invariant_factors == (2,)


def test_homology_rejects_non_complex():
    a = ExactMatrix.from_rows(QQ, [[1]])
    with pytest.raises(CompositionNotZero):
        homology_over_field(a, a)


def test_snf_rejects_rationals():
    with pytest.raises(DomainError):
        smith_normal_form(ExactMatrix.from_rows(QQ, [[1]]))


def test_p_valuation():
    assert p_valuation(48, 2) == 4
    assert p_valuation(7, 3) == 0
