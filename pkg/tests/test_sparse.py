"""Sparse exact linear algebra: rank, kernels, Smith normal form, homology."""

import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfcycl import (
    QQ,
    ZZ,
    HomologyModule,
    IntegersMod,
    NotAComplex,
    NotAField,
    PrimeField,
    RingMismatch,
    SparseMatrix,
    UnsupportedRing,
    homology_at,
    kernel_basis,
    nullity,
    rank,
    rank_over_rationals,
    smith_normal_form,
)

F7 = PrimeField(7)


def dense_rank_oracle(ring, rows):
    """Plain dense Gaussian elimination, written independently of the library."""
    A = [[ring.from_int(v) if isinstance(v, int) else v for v in row] for row in rows]
    m = len(A)
    n = len(A[0]) if A else 0
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if not ring.is_zero(A[i][c])), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = ring.inv(A[r][c])
        A[r] = [ring.mul(inv, v) for v in A[r]]
        for i in range(m):
            if i != r and not ring.is_zero(A[i][c]):
                f = A[i][c]
                A[i] = [ring.sub(A[i][j], ring.mul(f, A[r][j])) for j in range(n)]
        r += 1
    return r


def random_int_rows(rng, m, n, lo=-4, hi=4, density=0.6):
    return [
        [rng.randint(lo, hi) if rng.random() < density else 0 for _ in range(n)]
        for _ in range(m)
    ]


@pytest.mark.parametrize("ring", [QQ, F7], ids=lambda r: r.name)
@given(seed=st.integers(0, 10**6), m=st.integers(1, 6), n=st.integers(1, 6))
@settings(max_examples=60, deadline=None)
def test_rank_matches_dense_oracle(ring, seed, m, n):
    rng = random.Random(seed)
    rows = random_int_rows(rng, m, n)
    M = SparseMatrix.from_rows(ring, rows)
    r = rank(M)
    assert r == dense_rank_oracle(ring, rows)
    assert r == rank(M.transpose())
    assert nullity(M) == n - r


@given(seed=st.integers(0, 10**6), m=st.integers(1, 6), n=st.integers(1, 6))
@settings(max_examples=40, deadline=None)
def test_kernel_basis_spans_the_kernel(seed, m, n):
    rng = random.Random(seed)
    M = SparseMatrix.from_rows(QQ, random_int_rows(rng, m, n))
    K = kernel_basis(M)
    assert K.ncols == nullity(M)
    assert (M @ K).is_zero
    if K.ncols:
        assert rank(K) == K.ncols


def test_rank_requires_field():
    M = SparseMatrix.from_rows(ZZ, [[2, 0], [0, 3]])
    with pytest.raises(NotAField):
        rank(M)
    assert rank_over_rationals(M) == 2
    with pytest.raises(UnsupportedRing):
        rank_over_rationals(SparseMatrix.identity(F7, 2))


def test_matrix_algebra_basics():
    A = SparseMatrix.from_rows(QQ, [[1, 2], [3, 4]])
    B = SparseMatrix.from_rows(QQ, [[0, 1], [1, 0]])
    assert (A @ B) == SparseMatrix.from_rows(QQ, [[2, 1], [4, 3]])
    assert (A + (-A)).is_zero
    assert (A - A).is_zero
    assert A.scale(Fraction(2)).entries[(1, 1)] == Fraction(8)
    assert A.hstack(B).ncols == 4 and A.vstack(B).nrows == 4
    assert A.column(0) == {0: Fraction(1), 1: Fraction(3)}
    assert A.apply({0: Fraction(1), 1: Fraction(1)}) == {0: Fraction(3), 1: Fraction(7)}
    assert A.transpose().transpose() == A
    with pytest.raises(RingMismatch):
        A @ SparseMatrix.identity(ZZ, 2)
    with pytest.raises(ValueError):
        A @ SparseMatrix.identity(QQ, 3)
    with pytest.raises(IndexError):
        SparseMatrix(QQ, 1, 1, {(1, 0): Fraction(1)})


def test_smith_normal_form_known_values():
    assert smith_normal_form(SparseMatrix.from_rows(ZZ, [[2, 0], [0, 6]])) == [2, 6]
    assert smith_normal_form(SparseMatrix.from_rows(ZZ, [[1, 2], [3, 4]])) == [1, 2]
    assert smith_normal_form(SparseMatrix.from_rows(ZZ, [[6, 4], [4, 6]])) == [2, 10]
    assert smith_normal_form(SparseMatrix.zero(ZZ, 3, 2)) == []
    with pytest.raises(UnsupportedRing):
        smith_normal_form(SparseMatrix.identity(QQ, 2))


def unimodular(rng, n):
    """Random product of elementary integer row operations."""
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-2, 2)
        for k in range(n):
            M[i][k] += c * M[j][k]
    return SparseMatrix.from_rows(ZZ, M)


@given(seed=st.integers(0, 10**6), m=st.integers(1, 4), n=st.integers(1, 4))
@settings(max_examples=40, deadline=None)
def test_snf_unimodular_invariance_and_divisibility(seed, m, n):
    rng = random.Random(seed)
    M = SparseMatrix.from_rows(ZZ, random_int_rows(rng, m, n, -6, 6, 0.8))
    inv = smith_normal_form(M)
    for a, b in zip(inv, inv[1:]):
        assert b % a == 0
    L, R = unimodular(rng, m), unimodular(rng, n)
    assert smith_normal_form(L @ M @ R) == inv
    assert len(inv) == rank_over_rationals(M)


@pytest.mark.parametrize("modulus", [4, 6])
@pytest.mark.parametrize("seed", range(6))
def test_snf_over_zmod_cokernel_oracle(modulus, seed):
    ring = IntegersMod(modulus)
    rng = random.Random(seed)
    m, n = rng.randint(1, 3), rng.randint(1, 3)
    rows = [[rng.randrange(modulus) for _ in range(n)] for _ in range(m)]
    M = SparseMatrix.from_rows(ring, rows)
    inv = smith_normal_form(M)
    assert all(modulus % d == 0 or d < modulus for d in inv)
    # enumeration oracle: order of the image subgroup of (Z/modulus)^m
    image = set()
    for coeffs in product(range(modulus), repeat=n):
        vec = tuple(
            sum(rows[i][j] * coeffs[j] for j in range(n)) % modulus for i in range(m)
        )
        image.add(vec)
    expected_coker = modulus**m // len(image)
    coker = modulus ** (m - len(inv))
    for d in inv:
        coker *= d
    assert coker == expected_coker


def test_homology_at_field_and_integer():
    # Q <-2- Q: homology at the target is 0, at degree 0 with zero out-map
    d_in = SparseMatrix.from_rows(QQ, [[2]])
    d_out = SparseMatrix.zero(QQ, 0, 1)
    assert homology_at(d_in, d_out) == HomologyModule(QQ, 0)
    # Z <-2- Z: cokernel Z/2
    d_in = SparseMatrix.from_rows(ZZ, [[2]])
    d_out = SparseMatrix.zero(ZZ, 0, 1)
    h = homology_at(d_in, d_out)
    assert h.free_rank == 0 and h.torsion == (2,)
    # Z^2 <-0- 0 with zero out-map: free of rank 2
    h = homology_at(SparseMatrix.zero(ZZ, 2, 0), SparseMatrix.zero(ZZ, 0, 2))
    assert h.free_rank == 2 and h.torsion == ()


def test_homology_at_guards():
    good = SparseMatrix.from_rows(ZZ, [[1]])
    with pytest.raises(NotAComplex):
        homology_at(good, good)
    with pytest.raises(ValueError):
        homology_at(SparseMatrix.zero(ZZ, 2, 1), SparseMatrix.zero(ZZ, 1, 1))
    with pytest.raises(RingMismatch):
        homology_at(SparseMatrix.zero(ZZ, 1, 1), SparseMatrix.zero(QQ, 1, 1))
    with pytest.raises(UnsupportedRing):
        homology_at(
            SparseMatrix.zero(IntegersMod(4), 1, 1),
            SparseMatrix.zero(IntegersMod(4), 0, 1),
        )
