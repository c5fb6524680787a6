import random

import pytest
import sympy
from sympy.polys.matrices import DomainMatrix
from hypothesis import given, settings, strategies as st

from hochwerk.errors import NotAField
from hochwerk.linalg import (SparseMatrix, echelon, in_span, rank, rank_kernel_image,
                             smith_normal_form, solve)
from hochwerk.rings import GF, GF2, QQ, ZZ


def _random_dense(rng, m, n, lo=0, hi=1):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]


def test_identity_and_zero():
    I = SparseMatrix.from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 1]], GF2)
    res = rank_kernel_image(I)
    assert res.rank == 3 and res.kernel == []
    Z = SparseMatrix(4, 3, GF2)
    res = rank_kernel_image(Z)
    assert res.rank == 0 and len(res.kernel) == 3 and Z.is_zero()


@pytest.mark.parametrize("ring", [GF2, GF(3), GF(5), QQ], ids=str)
def test_rank_nullity_and_kernel(ring):
    rng = random.Random(0)
    for _ in range(10):
        M = SparseMatrix.from_dense(_random_dense(rng, 20, 30, 0, 2), ring)
        res = rank_kernel_image(M)
        assert res.rank + len(res.kernel) == 30
        assert all(not M.matvec(v) for v in res.kernel)


@pytest.mark.parametrize("ring,p", [(GF2, 2), (GF(3), 3), (GF(7), 7)], ids=str)
def test_rank_matches_sympy(ring, p):
    rng = random.Random(p)
    for _ in range(10):
        dense = _random_dense(rng, rng.randint(1, 12), rng.randint(1, 12), 0, p - 1)
        A = sympy.GF(p)
        want = DomainMatrix([[A(x) for x in row] for row in dense], (len(dense), len(dense[0])), A).rank()
        assert rank(SparseMatrix.from_dense(dense, ring)) == want


def test_rank_over_q_matches_sympy():
    rng = random.Random(5)
    for _ in range(10):
        dense = _random_dense(rng, 8, 9, -3, 3)
        assert rank(SparseMatrix.from_dense(dense, QQ)) == sympy.Matrix(dense).rank()


@pytest.mark.parametrize("ring", [GF2, GF(3), QQ], ids=str)
def test_solve(ring):
    rng = random.Random(1)
    M = SparseMatrix.from_dense(_random_dense(rng, 15, 10, 0, 2), ring)
    ech = echelon(M)
    for _ in range(10):
        x = {c: ring.coerce(rng.randint(0, 2)) for c in range(10)}
        t = M.matvec(x)
        sol = solve(ech, t)
        assert M.matvec(sol) == t and in_span(ech, t)
    # something outside the column space when the rank is deficient
    outside = [{r: ring.one} for r in range(15) if not in_span(ech, {r: ring.one})]
    for t in outside:
        assert solve(ech, t) is None


def test_elimination_needs_field():
    with pytest.raises(NotAField):
        rank_kernel_image(SparseMatrix.from_dense([[2]], ZZ))


def test_matmul_and_dense():
    A = SparseMatrix.from_dense([[1, 2], [0, 1]], ZZ)
    B = SparseMatrix.from_dense([[1, 0], [3, 1]], ZZ)
    assert A.matmul(B).to_dense() == [[7, 2], [3, 1]]


def test_snf_examples():
    assert smith_normal_form([[2, 0], [0, 3]]).factors == [1, 6]
    assert smith_normal_form([[0, 0], [0, 0]]).factors == [0, 0]
    assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).factors == [1, 1, 1]
    assert smith_normal_form(SparseMatrix.from_dense([[2, 4], [6, 8]], ZZ)).factors == [2, 4]


def _mul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7), st.integers(1, 7), st.integers(0, 10 ** 6))
def test_snf_certificates(m, n, seed):
    rng = random.Random(seed)
    A = _random_dense(rng, m, n, -6, 6)
    snf = smith_normal_form(A)
    assert _mul(_mul(snf.U, A), snf.V) == snf.D
    nz = [d for d in snf.factors if d]
    assert all(d > 0 for d in nz)
    assert all(nz[k + 1] % nz[k] == 0 for k in range(len(nz) - 1))
    assert snf.rank == sympy.Matrix(A).rank()
    assert abs(sympy.Matrix(snf.U).det()) == 1 and abs(sympy.Matrix(snf.V).det()) == 1
