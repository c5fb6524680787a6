import random

import pytest

from hochwerk.cochains import HomCochain, random_cochain
from hochwerk.cohomology import (CohomologyBasis, b_star_matrix, cocycle_basis,
                                 coboundary_witness, delta_matrix, from_vector, hh_report,
                                 hh_reports, is_coboundary, reports_to_json, reports_to_tsv,
                                 steenrod_table, to_vector)
from hochwerk.differentials import hochschild_delta
from hochwerk.errors import BasisTooLarge, NotACoboundary, NotAField, NotGF2
from hochwerk.groups import group_by_name
from hochwerk.linalg import rank
from hochwerk.products import steenrod_square
from hochwerk.rings import GF, GF2, QQ, ZZ
from hochwerk.suites import pulled_back_class
from hochwerk.transport import phi, pi_star, psi

from oracles import hochschild_betti_oracle


def betti(G, ring, top):
    return [r.betti for r in hh_reports(G, ring, top)]


def test_trivial_group(C1):
    for ring in (GF2, QQ, GF(3)):
        assert betti(C1, ring, 4) == [1, 0, 0, 0, 0]
    assert [r.free_rank for r in hh_reports(C1, ZZ, 3)] == [1, 0, 0, 0]
    # over a point delta_n is the sum of n + 2 identical terms
    for n in range(0, 4):
        assert delta_matrix(C1, GF2, n).is_zero() == (n % 2 == 0)


def test_c2_mod_two(C2):
    assert betti(C2, GF2, 4) == [2, 2, 2, 2, 2]
    M0, M1 = delta_matrix(C2, GF2, 0), delta_matrix(C2, GF2, 1)
    assert (M0.rows, M0.cols) == (4, 2)
    assert M1.matmul(M0).is_zero()


def test_c2_integral(C2):
    reports = hh_reports(C2, ZZ, 4)
    assert (reports[0].free_rank, reports[0].torsion) == (2, [])
    assert [r.free_rank for r in reports] == [2, 0, 0, 0, 0]
    assert [r.torsion for r in reports] == [[], [], [2, 2], [], [2, 2]]
    # universal coefficients: mod-2 dimension is at least the free rank
    assert all(b >= r.free_rank for b, r in zip(betti(C2, GF2, 4), reports))


@pytest.mark.parametrize("name,p,top", [("S3", 2, 3), ("S3", 3, 3), ("C3", 3, 3), ("C3", 2, 3),
                                        ("D4", 2, 2), ("C2", 2, 4)])
def test_betti_against_centralizer_oracle(name, p, top):
    G = group_by_name(name)
    assert betti(G, GF(p), top) == hochschild_betti_oracle(G, p, top)


def test_rational_cohomology_is_class_functions(S3, D4):
    assert betti(S3, QQ, 2) == [3, 0, 0]
    assert betti(D4, QQ, 1) == [5, 0]


def test_complexes_agree(S3):
    for n in range(3):
        for ring in (GF2, GF(3)):
            assert hh_report(S3, ring, n, kind="hom").betti == hh_report(S3, ring, n, kind="dual").betti


@pytest.mark.parametrize("name", ["C2", "C3", "S3"])
def test_differential_matrices_compose_to_zero(name):
    G = group_by_name(name)
    for n in range(0, 3):
        for ring in (ZZ, GF2):
            assert delta_matrix(G, ring, n + 1).matmul(delta_matrix(G, ring, n)).is_zero()
            assert b_star_matrix(G, ring, n + 1).matmul(b_star_matrix(G, ring, n)).is_zero()


def test_matrix_matches_operator(S3):
    rng = random.Random(0)
    M = delta_matrix(S3, ZZ, 2)
    for _ in range(100):
        f = random_cochain(HomCochain, S3, ZZ, 2, rng)
        assert from_vector(M.matvec(to_vector(f)), S3, ZZ, 3) == hochschild_delta(f)


def test_cap(S3):
    with pytest.raises(BasisTooLarge):
        delta_matrix(S3, GF2, 3, cap=1000)


def test_cocycle_basis(C2, C3, S3):
    assert len(cocycle_basis(C3, GF(3), 0)) == 3
    for G, ring, n in ((C2, GF2, 2), (S3, GF(3), 1)):
        basis = cocycle_basis(G, ring, n)
        assert all(not hochschild_delta(f) for f in basis)
        assert len(basis) + rank(delta_matrix(G, ring, n)) == G.order ** (n + 1)
    with pytest.raises(NotAField):
        cocycle_basis(C2, ZZ, 1)


def test_bg_cocycle_basis_contains_pulled_back_class(C2):
    basis = cocycle_basis(C2, GF2, 1, bg_only=True)
    t = pulled_back_class(C2, 1)
    assert all(not hochschild_delta(f) for f in basis)
    from hochwerk.transport import restrict_to_bg
    target = psi(restrict_to_bg(phi(t)))
    span = {tuple(sorted(f.terms)) for f in basis}
    # GF(2) span membership by brute force over the small basis
    import itertools
    combos = set()
    for r in range(len(basis) + 1):
        for sub in itertools.combinations(basis, r):
            s = HomCochain.zero(C2, GF2, 1)
            for f in sub:
                s = s + f
            combos.add(s)
    assert target in combos and span


def test_coboundary_solver(S3):
    rng = random.Random(2)
    for ring in (GF2, GF(3), QQ):
        for n in (1, 2):
            h = random_cochain(HomCochain, S3, ring, n - 1, rng)
            f = hochschild_delta(h)
            w = is_coboundary(f)
            assert hochschild_delta(w) == f
    zero = HomCochain.zero(S3, GF2, 2)
    assert not hochschild_delta(is_coboundary(zero))


def test_nonexact_cocycle(C2):
    f = pulled_back_class(C2, 1)
    with pytest.raises(NotACoboundary):
        is_coboundary(f)
    assert coboundary_witness(f) is None


def test_cohomology_basis_coordinates(S3):
    B = CohomologyBasis(S3, GF2, 2)
    assert B.dim == 2
    rng = random.Random(3)
    for k, f in enumerate(B.representatives):
        h = random_cochain(HomCochain, S3, GF2, 1, rng)
        want = [int(j == k) for j in range(B.dim)]
        assert B.coordinates(f) == want
        assert B.coordinates(f + hochschild_delta(h)) == want


def test_steenrod_table_c2(C2):
    table = steenrod_table(C2, 3)
    assert {(e.degree, e.i) for e in table} >= {(1, 0), (1, 1), (2, 1), (3, 0)}
    # Sq^0 acts as the identity on these classes
    assert all(e.coords == [int(j == e.cls) for j in range(len(e.coords))]
               for e in table if e.i == 0)


def test_steenrod_table_trivial(C1):
    table = steenrod_table(C1, 3)
    assert [(e.degree, e.i) for e in table] == [(0, 0)]
    with pytest.raises(NotGF2):
        steenrod_table(C1, 2, ring=GF(3))


def test_steenrod_representative_independence(S3):
    rng = random.Random(4)
    bases = [CohomologyBasis(S3, GF2, n) for n in range(4)]
    for p in (1,):
        for f in bases[p].representatives:
            for i in range(0, p + 1):
                want = bases[p + i].coordinates(steenrod_square(f, i))
                for _ in range(5):
                    g = f + hochschild_delta(random_cochain(HomCochain, S3, GF2, p - 1, rng))
                    assert bases[p + i].coordinates(steenrod_square(g, i)) == want


def test_report_formats(C2):
    reports = hh_reports(C2, GF2, 1)
    js = reports_to_json(reports)
    assert js.index('"group"') < js.index('"ring"') < js.index('"degree"') < js.index('"betti"')
    tsv = reports_to_tsv(reports).splitlines()
    assert tsv[0].startswith("group\tring\tdegree\tbetti") and len(tsv) == 3
    z = reports_to_json(hh_reports(C2, ZZ, 2))
    assert '"free_rank"' in z and '"torsion"' in z
