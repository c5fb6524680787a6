import itertools
import random

import pytest

from hochwerk.cochains import (BarCochain, DualCochain, HomCochain, eval_dual,
                               eval_on_chain, iter_basis, random_cochain)
from hochwerk.differentials import b_star, bar_coboundary, chain_boundary, hochschild_delta
from hochwerk.groups import group_by_name
from hochwerk.rings import GF, GF2, QQ, ZZ

from oracles import b_star_oracle, delta_oracle

RINGS = [ZZ, QQ, GF2, GF(3)]


def test_delta_degree_zero_abelian_vanishes(C3):
    for g in C3.elements():
        assert not hochschild_delta(HomCochain(C3, ZZ, 0, {(g,): 1}))


def test_delta_degree_zero_commutator(S3):
    s, r = S3.element("(12)"), S3.element("(123)")
    d = hochschild_delta(HomCochain(S3, ZZ, 0, {(s,): 1}))
    from hochwerk.cochains import eval_hom
    assert eval_hom(d, (r,)) == {S3.mul(r, s): 1, S3.mul(s, r): -1}


def test_delta_squared_example(C2):
    f = HomCochain(C2, ZZ, 1, {("x", "x"): 1})
    assert hochschild_delta(f) and not hochschild_delta(hochschild_delta(f))


def test_chain_boundary_examples(C2, S3):
    x = C2.element("x")
    assert chain_boundary(C2, (x, x)) == {}
    r, s = S3.element("(123)"), S3.element("(12)")
    assert chain_boundary(S3, (r, s)) == {(S3.mul(r, s),): 1, (S3.mul(s, r),): -1}
    e = S3.identity
    assert chain_boundary(S3, (e, e, e)) == {(e, e): 1}


def test_b_star_examples(C2):
    x, e = C2.element("x"), C2.identity
    a = DualCochain(C2, ZZ, 1, {("x", "x"): 1})
    assert not b_star(b_star(a))
    bx = b_star(DualCochain(C2, GF2, 0, {("x",): 1}))
    assert eval_dual(bx, (e, x)) == 0
    be = b_star(DualCochain(C2, GF2, 0, {("e",): 1}))
    assert all(eval_dual(be, s) == 0 for s in itertools.product(range(2), repeat=2))


def test_bar_coboundary_examples(C2):
    x = C2.element("x")
    t = BarCochain(C2, GF2, 1, {(x,): 1})
    assert not bar_coboundary(t)
    unit = BarCochain(C2, GF2, 0, {(): 1})
    assert not bar_coboundary(unit)
    te = BarCochain(C2, GF2, 1, {(C2.identity,): 1})
    assert bar_coboundary(te)


@pytest.mark.parametrize("name", ["C2", "C3"])
@pytest.mark.parametrize("n", range(0, 3))
def test_adjointness_exhaustive(name, n):
    G = group_by_name(name)
    for alpha in iter_basis(DualCochain, G, ZZ, n):
        d = b_star(alpha)
        for sigma in itertools.product(range(G.order), repeat=n + 2):
            assert eval_dual(d, sigma) == eval_on_chain(alpha, chain_boundary(G, sigma))


@pytest.mark.parametrize("ring", RINGS, ids=str)
@pytest.mark.parametrize("name", ["C2", "C3", "S3"])
def test_against_pointwise_oracles(ring, name):
    G = group_by_name(name)
    rng = random.Random(11)
    for n in range(0, 3 if G.order > 3 else 4):
        for _ in range(3):
            f = random_cochain(HomCochain, G, ring, n, rng)
            assert hochschild_delta(f) == delta_oracle(f)
            a = random_cochain(DualCochain, G, ring, n, rng)
            assert b_star(a) == b_star_oracle(a)


@pytest.mark.parametrize("ring", RINGS, ids=str)
@pytest.mark.parametrize("name", ["C2", "C3", "S3"])
def test_squares_vanish(ring, name):
    G = group_by_name(name)
    rng = random.Random(5)
    for n in range(0, 5 if G.order <= 3 else 4):
        for _ in range(10):
            f = random_cochain(HomCochain, G, ring, n, rng)
            assert not hochschild_delta(hochschild_delta(f))
            a = random_cochain(DualCochain, G, ring, n, rng)
            assert not b_star(b_star(a))
            t = random_cochain(BarCochain, G, ring, n, rng)
            assert not bar_coboundary(bar_coboundary(t))
