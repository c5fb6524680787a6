import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hochwerk.cochains import (BarCochain, DualCochain, HomCochain, add, bar_degeneracy,
                               bar_face, basis_enumerate, cochain_from_json,
                               cochain_to_json, cyclic_degeneracy, cyclic_face, decode,
                               dumps_cochain, encode, eval_dual, eval_hom, face_restrict,
                               random_cochain, read_cochain, scale, write_cochain)
from hochwerk.errors import (BasisTooLarge, DegreeMismatch, EmptyKeep, IndexOutOfRange,
                             Mismatch, RingMismatch)
from hochwerk.groups import make_symmetric
from hochwerk.products import restrict
from hochwerk.rings import GF2, QQ, ZZ


def H(G, ring, n, terms):
    return HomCochain(G, ring, n, terms)


def D(G, ring, n, terms):
    return DualCochain(G, ring, n, terms)


def test_eval_hom(C2):
    f = H(C2, ZZ, 1, {("x", "x"): 1})
    x, e = C2.element("x"), C2.identity
    assert eval_hom(f, (x,)) == {x: 1}
    assert eval_hom(f, (e,)) == {}
    g = H(C2, ZZ, 1, {("e", "x"): 2, ("x", "x"): 3})
    assert eval_hom(g, (x,)) == {e: 2, x: 3}
    with pytest.raises(DegreeMismatch):
        eval_hom(f, ())


def test_eval_dual(C2):
    x, e = C2.element("x"), C2.identity
    a = D(C2, ZZ, 1, {("x", "x"): 1})
    assert eval_dual(a, (x, x)) == 1
    assert eval_dual(a, (e, x)) == 0
    b = D(C2, GF2, 1, {("x", "x"): 1, ("e", "e"): 1})
    assert eval_dual(b, (e, e)) == 1


def test_linear_operations(C2):
    a = D(C2, GF2, 1, {("x", "x"): 1})
    assert not (a + a) and (a + a).terms == {}
    f = H(C2, ZZ, 1, {("x", "x"): 5})
    assert scale(0, f).terms == {}
    two = add(D(C2, ZZ, 1, {("x", "x"): 1}), D(C2, ZZ, 1, {("e", "x"): 1}))
    assert len(two) == 2
    assert -f + f == HomCochain.zero(C2, ZZ, 1)


def test_mismatches(C2, C3):
    a = D(C2, ZZ, 1, {("x", "x"): 1})
    with pytest.raises(Mismatch):
        a + H(C2, ZZ, 1, {("x", "x"): 1})
    with pytest.raises(DegreeMismatch):
        a + D(C2, ZZ, 2, {})
    with pytest.raises(RingMismatch):
        a + D(C2, GF2, 1, {})
    with pytest.raises(Mismatch):
        a + D(C3, ZZ, 1, {})
    with pytest.raises(DegreeMismatch):
        D(C2, ZZ, 1, {("x",): 1})


def test_cyclic_face_examples(S3):
    a, b, c = (S3.element(s) for s in ("(12)", "(123)", "(23)"))
    assert cyclic_face(S3, (a, b, c), 1) == (a, S3.mul(b, c))
    assert cyclic_face(S3, (a, b, c), 2) == (S3.mul(c, a), b)
    e = S3.identity
    assert cyclic_face(S3, (e, e), 0) == (e,)
    with pytest.raises(IndexOutOfRange):
        cyclic_face(S3, (a, b), 2)
    with pytest.raises(IndexOutOfRange):
        cyclic_face(S3, (a,), 0)


def test_cyclic_degeneracy_examples(S3):
    a, b, c = (S3.element(s) for s in ("(12)", "(123)", "(23)"))
    e = S3.identity
    assert cyclic_degeneracy(S3, (a, b), 0) == (a, e, b)
    assert cyclic_degeneracy(S3, (a,), 0) == (a, e)
    for i in range(3):
        assert cyclic_face(S3, cyclic_degeneracy(S3, (a, b, c), i), i) == (a, b, c)


def test_bar_face_examples(S3):
    a, b = S3.element("(12)"), S3.element("(123)")
    assert bar_face(S3, (a, b), 0) == (b,)
    assert bar_face(S3, (a, b), 1) == (S3.mul(a, b),)
    assert bar_face(S3, (a, b), 2) == (a,)
    assert bar_degeneracy(S3, (a,), 1) == (a, S3.identity)


def _random_simplex(G, n, rng):
    return tuple(rng.randrange(G.order) for _ in range(n + 1))


def test_face_restrict_examples(S3):
    rng = random.Random(0)
    sigma = _random_simplex(S3, 3, rng)
    assert face_restrict(S3, sigma, [0, 1, 2, 3]) == sigma
    a, b, c, d = sigma
    assert face_restrict(S3, sigma, [0, 3]) == cyclic_face(S3, cyclic_face(S3, sigma, 2), 1)
    assert face_restrict(S3, sigma, [0, 3]) == (a, S3.prod((b, c, d)))
    x, y, z = sigma[:3]
    assert face_restrict(S3, (x, y, z), [1, 2]) == (S3.mul(x, y), z)
    assert face_restrict(S3, (x, y, z), [0, 1]) == (S3.mul(z, x), y)
    with pytest.raises(EmptyKeep):
        face_restrict(S3, sigma, [])
    with pytest.raises(ValueError):
        face_restrict(S3, sigma, [2, 1])
    with pytest.raises(IndexOutOfRange):
        face_restrict(S3, sigma, [0, 4])


def test_face_restrict_matches_run_merging(S3):
    rng = random.Random(1)
    for n in range(0, 6):
        for _ in range(30):
            sigma = _random_simplex(S3, n, rng)
            keep = sorted(rng.sample(range(n + 1), rng.randint(1, n + 1)))
            assert face_restrict(S3, sigma, keep) == restrict(S3, sigma, keep)


def test_face_restrict_independent_of_deletion_order(S3):
    rng = random.Random(2)
    for n in range(1, 5):
        sigma = _random_simplex(S3, n, rng)
        for size in range(1, n + 1):
            for keep in itertools.combinations(range(n + 1), size):
                want = face_restrict(S3, sigma, keep)
                deleted = [v for v in range(n + 1) if v not in keep]
                for order in itertools.permutations(deleted):
                    cur, verts = sigma, list(range(n + 1))
                    for v in order:
                        pos = verts.index(v)
                        cur = cyclic_face(S3, cur, pos)
                        verts.pop(pos)
                    assert cur == want


@pytest.mark.parametrize("n", range(1, 5))
def test_simplicial_identities(n):
    G = make_symmetric(3)
    rng = random.Random(n)
    for _ in range(40):
        s = _random_simplex(G, n, rng)
        for j in range(n + 1):
            for i in range(j):
                if n >= 2:
                    assert cyclic_face(G, cyclic_face(G, s, j), i) == \
                        cyclic_face(G, cyclic_face(G, s, i), j - 1)
            for i in range(n + 2):
                sj = cyclic_degeneracy(G, s, j)
                if i in (j, j + 1):
                    assert cyclic_face(G, sj, i) == s
                elif i < j:
                    assert cyclic_face(G, sj, i) == cyclic_degeneracy(G, cyclic_face(G, s, i), j - 1)
                else:
                    assert cyclic_face(G, sj, i) == cyclic_degeneracy(G, cyclic_face(G, s, i - 1), j)


def test_basis_enumerate(C2, C3):
    e, x = C2.identity, C2.element("x")
    assert basis_enumerate(C2, 0) == [(e,), (x,)]
    assert basis_enumerate(C2, 1) == [(e, e), (e, x), (x, e), (x, x)]
    assert len(basis_enumerate(C3, 2)) == 27
    assert len(basis_enumerate(C3, 2, kind="bar")) == 9
    with pytest.raises(BasisTooLarge) as info:
        basis_enumerate(C3, 4, cap=100)
    assert info.value.size == 243 and info.value.cap == 100


def test_cap_from_environment(C3, monkeypatch):
    monkeypatch.setenv("HOCHWERK_CAP", "10")
    with pytest.raises(BasisTooLarge):
        basis_enumerate(C3, 2)


def test_radix_encoding_matches_enumeration(S3):
    keys = basis_enumerate(S3, 2)
    assert [encode(6, k) for k in keys] == list(range(len(keys)))
    assert all(decode(6, 3, i) == k for i, k in enumerate(keys))


@settings(max_examples=50)
@given(st.integers(0, 3), st.integers(0, 10_000), st.sampled_from([ZZ, QQ, GF2]))
def test_json_roundtrip(degree, seed, ring):
    G = make_symmetric(3)
    rng = random.Random(seed)
    for cls in (HomCochain, DualCochain, BarCochain):
        c = random_cochain(cls, G, ring, degree, rng)
        if ring == QQ:
            c = c.scale(Fraction(1, 3))
        assert cochain_from_json(cochain_to_json(c), G) == c


def test_file_roundtrip_is_byte_exact(tmp_path, S3):
    c = random_cochain(DualCochain, S3, QQ, 2, random.Random(3)).scale(Fraction(2, 7))
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    write_cochain(c, p1)
    write_cochain(read_cochain(p1, S3), p2)
    assert p1.read_bytes() == p2.read_bytes()
    assert dumps_cochain(c).endswith("\n")


@settings(max_examples=30)
@given(st.integers(0, 10_000))
def test_evaluation_is_linear(seed):
    G = make_symmetric(3)
    rng = random.Random(seed)
    a = random_cochain(DualCochain, G, ZZ, 2, rng)
    b = random_cochain(DualCochain, G, ZZ, 2, rng)
    sigma = next(iter(a.terms))
    assert eval_dual(a.scale(3) + b, sigma) == 3 * eval_dual(a, sigma) + eval_dual(b, sigma)
