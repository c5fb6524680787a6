"""Sparse cochains and the simplicial structure they live on.

Three kinds of cochain share one sparse representation, a dict from group
tuples to nonzero scalars:

* :class:`HomCochain` -- an element of ``Hom_k(k[G]^{(x)n}, k[G])``; the key
  ``(g0, g1, ..., gn)`` stands for the functional sending ``(g1, ..., gn)`` to
  ``g0`` and every other basis tuple to zero.
* :class:`DualCochain` -- an element of ``Hom_k(k[G]^{(x)(n+1)}, k)``; the key
  ``(g0, ..., gn)`` is the indicator of that tuple in the cyclic bar
  construction.
* :class:`BarCochain` -- a k-valued function on ``B_n(G) = G^n``, used for
  group cohomology classes.
"""

from __future__ import annotations

import itertools
import json
import os
from typing import Iterable, Sequence

from .errors import (BasisTooLarge, DegreeMismatch, EmptyKeep, IndexOutOfRange,
                     Mismatch)
from .groups import FiniteGroup
from .rings import RingSpec, parse_ring

DEFAULT_CAP = 2_000_000


def basis_cap(cap=None) -> int:
    if cap is not None:
        return int(cap)
    return int(os.environ.get("HOCHWERK_CAP", DEFAULT_CAP))


def accumulate(ring: RingSpec, terms: dict, key, coeff):
    """Add ``coeff`` at ``key`` in place, dropping the entry if it cancels."""
    old = terms.get(key)
    if old is None:
        if coeff != 0:
            terms[key] = coeff
        return
    new = ring.add(old, coeff)
    if new == 0:
        del terms[key]
    else:
        terms[key] = new


class Cochain:
    kind = "abstract"

    def __init__(self, group: FiniteGroup, ring: RingSpec, degree: int, terms=None):
        if degree < 0:
            raise DegreeMismatch(f"negative degree {degree}")
        self.group = group
        self.ring = ring
        self.degree = degree
        clean = {}
        n = self.key_length
        for key, coeff in (terms or {}).items():
            key = tuple(group.element(g) for g in key)
            if len(key) != n:
                raise DegreeMismatch(f"{self.kind} cochain of degree {degree} "
                                     f"needs tuples of length {n}, got {key}")
            accumulate(ring, clean, key, ring.coerce(coeff))
        self.terms = clean

    @classmethod
    def _make(cls, group, ring, degree, terms):
        obj = cls.__new__(cls)
        obj.group, obj.ring, obj.degree, obj.terms = group, ring, degree, terms
        return obj

    @classmethod
    def zero(cls, group, ring, degree):
        return cls._make(group, ring, degree, {})

    @classmethod
    def basis(cls, group, ring, key, coeff=1):
        key = tuple(group.element(g) for g in key)
        degree = len(key) - (cls.key_length_offset())
        return cls(group, ring, degree, {key: coeff})

    @classmethod
    def key_length_offset(cls) -> int:
        return 1

    @property
    def key_length(self) -> int:
        return self.degree + self.key_length_offset()

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def items(self):
        return self.terms.items()

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "Cochain"):
        if type(other) is not type(self):
            raise Mismatch(f"cannot combine {self.kind} and {other.kind} cochains")
        if other.group != self.group:
            raise Mismatch("cochains live over different groups")
        self.ring.check_same(other.ring)
        if other.degree != self.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree} differ")

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return (type(self) is type(other) and self.group == other.group
                and self.ring == other.ring and self.degree == other.degree
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.kind, self.degree, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            accumulate(self.ring, out, key, c)
        return self._make(self.group, self.ring, self.degree, out)

    def __neg__(self):
        ring = self.ring
        return self._make(self.group, ring, self.degree,
                          {k: ring.neg(c) for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        ring = self.ring
        s = ring.coerce(s)
        if s == 0:
            return self.zero(self.group, ring, self.degree)
        out = {}
        for key, c in self.terms.items():
            v = ring.mul(s, c)
            if v != 0:
                out[key] = v
        return self._make(self.group, ring, self.degree, out)

    def signed(self, parity: int):
        return -self if parity % 2 else self

    def with_ring(self, ring: RingSpec):
        """Reinterpret integer coefficients in another ring."""
        return type(self)(self.group, ring, self.degree,
                          {k: ring.coerce(c) for k, c in self.terms.items()})

    def __repr__(self):
        g = self.group
        body = " + ".join(f"{c}*({', '.join(g.label(x) for x in key)})"
                          for key, c in sorted(self.terms.items()))
        return f"{type(self).__name__}[{self.degree}]({body or '0'})"


class HomCochain(Cochain):
    kind = "hom"


class DualCochain(Cochain):
    kind = "dual"


class BarCochain(Cochain):
    kind = "bar"

    @classmethod
    def key_length_offset(cls) -> int:
        return 0


def add(c1: Cochain, c2: Cochain) -> Cochain:
    return c1 + c2


def scale(s, c: Cochain) -> Cochain:
    return c.scale(s)


def linear_combination(pairs, like: Cochain) -> Cochain:
    out = {}
    ring = like.ring
    for s, c in pairs:
        like._check(c)
        s = ring.coerce(s)
        for key, v in c.terms.items():
            accumulate(ring, out, key, ring.mul(s, v))
    return like._make(like.group, ring, like.degree, out)


# --- evaluation ---------------------------------------------------------

def eval_hom(f: HomCochain, args: Sequence[int]) -> dict:
    """Evaluate on a basis tensor; the result is an element of k[G] as a dict."""
    args = tuple(args)
    if len(args) != f.degree:
        raise DegreeMismatch(f"expected {f.degree} arguments, got {len(args)}")
    out = {}
    for key, c in f.terms.items():
        if key[1:] == args:
            accumulate(f.ring, out, key[0], c)
    return out


def eval_dual(alpha: Cochain, args: Sequence[int]):
    args = tuple(args)
    if len(args) != alpha.key_length:
        raise DegreeMismatch(f"expected {alpha.key_length} arguments, got {len(args)}")
    return alpha.terms.get(args, alpha.ring.zero)


def eval_on_chain(alpha: Cochain, chain: dict):
    """Pair a cochain with a formal sum of tuples."""
    ring = alpha.ring
    total = ring.zero
    for key, c in chain.items():
        v = alpha.terms.get(key)
        if v is not None:
            total = ring.add(total, ring.mul(v, ring.coerce(c)))
    return total


# --- simplicial structure -----------------------------------------------

def cyclic_face(group: FiniteGroup, sigma: Sequence[int], i: int) -> tuple:
    """Face ``d_i`` of the cyclic bar construction.

    ``d_i`` merges entries i and i+1 for ``i < n``; ``d_n`` moves the last entry
    to the front as ``(a_n a_0, a_1, ..., a_{n-1})``.
    """
    n = len(sigma) - 1
    if n < 1 or not 0 <= i <= n:
        raise IndexOutOfRange(f"face {i} of a simplex of dimension {n}")
    if i < n:
        return (*sigma[:i], group.mul(sigma[i], sigma[i + 1]), *sigma[i + 2:])
    return (group.mul(sigma[n], sigma[0]), *sigma[1:n])


def cyclic_degeneracy(group: FiniteGroup, sigma: Sequence[int], i: int) -> tuple:
    n = len(sigma) - 1
    if n < 0 or not 0 <= i <= n:
        raise IndexOutOfRange(f"degeneracy {i} of a simplex of dimension {n}")
    return (*sigma[:i + 1], group.identity, *sigma[i + 1:])


def face_restrict(group: FiniteGroup, sigma: Sequence[int], keep: Sequence[int]) -> tuple:
    """Restrict a cyclic simplex to the vertices in ``keep``.

    Implemented as ``cyclic_face`` over the deleted vertices in decreasing
    order; the vertex numbering of the remaining ones is unaffected by this.
    """
    keep = list(keep)
    if not keep:
        raise EmptyKeep("keep must name at least one vertex")
    if keep != sorted(set(keep)):
        raise ValueError("keep must be sorted and duplicate free")
    n = len(sigma) - 1
    if keep[0] < 0 or keep[-1] > n:
        raise IndexOutOfRange(f"vertices {keep} outside 0..{n}")
    kept = set(keep)
    out = tuple(sigma)
    for v in range(n, -1, -1):
        if v not in kept:
            out = cyclic_face(group, out, v)
    return out


def bar_face(group: FiniteGroup, t: Sequence[int], i: int) -> tuple:
    n = len(t)
    if n < 1 or not 0 <= i <= n:
        raise IndexOutOfRange(f"bar face {i} of a {n}-simplex")
    if i == 0:
        return tuple(t[1:])
    if i == n:
        return tuple(t[:-1])
    return (*t[:i - 1], group.mul(t[i - 1], t[i]), *t[i + 1:])


def bar_degeneracy(group: FiniteGroup, t: Sequence[int], i: int) -> tuple:
    n = len(t)
    if not 0 <= i <= n:
        raise IndexOutOfRange(f"bar degeneracy {i} of a {n}-simplex")
    return (*t[:i], group.identity, *t[i:])


# --- bases ----------------------------------------------------------------

_KEY_OFFSET = {"hom": 1, "dual": 1, "bar": 0}


def basis_size(group: FiniteGroup, degree: int, kind: str = "dual") -> int:
    return group.order ** (degree + _KEY_OFFSET[kind])


def basis_enumerate(group: FiniteGroup, degree: int, kind: str = "dual", cap=None) -> list:
    """All basis tuples of the given degree in lexicographic order."""
    size = basis_size(group, degree, kind)
    cap = basis_cap(cap)
    if size > cap:
        raise BasisTooLarge(size, cap)
    return list(itertools.product(range(group.order), repeat=degree + _KEY_OFFSET[kind]))


def encode(order: int, key: Sequence[int]) -> int:
    """Radix-``order`` index of a tuple; agrees with :func:`basis_enumerate` order."""
    idx = 0
    for g in key:
        idx = idx * order + g
    return idx


def decode(order: int, length: int, idx: int) -> tuple:
    out = [0] * length
    for pos in range(length - 1, -1, -1):
        idx, out[pos] = divmod(idx, order)
    return tuple(out)


# --- serialization ----------------------------------------------------------

_KINDS = {"hom": HomCochain, "dual": DualCochain, "bar": BarCochain}


def cochain_to_json(c: Cochain) -> dict:
    g = c.group
    return {
        "kind": c.kind,
        "degree": c.degree,
        "ring": str(c.ring),
        "terms": [{"tuple": [g.label(x) for x in key], "coeff": c.ring.format(v)}
                  for key, v in sorted(c.terms.items())],
    }


def cochain_from_json(data: dict, group: FiniteGroup) -> Cochain:
    try:
        cls = _KINDS[data["kind"]]
    except KeyError:
        raise Mismatch(f"unknown cochain kind {data.get('kind')!r}") from None
    ring = parse_ring(data["ring"])
    degree = int(data["degree"])
    terms = {}
    for term in data["terms"]:
        key = tuple(group.element(x) for x in term["tuple"])
        if len(key) != degree + _KEY_OFFSET[data["kind"]]:
            raise DegreeMismatch(f"tuple {term['tuple']} does not fit degree {degree}")
        accumulate(ring, terms, key, ring.coerce(str(term["coeff"])))
    return cls._make(group, ring, degree, terms)


def dumps_cochain(c: Cochain) -> str:
    return json.dumps(cochain_to_json(c), indent=2, sort_keys=True) + "\n"


def write_cochain(c: Cochain, path):
    with open(path, "w") as fh:
        fh.write(dumps_cochain(c))


def read_cochain(path, group: FiniteGroup) -> Cochain:
    with open(path) as fh:
        return cochain_from_json(json.load(fh), group)


def random_cochain(cls, group, ring, degree, rng, terms=4) -> Cochain:
    """A sparse cochain with up to ``terms`` random basis tuples."""
    length = degree + cls.key_length_offset()
    out = {}
    for _ in range(terms):
        key = tuple(rng.randrange(group.order) for _ in range(length))
        coeff = ring.coerce(rng.choice([1, 2, 3, -1, -2, 5]))
        accumulate(ring, out, key, coeff)
    return cls._make(group, ring, degree, out)


def iter_basis(cls, group, ring, degree) -> Iterable[Cochain]:
    length = degree + cls.key_length_offset()
    one = ring.one
    for key in itertools.product(range(group.order), repeat=length):
        yield cls._make(group, ring, degree, {key: one})
