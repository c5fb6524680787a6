"""Finite groups given by Cayley tables.

Elements are dense indices ``0 .. order-1``.  Every higher module treats them
as opaque integers and only talks to the group through :meth:`FiniteGroup.mul`,
:meth:`FiniteGroup.inv` and :meth:`FiniteGroup.prod`.
"""

from __future__ import annotations

import itertools
import json
import os
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (NoIdentity, NoInverse, NotAssociative, NotLatinSquare,
                     GroupTableError, TooLarge)

DEFAULT_MAX_ORDER = 24


def max_order() -> int:
    return int(os.environ.get("HOCHWERK_MAX_ORDER", DEFAULT_MAX_ORDER))


class FiniteGroup:
    """An immutable, validated finite group.

    Construct through :func:`build_group` or one of the ``make_*`` families;
    the constructor itself trusts its arguments.
    """

    def __init__(self, cayley, inverse, identity, labels, name=None):
        self._cayley = tuple(tuple(row) for row in cayley)
        self._inv = tuple(inverse)
        self.identity = identity
        self.labels = tuple(labels)
        self.name = name or f"G{len(self._cayley)}"
        self._index = {lab: i for i, lab in enumerate(self.labels)}

    @property
    def order(self) -> int:
        return len(self._cayley)

    @property
    def cayley(self):
        return self._cayley

    @property
    def inverses(self):
        return self._inv

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"<FiniteGroup {self.name} order={self.order}>"

    def __eq__(self, other):
        return (isinstance(other, FiniteGroup) and self._cayley == other._cayley
                and self.identity == other.identity)

    def __hash__(self):
        return hash((self._cayley, self.identity))

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self._cayley[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def prod(self, elements: Iterable[int]) -> int:
        """Left-to-right product; the empty product is the identity."""
        acc = self.identity
        table = self._cayley
        for g in elements:
            acc = table[acc][g]
        return acc

    def conj(self, h: int, g: int) -> int:
        """Return ``h g h^-1``."""
        return self.mul(self.mul(h, g), self.inv(h))

    def label(self, g: int) -> str:
        return self.labels[g]

    def element(self, key) -> int:
        """Resolve a label or an integer index to an element index."""
        if isinstance(key, bool):
            raise KeyError(key)
        if isinstance(key, int):
            if 0 <= key < self.order:
                return key
            raise KeyError(key)
        if key in self._index:
            return self._index[key]
        if isinstance(key, str) and key.lstrip("-").isdigit():
            return self.element(int(key))
        raise KeyError(key)

    def is_abelian(self) -> bool:
        t = self._cayley
        return all(t[a][b] == t[b][a] for a in self.elements() for b in self.elements())

    @cached_property
    def conjugacy_classes(self) -> tuple:
        seen = set()
        classes = []
        for g in self.elements():
            if g in seen:
                continue
            cls = frozenset(self.conj(h, g) for h in self.elements())
            seen |= cls
            classes.append(cls)
        return tuple(classes)

    @cached_property
    def class_index(self) -> tuple:
        """``class_index[g]`` is the position of g's class in :attr:`conjugacy_classes`."""
        out = [0] * self.order
        for k, cls in enumerate(self.conjugacy_classes):
            for g in cls:
                out[g] = k
        return tuple(out)

    def to_json(self) -> dict:
        return {"order": self.order, "labels": list(self.labels),
                "cayley": [list(row) for row in self._cayley]}


def _validate(order: int, cayley) -> tuple:
    if order < 1:
        raise GroupTableError("order must be positive")
    if len(cayley) != order or any(len(row) != order for row in cayley):
        raise GroupTableError(f"Cayley table must be {order}x{order}")
    for a, row in enumerate(cayley):
        for b, c in enumerate(row):
            if isinstance(c, bool) or not isinstance(c, int) or not 0 <= c < order:
                raise GroupTableError(f"entry ({a}, {b}) = {c!r} out of range")

    full = set(range(order))
    for a, row in enumerate(cayley):
        if set(row) != full:
            raise NotLatinSquare(f"row {a} is not a permutation")
    for b in range(order):
        if {cayley[a][b] for a in range(order)} != full:
            raise NotLatinSquare(f"column {b} is not a permutation")

    identity = None
    for e in range(order):
        if all(cayley[e][g] == g and cayley[g][e] == g for g in range(order)):
            identity = e
            break
    if identity is None:
        raise NoIdentity("no two-sided identity element")

    inverse = []
    for g in range(order):
        h = cayley[g].index(identity)
        if cayley[h][g] != identity:
            raise NoInverse(f"element {g} has right inverse {h} which is not a left inverse")
        inverse.append(h)

    for a in range(order):
        ra = cayley[a]
        for b in range(order):
            ab = ra[b]
            rab, rb = cayley[ab], cayley[b]
            for c in range(order):
                if rab[c] != ra[rb[c]]:
                    raise NotAssociative(f"(g{a} g{b}) g{c} != g{a} (g{b} g{c})")
    return identity, inverse


def build_group(order: int, cayley: Sequence[Sequence[int]], labels=None, name=None) -> FiniteGroup:
    """Validate a Cayley table and wrap it as a :class:`FiniteGroup`.

    Checks run in order shape, Latin square, identity, inverses, associativity;
    the raised error names the first violating row, column, element or triple.
    """
    cayley = [list(row) for row in cayley]
    identity, inverse = _validate(order, cayley)
    if labels is None:
        labels = ["e" if g == identity else str(g) for g in range(order)]
    labels = [str(x) for x in labels]
    if len(labels) != order or len(set(labels)) != order:
        raise GroupTableError("labels must be unique and one per element")
    return FiniteGroup(cayley, inverse, identity, labels, name)


def load_group(path) -> FiniteGroup:
    with open(path) as fh:
        data = json.load(fh)
    return build_group(data["order"], data["cayley"], data.get("labels"),
                       name=os.path.splitext(os.path.basename(str(path)))[0])


def _check_size(order: int, limit=None):
    limit = max_order() if limit is None else limit
    if order > limit:
        raise TooLarge(f"group of order {order} exceeds the limit {limit}")


def make_cyclic(n: int, limit=None) -> FiniteGroup:
    if n < 1:
        raise ValueError("n must be positive")
    _check_size(n, limit)
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["e", "a"] + [f"a^{k}" for k in range(2, n)]
    if n == 2:
        labels = ["e", "x"]
    return build_group(n, table, labels[:n], name=f"C{n}")


def make_dihedral(n: int, limit=None) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n; element ``r^k s^m`` has index ``k + n*m``."""
    if n < 1:
        raise ValueError("n must be positive")
    _check_size(2 * n, limit)

    def mul(x, y):
        a, b = x % n, x // n
        c, d = y % n, y // n
        k = (a + (c if b == 0 else -c)) % n
        return k + n * ((b + d) % 2)

    table = [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)]
    labels = []
    for x in range(2 * n):
        k, m = x % n, x // n
        r = "" if k == 0 else ("r" if k == 1 else f"r^{k}")
        s = "s" if m else ""
        labels.append(r + s or "e")
    return build_group(2 * n, table, labels, name=f"D{n}")


def _cycle_label(perm) -> str:
    seen, cycles = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x + 1)
            x = perm[x]
        cycles.append("(" + "".join(map(str, cyc)) + ")")
    return "".join(cycles) or "e"


def make_symmetric(n: int, limit=None) -> FiniteGroup:
    """All permutations of n points; ``(s*t)(x) = s(t(x))``."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > 5:
        raise TooLarge(f"S{n} is beyond the supported range n <= 5")
    perms = list(itertools.permutations(range(n)))
    _check_size(len(perms), limit)
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(s[t[x]] for x in range(n))] for t in perms] for s in perms]
    return build_group(len(perms), table, [_cycle_label(p) for p in perms], name=f"S{n}")


def conjugacy_class_of(group: FiniteGroup, g: int) -> frozenset:
    return group.conjugacy_classes[group.class_index[g]]


def tuple_product(group: FiniteGroup, elements: Sequence[int]) -> int:
    return group.prod(elements)


def group_by_name(spec: str, limit=None) -> FiniteGroup:
    """Resolve ``C5``, ``D4``, ``S3``, ``trivial`` or a path to a JSON group file."""
    key = spec.strip()
    if os.path.exists(key):
        return load_group(key)
    low = key.lower()
    if low in ("trivial", "1", "c1"):
        return make_cyclic(1, limit)
    kind, digits = key[:1].upper(), key[1:]
    if digits.isdigit():
        n = int(digits)
        if kind == "C":
            return make_cyclic(n, limit)
        if kind == "D":
            return make_dihedral(n, limit)
        if kind == "S":
            return make_symmetric(n, limit)
    raise GroupTableError(f"unknown group {spec!r}")
