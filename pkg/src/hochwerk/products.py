"""Products on both cochain complexes.

On ``Hom_k(k[G]^{(x)*}, k[G])``: the Gerstenhaber cup product, the partial
compositions ``circle_j``, the pre-Lie product and the bracket.

On ``Hom_k(k[G]^{(x)(*+1)}, k)``: the simplicial cup product, Steenrod's
cup-one product, and cup-i products for all ``i >= 0`` built from overlapping
partitions of the vertex set.  Transported versions go through ``phi``/``psi``.

Cup-i sign convention
---------------------
A summand of ``alpha cup_i beta`` on an n-simplex (``n = p + q - i``) is an
overlapping partition of ``0..n`` into intervals ``I_0 .. I_{i+1}`` cut at
``t_1 < ... < t_{i+1}``; alpha reads the even intervals, beta the odd ones.
Its sign is ``(-1)**e`` with::

    e = sum(vertices outside every odd interval)
        + C(p-1, 2) + (p-1) * ((i-1) // 2) + q * C(i, 2)        (i >= 1)

and ``e = 0`` for ``i = 0``.  For ``i = 1`` this is exactly
``(-1)**((p-1-j)(q-1))`` on the j-th summand.  With these signs::

    b*(a cup_i b) = A_i b*(a) cup_i b + B_i a cup_i b*(b)
                    + (-1)^p [(-1)^{(i-1)(p+q+1)} a cup_{i-1} b - (-1)^{pq} b cup_{i-1} a]

where ``A_i = (-1)**(i(i-1)/2)`` and ``B_i = (-1)**(i(i+1)/2 + p)``; see
:func:`ladder_coefficients`.  ``A_i = 1`` and ``B_i = (-1)^{p-1}`` hold for
``i <= 1`` (and ``B_2`` too), but no choice of signs makes them hold for every
i at once: applying b* twice to that uniform form leaves
``2 (-1)^{q+1} b*(a) cup_1 b`` at i = 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cochains import DualCochain, HomCochain, accumulate
from .errors import (BadDegree, BadIndex, Mismatch, NegativeDegree, NotACocycle,
                     NotGF2)
from .transport import phi, psi


def _pair_check(a, b, cls):
    if not isinstance(a, cls) or not isinstance(b, cls):
        raise Mismatch(f"expected two {cls.__name__}s")
    if a.group != b.group:
        raise Mismatch("cochains live over different groups")
    a.ring.check_same(b.ring)


# --- Gerstenhaber side -------------------------------------------------------

def gerstenhaber_cup(f: HomCochain, g: HomCochain) -> HomCochain:
    """``(f . g)(a_1..a_{p+q}) = f(a_1..a_p) g(a_{p+1}..a_{p+q})``."""
    _pair_check(f, g, HomCochain)
    G, ring = f.group, f.ring
    mul = G.mul
    out = {}
    for ka, ca in f.terms.items():
        a0, arest = ka[0], ka[1:]
        for kb, cb in g.terms.items():
            accumulate(ring, out, (mul(a0, kb[0]), *arest, *kb[1:]), ring.mul(ca, cb))
    return HomCochain._make(G, ring, f.degree + g.degree, out)


def circle_j(f: HomCochain, g: HomCochain, j: int) -> HomCochain:
    """Insert g into the (j+1)-th slot of f."""
    _pair_check(f, g, HomCochain)
    p, q = f.degree, g.degree
    if p < 1 or not 0 <= j <= p - 1:
        raise BadIndex(f"circle_{j} needs 0 <= j < p = {p}")
    ring = f.ring
    by_output = {}
    for kb, cb in g.terms.items():
        by_output.setdefault(kb[0], []).append((kb[1:], cb))
    out = {}
    for ka, ca in f.terms.items():
        for brest, cb in by_output.get(ka[j + 1], ()):
            accumulate(ring, out, (*ka[:j + 1], *brest, *ka[j + 2:]), ring.mul(ca, cb))
    return HomCochain._make(f.group, ring, p + q - 1, out)


def prelie_sign(j: int, p: int, q: int) -> int:
    """Parity of the sign on ``f o_(j) g`` in the pre-Lie product (also cup-one)."""
    return ((p - 1 - j) * (q - 1)) % 2


def pre_lie(f: HomCochain, g: HomCochain) -> HomCochain:
    _pair_check(f, g, HomCochain)
    p, q = f.degree, g.degree
    if p < 1:
        raise BadDegree("pre-Lie product needs deg f >= 1")
    out = HomCochain.zero(f.group, f.ring, p + q - 1)
    for j in range(p):
        out = out + circle_j(f, g, j).signed(prelie_sign(j, p, q))
    return out


def bracket(f: HomCochain, g: HomCochain) -> HomCochain:
    """``[f, g] = f o g - (-1)^{(p+1)(q+1)} g o f``."""
    p, q = f.degree, g.degree
    if p < 1 or q < 1:
        raise BadDegree("the bracket is defined for degrees >= 1")
    return pre_lie(f, g) - pre_lie(g, f).signed((p + 1) * (q + 1))


# --- simplicial side: closed forms ---------------------------------------------

def simplicial_cup(alpha: DualCochain, beta: DualCochain) -> DualCochain:
    """Front-face / back-face product.

    On basis functionals ``(a_0..a_p)^* . (b_0..b_q)^*`` is nonzero exactly when
    ``a_0 a_1 ... a_p = b_1 ... b_q b_0`` and then equals
    ``(b_0 (a_1...a_p)^-1, a_1..a_p, b_1..b_q)^*``.
    """
    _pair_check(alpha, beta, DualCochain)
    G, ring = alpha.group, alpha.ring
    mul, inv, prod = G.mul, G.inv, G.prod
    left = {}
    for ka, ca in alpha.terms.items():
        left.setdefault(prod(ka), []).append((inv(prod(ka[1:])), ka[1:], ca))
    out = {}
    for kb, cb in beta.terms.items():
        b0, brest = kb[0], kb[1:]
        target = mul(prod(brest), b0)
        for ainv, arest, ca in left.get(target, ()):
            accumulate(ring, out, (mul(b0, ainv), *arest, *brest), ring.mul(ca, cb))
    return DualCochain._make(G, ring, alpha.degree + beta.degree, out)


def cup_one_term(alpha: DualCochain, beta: DualCochain, j: int) -> DualCochain:
    """Unsigned j-th summand of the cup-one product.

    ``(a)^* cup_1 (b)^*`` contributes ``(a_0..a_j, b_1..b_q, a_{j+2}..a_p)^*`` when
    ``b_1...b_q = a_{j+1}`` and ``a_{j+2}...a_p a_0...a_j = b_0``.  A degree-0
    right factor has no nondegenerate summand and gives zero.
    """
    _pair_check(alpha, beta, DualCochain)
    p, q = alpha.degree, beta.degree
    if p < 1 or not 0 <= j <= p - 1:
        raise BadIndex(f"cup-one term {j} needs 0 <= j < p = {p}")
    G, ring = alpha.group, alpha.ring
    out = {}
    if q == 0:
        return DualCochain._make(G, ring, p - 1, out)
    prod = G.prod
    right = {}
    for kb, cb in beta.terms.items():
        right.setdefault((prod(kb[1:]), kb[0]), []).append((kb[1:], cb))
    for ka, ca in alpha.terms.items():
        wrap = prod((*ka[j + 2:], *ka[:j + 1]))
        for brest, cb in right.get((ka[j + 1], wrap), ()):
            accumulate(ring, out, (*ka[:j + 1], *brest, *ka[j + 2:]), ring.mul(ca, cb))
    return DualCochain._make(G, ring, p + q - 1, out)


def cup_one(alpha: DualCochain, beta: DualCochain) -> DualCochain:
    p, q = alpha.degree, beta.degree
    if p < 1:
        raise BadDegree("cup-one needs deg alpha >= 1")
    out = DualCochain.zero(alpha.group, alpha.ring, p + q - 1)
    for j in range(p):
        out = out + cup_one_term(alpha, beta, j).signed(prelie_sign(j, p, q))
    return out


# --- overlapping partitions ------------------------------------------------------

@dataclass(frozen=True)
class OverlapPartition:
    """One summand of a cup-i product on the vertices ``0..n``."""

    p: int
    q: int
    i: int
    cuts: tuple
    even: tuple
    odd: tuple
    parity: int

    @property
    def n(self) -> int:
        return self.p + self.q - self.i

    def intervals(self) -> list:
        bounds = (0, *self.cuts, self.n)
        return [tuple(range(bounds[k], bounds[k + 1] + 1)) for k in range(self.i + 2)]


def partition_sign(p: int, q: int, i: int, cuts) -> int:
    """Parity of the sign attached to the partition with the given cut points."""
    if i == 0:
        return 0
    n = p + q - i
    bounds = (0, *cuts, n)
    in_odd = set()
    for k in range(1, i + 2, 2):
        in_odd.update(range(bounds[k], bounds[k + 1] + 1))
    e = sum(v for v in range(n + 1) if v not in in_odd)
    e += (p - 1) * (p - 2) // 2 + (p - 1) * ((i - 1) // 2) + q * (i * (i - 1) // 2)
    return e % 2


@lru_cache(maxsize=None)
def overlap_partitions(p: int, q: int, i: int) -> tuple:
    """All nondegenerate overlapping partitions for ``cup_i`` of degrees p and q.

    Cut points are strictly increasing, so every interior interval has at least
    two vertices; the outer intervals may be single vertices.
    """
    import itertools

    n = p + q - i
    if n < 0 or i < 0:
        return ()
    out = []
    for cuts in itertools.combinations(range(n + 1), i + 1):
        bounds = (0, *cuts, n)
        even, odd = set(), set()
        for k in range(i + 2):
            (even if k % 2 == 0 else odd).update(range(bounds[k], bounds[k + 1] + 1))
        if len(even) == p + 1 and len(odd) == q + 1:
            out.append(OverlapPartition(p, q, i, cuts, tuple(sorted(even)),
                                        tuple(sorted(odd)), partition_sign(p, q, i, cuts)))
    return tuple(out)


@lru_cache(maxsize=None)
def _plan(p: int, q: int, i: int) -> tuple:
    """Per partition: where each ``g_v`` (v >= 1) is read from, and alpha's wrap tail."""
    plans = []
    for part in overlap_partitions(p, q, i):
        epos = {v: k for k, v in enumerate(part.even)}
        opos = {v: k for k, v in enumerate(part.odd)}
        bounds = (0, *part.cuts, part.n)
        source = []
        for v in range(1, part.n + 1):
            k = next(k for k in range(i + 2) if bounds[k] <= v - 1 and v <= bounds[k + 1])
            source.append((0, epos[v]) if k % 2 == 0 else (1, opos[v]))
        tail = tuple(range(part.even[-1] + 1, part.n + 1))
        plans.append((part, tuple(source), tail))
    return tuple(plans)


def restrict(group, sigma, keep) -> tuple:
    """Face on the vertices ``keep``: deleted runs merge into the next kept vertex, cyclically."""
    prod = group.prod
    out = [prod((*sigma[keep[-1] + 1:], *sigma[:keep[0] + 1]))]
    for a, b in zip(keep, keep[1:]):
        out.append(prod(sigma[a + 1:b + 1]))
    return tuple(out)


def _cup_i_basis(group, a, b, plans):
    """Yield ``(sigma, parity)`` for each partition on which ``(a)^* cup_i (b)^*`` is nonzero."""
    mul, inv, prod = group.mul, group.inv, group.prod
    for part, source, tail in plans:
        gs = [a[pos] if side == 0 else b[pos] for side, pos in source]
        g0 = mul(inv(prod(gs[v - 1] for v in tail)), a[0])
        sigma = (g0, *gs)
        if restrict(group, sigma, part.even) == a and restrict(group, sigma, part.odd) == b:
            yield sigma, part.parity


def cup_i(alpha: DualCochain, beta: DualCochain, i: int) -> DualCochain:
    """Steenrod's cup-i product as a signed sum over overlapping partitions."""
    _pair_check(alpha, beta, DualCochain)
    p, q = alpha.degree, beta.degree
    if i < 0 or p + q - i < 0:
        raise NegativeDegree(f"cup_{i} of degrees {p} and {q} has negative degree")
    G, ring = alpha.group, alpha.ring
    plans = _plan(p, q, i)
    out = {}
    if plans:
        for ka, ca in alpha.terms.items():
            for kb, cb in beta.terms.items():
                c = ring.mul(ca, cb)
                for sigma, parity in _cup_i_basis(G, ka, kb, plans):
                    accumulate(ring, out, sigma, ring.signed(parity, c))
    return DualCochain._make(G, ring, p + q - i, out)


def ladder_coefficients(i: int, p: int, q: int) -> dict:
    """Sign parities in ``b*(a cup_i b)`` for the convention implemented here.

    Keys: ``"left"`` on ``b*a cup_i b``, ``"right"`` on ``a cup_i b*b``,
    ``"same"`` on ``a cup_{i-1} b`` and ``"swap"`` on ``b cup_{i-1} a``.
    """
    if i < 1:
        raise BadIndex("the ladder identity starts at i = 1")
    return {
        "left": (i * (i - 1) // 2) % 2,
        "right": (i * (i + 1) // 2 + p) % 2,
        "same": (p + (i - 1) * (p + q + 1)) % 2,
        "swap": (1 + p + p * q) % 2,
    }


def literal_ladder_coefficients(i: int, p: int, q: int) -> dict:
    """The uniform-in-i form, ``+b*a cup_i b + (-1)^{p-1} a cup_i b*b + ...``."""
    coeffs = ladder_coefficients(i, p, q)
    coeffs["left"] = 0
    coeffs["right"] = (p - 1) % 2
    return coeffs


# --- transported products ----------------------------------------------------------

def hom_simplicial_cup(f: HomCochain, g: HomCochain) -> HomCochain:
    _pair_check(f, g, HomCochain)
    return psi(simplicial_cup(phi(f), phi(g)))


def hom_cup_i(f: HomCochain, g: HomCochain, i: int) -> HomCochain:
    _pair_check(f, g, HomCochain)
    return psi(cup_i(phi(f), phi(g), i))


def hom_cup_one(f: HomCochain, g: HomCochain) -> HomCochain:
    _pair_check(f, g, HomCochain)
    return psi(cup_one(phi(f), phi(g)))


def steenrod_square(f: HomCochain, i: int, check_cocycle=True) -> HomCochain:
    """``Sq^i f = f cup_{p-i} f`` for a mod-2 cocycle f of degree p."""
    from .differentials import hochschild_delta

    if f.ring.characteristic != 2:
        raise NotGF2("Steenrod squares need GF(2) coefficients")
    p = f.degree
    if not 0 <= i <= p:
        raise BadIndex(f"Sq^{i} on degree {p}: need 0 <= i <= p")
    if check_cocycle and hochschild_delta(f):
        raise NotACocycle("Sq^i is only defined on cocycles")
    return hom_cup_i(f, f, p - i)
