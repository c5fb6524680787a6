"""The Hochschild coboundary, the cyclic boundary b, its dual, and the bar coboundary.

All of them act on sparse cochains term by term: every basis functional is
scattered onto the basis functionals of the next degree that it meets.
"""

from __future__ import annotations

from .cochains import (BarCochain, DualCochain, HomCochain, accumulate,
                       cyclic_face)
from .errors import Mismatch
from .groups import FiniteGroup


def hochschild_delta(f: HomCochain) -> HomCochain:
    """``(df)(a_1..a_{n+1}) = a_1 f(a_2..) + sum (-1)^i f(.., a_i a_{i+1}, ..) + (-1)^{n+1} f(..) a_{n+1}``."""
    if not isinstance(f, HomCochain):
        raise Mismatch("hochschild_delta expects a HomCochain")
    G, ring, n = f.group, f.ring, f.degree
    mul, inv = G.mul, G.inv
    elems = G.elements()
    out = {}
    if n == 0:
        # commutator: (df)(a) = a f(1) - f(1) a
        for (g0,), c in f.terms.items():
            minus = ring.neg(c)
            for a in elems:
                accumulate(ring, out, (mul(a, g0), a), c)
                accumulate(ring, out, (mul(g0, a), a), minus)
        return HomCochain._make(G, ring, 1, out)

    for key, c in f.terms.items():
        g0, gs = key[0], key[1:]
        for a in elems:
            accumulate(ring, out, (mul(a, g0), a, *gs), c)
        for i in range(1, n + 1):
            ci = ring.signed(i, c)
            gi = gs[i - 1]
            for x in elems:
                accumulate(ring, out, (g0, *gs[:i - 1], x, mul(inv(x), gi), *gs[i:]), ci)
        last = ring.signed(n + 1, c)
        for y in elems:
            accumulate(ring, out, (mul(g0, y), *gs, y), last)
    return HomCochain._make(G, ring, n + 1, out)


def chain_boundary(group: FiniteGroup, sigma, ring=None) -> dict:
    """``b(a_0..a_n) = sum_i (-1)^i d_i(a_0..a_n)`` as a dict of tuples to integers."""
    sigma = tuple(sigma)
    out = {}
    for i in range(len(sigma)):
        face = cyclic_face(group, sigma, i)
        out[face] = out.get(face, 0) + (-1) ** i
    out = {k: v for k, v in out.items() if v}
    if ring is not None:
        out = {k: ring.coerce(v) for k, v in out.items() if ring.coerce(v) != 0}
    return out


def b_star(phi: DualCochain) -> DualCochain:
    """Adjoint of b: scatter each ``(t)^*`` onto all tuples having t as a signed face."""
    if not isinstance(phi, DualCochain):
        raise Mismatch("b_star expects a DualCochain")
    G, ring, n = phi.group, phi.ring, phi.degree
    mul, inv = G.mul, G.inv
    elems = G.elements()
    out = {}
    for t, c in phi.terms.items():
        # d_i for i <= n merges slots i, i+1 into t[i]
        for i in range(n + 1):
            ci = ring.signed(i, c)
            ti = t[i]
            head, tail = t[:i], t[i + 1:]
            for x in elems:
                accumulate(ring, out, (*head, x, mul(inv(x), ti), *tail), ci)
        # d_{n+1}(a_0..a_{n+1}) = (a_{n+1} a_0, a_1..a_n)
        cl = ring.signed(n + 1, c)
        t0, rest = t[0], t[1:]
        for y in elems:
            accumulate(ring, out, (mul(inv(y), t0), *rest, y), cl)
    return DualCochain._make(G, ring, n + 1, out)


def bar_coboundary(gamma: BarCochain) -> BarCochain:
    """Group cohomology differential ``sum_i (-1)^i gamma o d_i`` on ``B_*(G)``."""
    if not isinstance(gamma, BarCochain):
        raise Mismatch("bar_coboundary expects a BarCochain")
    G, ring, n = gamma.group, gamma.ring, gamma.degree
    mul, inv = G.mul, G.inv
    elems = G.elements()
    out = {}
    for t, c in gamma.terms.items():
        for x in elems:
            accumulate(ring, out, (x, *t), c)
        for i in range(1, n + 1):
            ci = ring.signed(i, c)
            ti = t[i - 1]
            for x in elems:
                accumulate(ring, out, (*t[:i - 1], x, mul(inv(x), ti), *t[i:]), ci)
        cl = ring.signed(n + 1, c)
        for x in elems:
            accumulate(ring, out, (*t, x), cl)
    return BarCochain._make(G, ring, n + 1, out)
