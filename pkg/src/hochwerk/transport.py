"""Maps between the two cochain complexes and the BG-supported subcomplex.

``phi`` and ``psi`` are the basis maps ``(g0, g1..gn)^# <-> (g0^-1, g1..gn)^*``
coming from the Frobenius pairing ``<g, h> = [h = g^-1]`` on k[G].  For a
finite group they are mutually inverse isomorphisms of cochain complexes.
"""

from __future__ import annotations

import itertools

from .cochains import (BarCochain, DualCochain, HomCochain, accumulate)
from .errors import Mismatch


def inner_product(group, ring, u: dict, v: dict):
    """Bilinear extension of ``<g, h> = 1 if h = g^-1 else 0`` to k[G]."""
    total = ring.zero
    for g, a in u.items():
        b = v.get(group.inv(g))
        if b is not None:
            total = ring.add(total, ring.mul(ring.coerce(a), ring.coerce(b)))
    return total


def phi(f: HomCochain) -> DualCochain:
    if not isinstance(f, HomCochain):
        raise Mismatch("phi expects a HomCochain")
    inv = f.group.inv
    return DualCochain._make(f.group, f.ring, f.degree,
                             {(inv(k[0]), *k[1:]): c for k, c in f.terms.items()})


def psi(alpha: DualCochain) -> HomCochain:
    if not isinstance(alpha, DualCochain):
        raise Mismatch("psi expects a DualCochain")
    inv = alpha.group.inv
    return HomCochain._make(alpha.group, alpha.ring, alpha.degree,
                            {(inv(k[0]), *k[1:]): c for k, c in alpha.terms.items()})


def iota_star(alpha: DualCochain) -> BarCochain:
    """Pull back along ``iota(g_1..g_n) = ((g_1...g_n)^-1, g_1..g_n)``."""
    G = alpha.group
    e = G.identity
    out = {}
    for key, c in alpha.terms.items():
        if G.prod(key) == e:
            out[key[1:]] = c
    return BarCochain._make(G, alpha.ring, alpha.degree, out)


def pi_star(gamma: BarCochain) -> DualCochain:
    """Pull back along the projection dropping ``g_0``; each term fans out over G."""
    G, ring = gamma.group, gamma.ring
    out = {}
    for key, c in gamma.terms.items():
        for g0 in G.elements():
            accumulate(ring, out, (g0, *key), c)
    return DualCochain._make(G, ring, gamma.degree, out)


def is_supported_on_bg(alpha: DualCochain) -> bool:
    G = alpha.group
    return all(G.prod(key) == G.identity for key in alpha.terms)


def restrict_to_bg(alpha: DualCochain) -> DualCochain:
    G = alpha.group
    e = G.identity
    return DualCochain._make(G, alpha.ring, alpha.degree,
                             {k: c for k, c in alpha.terms.items() if G.prod(k) == e})


def bg_basis(group, degree) -> list:
    """Tuples ``(g0..gn)`` with ``g0 g1 ... gn = e``, in lexicographic order of ``g1..gn``."""
    out = []
    for rest in itertools.product(group.elements(), repeat=degree):
        out.append((group.inv(group.prod(rest)), *rest))
    out.sort()
    return out
