"""Randomized verification suites for the identities the library relies on.

Each suite is a list of named checks.  A check draws ``samples`` random cases
from a seeded generator and stops at the first counterexample, which is kept
in serialized form so a failure can be replayed.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, lcm

from .cochains import (BarCochain, DualCochain, HomCochain, cochain_to_json,
                       random_cochain)
from .cohomology import cocycle_basis, coboundary_witness
from .differentials import b_star, bar_coboundary, hochschild_delta
from .errors import HochwerkError, UnknownOp
from .products import (bracket, circle_j, cup_i, cup_one, cup_one_term,
                       gerstenhaber_cup, hom_cup_i, hom_simplicial_cup,
                       ladder_coefficients, literal_ladder_coefficients, pre_lie,
                       simplicial_cup, steenrod_square)
from .rings import GF2, QQ, ZZ
from .transport import bg_basis, phi, pi_star, psi

DEFAULT_SAMPLES = 200


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    counterexample: dict | None = None
    note: str = ""

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "cases": self.cases}
        if self.note:
            out["note"] = self.note
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class Context:
    group: object
    ring: object
    max_degree: int
    seed: int
    samples: int = DEFAULT_SAMPLES
    cap: int | None = None
    _cocycles: dict = field(default_factory=dict)

    def rng(self, name: str) -> random.Random:
        # one independent stream per check, so suites can run in any order
        return random.Random(f"{self.seed}:{name}")

    @property
    def deg(self) -> int:
        return max(1, min(self.max_degree, 3))

    def cocycles(self, n: int, bg_only: bool = False, ring=None) -> list:
        """Cocycle basis in degree n; over Z, a rational basis with denominators cleared."""
        ring = ring or self.ring
        key = (n, bg_only, ring)
        if key not in self._cocycles:
            if ring.is_field:
                basis = cocycle_basis(self.group, ring, n, bg_only, self.cap)
            else:
                basis = [_integral(c) for c in cocycle_basis(self.group, QQ, n, bg_only, self.cap)]
            self._cocycles[key] = basis
        return self._cocycles[key]

    def random_cocycle(self, rng, n, bg_only=False, ring=None):
        ring = ring or self.ring
        basis = self.cocycles(n, bg_only, ring)
        out = HomCochain.zero(self.group, ring, n)
        for c in basis:
            k = rng.choice([0, 0, 1, -1, 2])
            if k:
                out = out + c.scale(k)
        return out


def _integral(c):
    m = lcm(*(Fraction(v).denominator for v in c.terms.values())) if c.terms else 1
    return HomCochain._make(c.group, ZZ, c.degree,
                            {k: int(Fraction(v) * m) for k, v in c.terms.items()})


def _dump(**cochains) -> dict:
    return {k: (cochain_to_json(v) if hasattr(v, "terms") else v) for k, v in cochains.items()}


def _run(name, ctx, case, samples=None) -> CheckResult:
    """``case(rng)`` returns None when the identity holds, else a counterexample dict."""
    rng = ctx.rng(name)
    n = ctx.samples if samples is None else samples
    for k in range(n):
        bad = case(rng)
        if bad is not None:
            return CheckResult(name, False, k + 1, bad)
    return CheckResult(name, True, n)


def _rand(ctx, rng, cls, degree):
    return random_cochain(cls, ctx.group, ctx.ring, degree, rng)


def _rand_bg(ctx, rng, degree, terms=3):
    keys = bg_basis(ctx.group, degree)
    out = DualCochain.zero(ctx.group, ctx.ring, degree)
    for _ in range(terms):
        out = out + DualCochain.basis(ctx.group, ctx.ring, rng.choice(keys), rng.choice([1, -1, 2]))
    return out


# --- suites ----------------------------------------------------------------------

def suite_differentials(ctx):
    def square(cls, d, name):
        def case(rng):
            x = _rand(ctx, rng, cls, rng.randint(0, ctx.deg))
            if d(d(x)):
                return _dump(input=x)
        return _run(name, ctx, case)
    return [square(HomCochain, hochschild_delta, "delta-squared"),
            square(DualCochain, b_star, "b-star-squared"),
            square(BarCochain, bar_coboundary, "bar-coboundary-squared")]


def suite_lemma_phi(ctx):
    def chain_map(rng):
        f = _rand(ctx, rng, HomCochain, rng.randint(0, ctx.deg))
        if phi(hochschild_delta(f)) != b_star(phi(f)):
            return _dump(f=f)

    def inverse(rng):
        f = _rand(ctx, rng, HomCochain, rng.randint(0, ctx.deg))
        a = _rand(ctx, rng, DualCochain, rng.randint(0, ctx.deg))
        if psi(phi(f)) != f or phi(psi(a)) != a:
            return _dump(f=f, alpha=a)

    def injective(rng):
        f = _rand(ctx, rng, HomCochain, rng.randint(0, ctx.deg))
        if bool(f) != bool(phi(f)):
            return _dump(f=f)

    def psi_chain_map(rng):
        a = _rand(ctx, rng, DualCochain, rng.randint(0, ctx.deg))
        if hochschild_delta(psi(a)) != psi(b_star(a)):
            return _dump(alpha=a)

    def bg_subcomplex(rng):
        a = _rand_bg(ctx, rng, rng.randint(0, ctx.deg))
        d = b_star(a)
        G = ctx.group
        if any(G.prod(k) != G.identity for k in d.terms):
            return _dump(alpha=a)

    return [_run("phi-chain-map", ctx, chain_map), _run("psi-phi-inverse", ctx, inverse),
            _run("phi-injective", ctx, injective), _run("psi-chain-map", ctx, psi_chain_map),
            _run("bg-subcomplex", ctx, bg_subcomplex)]


def suite_lemma_psi(ctx):
    def case(rng):
        a = _rand_bg(ctx, rng, rng.randint(0, 2))
        b = _rand_bg(ctx, rng, rng.randint(0, 2))
        if psi(simplicial_cup(a, b)) != gerstenhaber_cup(psi(a), psi(b)):
            return _dump(alpha=a, beta=b)
    return [_run("psi-cup-is-gerstenhaber-cup", ctx, case)]


def _pq(ctx, rng, low=0):
    return rng.randint(low, ctx.deg), rng.randint(low, ctx.deg)


def _ladder_rhs(a, b, i, coeffs, d, cup):
    out = cup(d(a), b, i).signed(coeffs["left"]) + cup(a, d(b), i).signed(coeffs["right"])
    return out + cup(a, b, i - 1).signed(coeffs["same"]) + cup(b, a, i - 1).signed(coeffs["swap"])


def suite_leibniz(ctx):
    def gerst(rng):
        p, q = _pq(ctx, rng)
        f, g = _rand(ctx, rng, HomCochain, p), _rand(ctx, rng, HomCochain, q)
        d = hochschild_delta
        if d(gerstenhaber_cup(f, g)) != gerstenhaber_cup(d(f), g) + gerstenhaber_cup(f, d(g)).signed(p):
            return _dump(f=f, g=g)

    def simp(rng):
        p, q = _pq(ctx, rng)
        a, b = _rand(ctx, rng, DualCochain, p), _rand(ctx, rng, DualCochain, q)
        if b_star(simplicial_cup(a, b)) != simplicial_cup(b_star(a), b) + simplicial_cup(a, b_star(b)).signed(p):
            return _dump(alpha=a, beta=b)

    def prelie(rng):
        p, q = _pq(ctx, rng, 1)
        f, g = _rand(ctx, rng, HomCochain, p), _rand(ctx, rng, HomCochain, q)
        d = hochschild_delta
        rhs = pre_lie(d(f), g) + pre_lie(f, d(g)).signed(p - 1)
        rhs = rhs + (gerstenhaber_cup(f, g) - gerstenhaber_cup(g, f).signed(p * q)).signed(p)
        if d(pre_lie(f, g)) != rhs:
            return _dump(f=f, g=g)

    def cupone(rng):
        p, q = _pq(ctx, rng, 1)
        a, b = _rand(ctx, rng, DualCochain, p), _rand(ctx, rng, DualCochain, q)
        rhs = cup_one(b_star(a), b) + cup_one(a, b_star(b)).signed(p - 1)
        rhs = rhs + (simplicial_cup(a, b) - simplicial_cup(b, a).signed(p * q)).signed(p)
        if b_star(cup_one(a, b)) != rhs:
            return _dump(alpha=a, beta=b)

    def transported(rng):
        i = rng.randint(1, 3)
        p, q = _pq(ctx, rng)
        if p + q - i < 0:
            return None
        f, g = _rand(ctx, rng, HomCochain, p), _rand(ctx, rng, HomCochain, q)
        rhs = _ladder_rhs(f, g, i, ladder_coefficients(i, p, q), hochschild_delta, hom_cup_i)
        if hochschild_delta(hom_cup_i(f, g, i)) != rhs:
            return _dump(f=f, g=g, i=i)

    return [_run("gerstenhaber-leibniz", ctx, gerst), _run("simplicial-leibniz", ctx, simp),
            _run("pre-lie-homotopy", ctx, prelie), _run("cup-one-homotopy", ctx, cupone),
            _run("transported-cup-i-leibniz", ctx, transported)]


def _ladder_check(ctx, name, coeff_fn):
    def case(rng):
        i = rng.randint(1, 3)
        p, q = _pq(ctx, rng)
        if p + q - i < 0:
            return None
        a, b = _rand(ctx, rng, DualCochain, p), _rand(ctx, rng, DualCochain, q)
        if b_star(cup_i(a, b, i)) != _ladder_rhs(a, b, i, coeff_fn(i, p, q), b_star, cup_i):
            return _dump(alpha=a, beta=b, i=i)
    return _run(name, ctx, case)


def suite_ladder(ctx):
    def anchors(rng):
        p, q = _pq(ctx, rng, 1)
        a, b = _rand(ctx, rng, DualCochain, p), _rand(ctx, rng, DualCochain, q)
        if cup_i(a, b, 0) != simplicial_cup(a, b) or cup_i(a, b, 1) != cup_one(a, b):
            return _dump(alpha=a, beta=b)
    return [_run("cup-0-and-cup-1-anchors", ctx, anchors),
            _ladder_check(ctx, "cup-i-ladder", ladder_coefficients)]


def suite_ladder_literal(ctx):
    return [_ladder_check(ctx, "cup-i-ladder-uniform-signs", literal_ladder_coefficients)]


def suite_theorem_jterm(ctx):
    def jterm(rng):
        p, q = _pq(ctx, rng, 1)
        a, b = _rand_bg(ctx, rng, p), _rand_bg(ctx, rng, q)
        for j in range(p):
            if psi(cup_one_term(a, b, j)) != circle_j(psi(a), psi(b), j):
                return _dump(alpha=a, beta=b, j=j)

    def prelie(rng):
        p, q = _pq(ctx, rng, 1)
        a, b = _rand_bg(ctx, rng, p), _rand_bg(ctx, rng, q)
        if psi(cup_one(a, b)) != pre_lie(psi(a), psi(b)):
            return _dump(alpha=a, beta=b)

    return [_run("cup-one-term-is-circle-j", ctx, jterm),
            _run("cup-one-is-pre-lie", ctx, prelie)]


def suite_corollary_conjugacy(ctx):
    G = ctx.group
    cls = G.class_index

    def case(rng):
        p, q = rng.randint(0, 2), rng.randint(0, 2)
        ka = tuple(rng.randrange(G.order) for _ in range(p + 1))
        kb = tuple(rng.randrange(G.order) for _ in range(q + 1))
        if cls[G.prod(ka)] == cls[G.prod(kb)]:
            return None
        a = DualCochain.basis(G, ctx.ring, ka)
        b = DualCochain.basis(G, ctx.ring, kb)
        if simplicial_cup(a, b):
            return _dump(alpha=a, beta=b)
    return [_run("cup-vanishes-across-classes", ctx, case)]


def suite_corollary_zero_bracket(ctx):
    top = min(ctx.deg, 2)

    def witness(rng):
        p, q = rng.randint(1, top), rng.randint(1, top)
        f = ctx.random_cocycle(rng, p, bg_only=True)
        g = ctx.random_cocycle(rng, q, bg_only=True)
        w = psi(cup_i(phi(f), phi(g), 2).signed(q + 1))
        if hochschild_delta(w) != bracket(f, g):
            return _dump(f=f, g=g)
        if ctx.ring.is_field:
            h = coboundary_witness(bracket(f, g), ctx.cap)
            if h is None or hochschild_delta(h - w):
                return _dump(f=f, g=g, note="solver disagrees with explicit witness")

    return [_run("bracket-of-bg-cocycles-is-coboundary", ctx, witness, max(1, ctx.samples // 10))]


def suite_corollary_steenrod(ctx):
    """Always mod 2: the squares only exist with GF(2) coefficients."""
    G = ctx.group
    top = min(ctx.max_degree, 3)
    n = max(1, ctx.samples // 10)

    def ring_ctx():
        return Context(G, GF2, ctx.max_degree, ctx.seed, ctx.samples, ctx.cap, ctx._cocycles)

    c2 = ring_ctx()

    def well_defined(rng):
        p = rng.randint(1, max(1, top - 1))
        i = rng.randint(0, min(p, top - p)) if top > p else 0
        f = c2.random_cocycle(rng, p, ring=GF2)
        h = random_cochain(HomCochain, G, GF2, p - 1, rng)
        sq = steenrod_square(f, i)
        if hochschild_delta(sq):
            return _dump(f=f, i=i, note="square is not a cocycle")
        diff = steenrod_square(f + hochschild_delta(h), i) - sq
        if coboundary_witness(diff, ctx.cap) is None:
            return _dump(f=f, h=h, i=i)

    def top_square(rng):
        p = rng.randint(1, top)
        f = c2.random_cocycle(rng, p, ring=GF2)
        if steenrod_square(f, p) != hom_simplicial_cup(f, f):
            return _dump(f=f)

    out = [_run("square-well-defined", ctx, well_defined, n),
           _run("top-square-is-cup-square", ctx, top_square, n)]
    if G.order == 2:
        out.append(_binomial_pattern(G, ctx.cap))
    return out


def pulled_back_class(G, p):
    """psi(pi*(t^p)) with t the generator of mod-2 group cohomology of C2."""
    x = next(g for g in G.elements() if g != G.identity)
    return psi(pi_star(BarCochain.basis(G, GF2, (x,) * p)))


def _binomial_pattern(G, cap, top=3) -> CheckResult:
    cases = 0
    for p in range(1, top + 1):
        for i in range(0, p + 1):
            if p + i > top:
                continue
            cases += 1
            d = steenrod_square(pulled_back_class(G, p), i)
            if comb(p, i) % 2:
                d = d - pulled_back_class(G, p + i)
            if coboundary_witness(d, cap) is None:
                return CheckResult("binomial-pattern-on-pulled-back-classes", False, cases,
                                   {"p": p, "i": i})
    return CheckResult("binomial-pattern-on-pulled-back-classes", True, cases)


def suite_graded_commutativity(ctx):
    top = min(ctx.deg, 2)

    def case(rng):
        p, q = rng.randint(1, top), rng.randint(1, top)
        f = ctx.random_cocycle(rng, p)
        g = ctx.random_cocycle(rng, q)
        comm = gerstenhaber_cup(f, g) - gerstenhaber_cup(g, f).signed(p * q)
        # explicit homotopy: delta(f o g) = (-1)^p comm for cocycles
        if hochschild_delta(pre_lie(f, g)) != comm.signed(p):
            return _dump(f=f, g=g)
        if ctx.ring.is_field and coboundary_witness(comm, ctx.cap) is None:
            return _dump(f=f, g=g, note="solver finds no witness")

    return [_run("cup-graded-commutative", ctx, case, max(1, ctx.samples // 2))]


SUITES = {
    "differentials": suite_differentials,
    "lemma-phi": suite_lemma_phi,
    "lemma-psi": suite_lemma_psi,
    "leibniz": suite_leibniz,
    "ladder": suite_ladder,
    "ladder-uniform-signs": suite_ladder_literal,
    "theorem-jterm": suite_theorem_jterm,
    "corollary-conjugacy": suite_corollary_conjugacy,
    "corollary-zero-bracket": suite_corollary_zero_bracket,
    "corollary-steenrod": suite_corollary_steenrod,
    "graded-commutativity": suite_graded_commutativity,
}


def run_suites(names, ctx: Context) -> dict:
    """Run suites in name order; returns ``{suite: [CheckResult, ...]}``."""
    if isinstance(names, str):
        names = [names]
    if "all" in names:
        names = list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UnknownOp(f"unknown suite(s): {', '.join(unknown)}; choose from {', '.join(SUITES)} or all")
    out = {}
    for name in sorted(set(names)):
        try:
            out[name] = SUITES[name](ctx)
        except HochwerkError as exc:
            out[name] = [CheckResult(name, False, 0, None, f"error: {exc}")]
    return out


def report_json(ctx: Context, results: dict) -> str:
    body = {
        "group": ctx.group.name, "ring": str(ctx.ring), "max_degree": ctx.max_degree,
        "seed": ctx.seed, "samples": ctx.samples,
        "suites": {name: [r.to_json() for r in checks] for name, checks in results.items()},
        "passed": all(r.passed for checks in results.values() for r in checks),
    }
    return json.dumps(body, indent=2) + "\n"


def report_tsv(ctx: Context, results: dict) -> str:
    lines = [f"# group={ctx.group.name} ring={ctx.ring} max_degree={ctx.max_degree} "
             f"seed={ctx.seed} samples={ctx.samples}",
             "suite\tcheck\tstatus\tcases\tcounterexample"]
    for name, checks in results.items():
        for r in checks:
            cx = json.dumps(r.counterexample, sort_keys=True) if r.counterexample else r.note
            lines.append(f"{name}\t{r.name}\t{'PASS' if r.passed else 'FAIL'}\t{r.cases}\t{cx}")
    return "\n".join(lines) + "\n"
