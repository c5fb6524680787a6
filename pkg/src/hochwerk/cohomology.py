"""Cohomology of the two cochain complexes by exact linear algebra.

Degree-n cochains are coordinate vectors indexed by basis tuples of length
n + 1 in lexicographic order, so the index of a tuple is its radix-|G| code.
The BG-supported subcomplex is indexed by position in :func:`bg_basis`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

from .cochains import (DualCochain, HomCochain, basis_cap, basis_size, decode,
                       encode)
from .differentials import b_star, hochschild_delta
from .errors import (BadDegree, BasisTooLarge, HochwerkError, Mismatch, NotAField,
                     NotACoboundary, NotGF2)
from .groups import FiniteGroup
from .linalg import (SparseMatrix, echelon, rank, rank_kernel_image,
                     smith_normal_form, solve)
from .products import steenrod_square
from .rings import GF2, QQ, RingSpec
from .transport import bg_basis, psi

_DIFF = {"hom": (HomCochain, hochschild_delta), "dual": (DualCochain, b_star)}


def _check_cap(G: FiniteGroup, n: int, cap):
    size = basis_size(G, n + 1)
    limit = basis_cap(cap)
    if size > limit:
        raise BasisTooLarge(size, limit)


def _matrix(G, ring, n, kind, bg, cap):
    if n < 0:
        raise BadDegree("differential matrices start in degree 0")
    _check_cap(G, n, cap)
    cls, diff = _DIFF[kind]
    if bg:
        if kind != "dual":
            raise Mismatch("the BG-supported subcomplex lives on dual cochains")
        src = bg_basis(G, n)
        dst_index = {k: r for r, k in enumerate(bg_basis(G, n + 1))}
        rows = len(dst_index)
        index = dst_index.__getitem__
    else:
        order = G.order
        src = (decode(order, n + 1, c) for c in range(basis_size(G, n)))
        rows = basis_size(G, n + 1)
        index = lambda key: encode(order, key)  # noqa: E731
    columns = []
    for key in src:
        image = diff(cls.basis(G, ring, key))
        columns.append({index(k): v for k, v in image.terms.items()})
    return SparseMatrix(rows, len(columns), ring, columns)


@lru_cache(maxsize=64)
def _cached_matrix(G, ring, n, kind, bg, cap):
    return _matrix(G, ring, n, kind, bg, cap)


def delta_matrix(G: FiniteGroup, ring: RingSpec, n: int, cap=None) -> SparseMatrix:
    """Matrix of ``delta: C^n -> C^{n+1}`` on the ``#`` bases."""
    return _cached_matrix(G, ring, n, "hom", False, basis_cap(cap))


def b_star_matrix(G: FiniteGroup, ring: RingSpec, n: int, cap=None, bg_only=False) -> SparseMatrix:
    """Matrix of ``b*`` on the ``*`` bases, or on the BG-supported sub-bases."""
    return _cached_matrix(G, ring, n, "dual", bool(bg_only), basis_cap(cap))


def differential_matrix(G, ring, n, kind="hom", bg_only=False, cap=None) -> SparseMatrix:
    if kind == "hom":
        if bg_only:
            raise Mismatch("the BG-supported subcomplex lives on dual cochains")
        return delta_matrix(G, ring, n, cap)
    return b_star_matrix(G, ring, n, cap, bg_only)



# --- vectors <-> cochains ----------------------------------------------------------

def to_vector(c) -> dict:
    order = c.group.order
    return {encode(order, k): v for k, v in c.terms.items()}


def from_vector(vec: dict, G, ring, n, cls=HomCochain) -> HomCochain:
    return cls._make(G, ring, n, {decode(G.order, n + 1, i): v for i, v in vec.items() if v != 0})


def _bg_from_vector(vec, G, ring, n):
    keys = bg_basis(G, n)
    return DualCochain._make(G, ring, n, {keys[i]: v for i, v in vec.items() if v != 0})


# --- reports ------------------------------------------------------------------------

@dataclass
class CohomologyReport:
    group: str
    ring: str
    degree: int
    dim_kernel: int
    dim_image_in: int
    betti: int | None = None
    free_rank: int | None = None
    torsion: list = field(default_factory=list)
    complex: str = "hom"

    def to_json(self) -> dict:
        out = {"group": self.group, "ring": self.ring, "degree": self.degree}
        if self.betti is not None:
            out["betti"] = self.betti
        else:
            out["free_rank"] = self.free_rank
            out["torsion"] = list(self.torsion)
        out["dim_kernel"] = self.dim_kernel
        out["dim_image_in"] = self.dim_image_in
        return out

    def summary(self) -> tuple:
        return (self.betti,) if self.betti is not None else (self.free_rank, tuple(self.torsion))


def hh_report(G: FiniteGroup, ring: RingSpec, n: int, cap=None, kind="hom") -> CohomologyReport:
    """Dimension (fields) or free rank and torsion (Z) of the degree-n cohomology."""
    if n < 0:
        raise BadDegree("negative degree")
    N = basis_size(G, n)
    out_mat = differential_matrix(G, ring, n, kind, cap=cap)
    in_mat = differential_matrix(G, ring, n - 1, kind, cap=cap) if n > 0 else None
    if ring.is_field:
        r_out = rank(out_mat)
        r_in = rank(in_mat) if in_mat is not None else 0
        return CohomologyReport(G.name, str(ring), n, N - r_out, r_in,
                                betti=N - r_out - r_in, complex=kind)
    # over Z the kernel is saturated, so the torsion is that of coker(d_{n-1})
    r_out = rank(out_mat.with_ring(QQ))
    if in_mat is not None:
        snf = smith_normal_form(in_mat)
        r_in, torsion = snf.rank, snf.torsion
    else:
        r_in, torsion = 0, []
    return CohomologyReport(G.name, str(ring), n, N - r_out, r_in,
                            free_rank=N - r_out - r_in, torsion=torsion, complex=kind)


def hh_reports(G: FiniteGroup, ring: RingSpec, max_degree: int, cap=None) -> list:
    """Reports for degrees ``0..max_degree``; both complexes are computed and must agree."""
    out = []
    for n in range(max_degree + 1):
        hom = hh_report(G, ring, n, cap, "hom")
        dual = hh_report(G, ring, n, cap, "dual")
        if hom.summary() != dual.summary():
            raise HochwerkError(f"degree {n}: delta complex gives {hom.summary()}, "
                                f"b* complex gives {dual.summary()}")
        out.append(hom)
    return out


def reports_to_json(reports) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2) + "\n"


def reports_to_tsv(reports) -> str:
    lines = ["group\tring\tdegree\tbetti\tfree_rank\ttorsion\tdim_kernel\tdim_image_in"]
    for r in reports:
        lines.append("\t".join(str(x) for x in (
            r.group, r.ring, r.degree,
            "" if r.betti is None else r.betti,
            "" if r.free_rank is None else r.free_rank,
            ",".join(map(str, r.torsion)), r.dim_kernel, r.dim_image_in)))
    return "\n".join(lines) + "\n"


# --- cocycles and coboundaries ----------------------------------------------------------

def _need_field(ring):
    if not ring.is_field:
        raise NotAField(f"{ring} is not a field")


def cocycle_basis(G: FiniteGroup, ring: RingSpec, n: int, bg_only=False, cap=None) -> list:
    """Kernel basis of the degree-n differential as HomCochains.

    With ``bg_only`` the kernel is taken in the BG-supported subcomplex of the
    dual side and transported back with psi.
    """
    _need_field(ring)
    M = differential_matrix(G, ring, n, "dual" if bg_only else "hom", bg_only, cap)
    kernel = rank_kernel_image(M).kernel
    if bg_only:
        return [psi(_bg_from_vector(v, G, ring, n)) for v in kernel]
    return [from_vector(v, G, ring, n) for v in kernel]


@lru_cache(maxsize=64)
def _image_echelon(G, ring, n, kind, cap):
    return echelon(differential_matrix(G, ring, n, kind, cap=cap), track=True)


def coboundary_witness(c, cap=None):
    """Return h with ``d h = c``, or None.  Works on HomCochains and DualCochains."""
    kind = "hom" if isinstance(c, HomCochain) else "dual" if isinstance(c, DualCochain) else None
    if kind is None:
        raise Mismatch("expected a HomCochain or DualCochain")
    _need_field(c.ring)
    G, ring, n = c.group, c.ring, c.degree
    if not c:
        return _DIFF[kind][0].zero(G, ring, max(n - 1, 0))
    if n < 1:
        return None
    sol = solve(_image_echelon(G, ring, n - 1, kind, basis_cap(cap)), to_vector(c))
    if sol is None:
        return None
    h = from_vector(sol, G, ring, n - 1, _DIFF[kind][0])
    if _DIFF[kind][1](h) != c:
        raise HochwerkError("coboundary witness failed re-substitution")
    return h


def is_coboundary(f, cap=None):
    """Witness h with ``d h = f``; raises :class:`NotACoboundary` if there is none."""
    h = coboundary_witness(f, cap)
    if h is None:
        raise NotACoboundary(f"degree-{f.degree} cochain is not a coboundary")
    return h


def is_exact(f, cap=None) -> bool:
    return coboundary_witness(f, cap) is not None


# --- cohomology bases and coordinates ---------------------------------------------

class CohomologyBasis:
    """Representatives of a basis of ``H^n`` (HomCochains), with a coordinate solver."""

    def __init__(self, G: FiniteGroup, ring: RingSpec, n: int, cap=None):
        _need_field(ring)
        self.group, self.ring, self.degree = G, ring, n
        N = basis_size(G, n)
        image_cols = differential_matrix(G, ring, n - 1, cap=cap).columns if n > 0 else []
        kernel = rank_kernel_image(delta_matrix(G, ring, n, cap)).kernel
        # extend an echelon of the image by kernel vectors until it spans the kernel
        cols = list(image_cols)
        ech = echelon(SparseMatrix(N, len(cols), ring, cols), track=False)
        reps = []
        for v in kernel:
            before = ech.rank
            ech.add_column(len(cols), v)
            cols.append(v)
            if ech.rank > before:
                reps.append(v)
        self.n_image = len(image_cols)
        self.representatives = [from_vector(v, G, ring, n) for v in reps]
        self._solver = echelon(SparseMatrix(N, len(image_cols) + len(reps), ring,
                                            list(image_cols) + reps), track=True)

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def coordinates(self, f: HomCochain) -> list:
        """Coordinates of the class of the cocycle f in the representative basis."""
        if f.degree != self.degree:
            raise Mismatch("degree mismatch")
        sol = solve(self._solver, to_vector(f))
        if sol is None:
            raise HochwerkError("cochain is not a cocycle")
        return [sol.get(self.n_image + k, 0) for k in range(self.dim)]


@dataclass
class SteenrodEntry:
    degree: int
    cls: int
    i: int
    coords: list

    def to_json(self) -> dict:
        return {"degree": self.degree, "class": self.cls, "i": self.i,
                "target_degree": self.degree + self.i, "coords": list(self.coords)}


def steenrod_table(G: FiniteGroup, max_degree: int, ring: RingSpec = GF2, cap=None) -> list:
    """``Sq^i`` on a basis of ``HH^p`` for ``p + i <= max_degree``, in target coordinates."""
    if ring.characteristic != 2:
        raise NotGF2("Steenrod squares need GF(2) coefficients")
    bases = [CohomologyBasis(G, ring, n, cap) for n in range(max_degree + 1)]
    out = []
    for p in range(max_degree + 1):
        for k, f in enumerate(bases[p].representatives):
            for i in range(0, min(p, max_degree - p) + 1):
                sq = steenrod_square(f, i, check_cocycle=False)
                out.append(SteenrodEntry(p, k, i, bases[p + i].coordinates(sq)))
    return out


def steenrod_to_json(G, entries) -> str:
    return json.dumps({"group": G.name, "ring": "GF2",
                       "entries": [e.to_json() for e in entries]}, indent=2) + "\n"


def steenrod_to_tsv(G, entries) -> str:
    lines = ["group\tdegree\tclass\ti\ttarget_degree\tcoords"]
    for e in entries:
        lines.append(f"{G.name}\t{e.degree}\t{e.cls}\t{e.i}\t{e.degree + e.i}\t"
                     + ",".join(map(str, e.coords)))
    return "\n".join(lines) + "\n"
