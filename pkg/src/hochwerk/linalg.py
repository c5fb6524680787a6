"""Exact sparse linear algebra over Z, Q and GF(p).

Matrices are stored by column, since every differential is assembled one basis
functional at a time.  Elimination is column echelon with the largest row
index as the pivot: reducing a vector against the pivots then answers both
"is it in the column span?" and "which combination of columns gives it?".

Over GF(2) a column is a Python int used as a bitset, so a reduction step is a
single XOR over the whole column.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import HochwerkError, Mismatch, NotAField
from .rings import RingSpec


class SparseMatrix:
    """``rows x cols`` matrix over ``ring``; ``columns[c]`` maps row -> nonzero entry."""

    def __init__(self, rows: int, cols: int, ring: RingSpec, columns=None):
        self.rows = rows
        self.cols = cols
        self.ring = ring
        if columns is None:
            columns = [{} for _ in range(cols)]
        if len(columns) != cols:
            raise Mismatch(f"expected {cols} columns, got {len(columns)}")
        self.columns = [{r: v for r, v in col.items() if v != 0} for col in columns]

    @classmethod
    def from_dense(cls, dense, ring: RingSpec):
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        columns = [{} for _ in range(cols)]
        for r, row in enumerate(dense):
            for c, v in enumerate(row):
                v = ring.coerce(v)
                if v != 0:
                    columns[c][r] = v
        return cls(rows, cols, ring, columns)

    def __repr__(self):
        return f"<SparseMatrix {self.rows}x{self.cols} over {self.ring} nnz={self.nnz}>"

    def __eq__(self, other):
        return (isinstance(other, SparseMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.columns == other.columns)

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self.columns)

    def entries(self):
        for c, col in enumerate(self.columns):
            for r, v in col.items():
                yield r, c, v

    def is_zero(self) -> bool:
        return not any(self.columns)

    def to_dense(self) -> list:
        out = [[0] * self.cols for _ in range(self.rows)]
        for r, c, v in self.entries():
            out[r][c] = v
        return out

    def matvec(self, vec: dict) -> dict:
        """Apply to a sparse vector ``{col: value}``."""
        ring = self.ring
        out = {}
        for c, x in vec.items():
            for r, v in self.columns[c].items():
                s = ring.add(out.get(r, 0), ring.mul(v, x))
                if s == 0:
                    out.pop(r, None)
                else:
                    out[r] = s
        return out

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise Mismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        self.ring.check_same(other.ring)
        return SparseMatrix(self.rows, other.cols, self.ring,
                            [self.matvec(col) for col in other.columns])

    def with_ring(self, ring: RingSpec) -> "SparseMatrix":
        return SparseMatrix(self.rows, self.cols, ring,
                            [{r: ring.coerce(v) for r, v in col.items()} for col in self.columns])


# --- field elimination --------------------------------------------------------

@dataclass
class Echelon:
    """Column echelon form of a matrix over a field.

    ``pivots[row]`` is ``(vector, combination)``: a reduced column whose largest
    row is ``row``, and the original columns it is a combination of.
    """

    ring: RingSpec
    rows: int
    cols: int
    pivots: dict = field(default_factory=dict)
    kernel: list = field(default_factory=list)
    track: bool = True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def pivot_rows(self) -> list:
        return sorted(self.pivots)


class _GF2Echelon(Echelon):
    """Vectors and combinations are int bitsets."""

    def reduce(self, vec: int, comb: int = 0):
        piv = self.pivots
        while vec:
            lead = vec.bit_length() - 1
            hit = piv.get(lead)
            if hit is None:
                break
            vec ^= hit[0]
            comb ^= hit[1]
        return vec, comb

    def add_column(self, c: int, vec):
        if isinstance(vec, dict):
            vec = _dict_to_bits(vec)
        vec, comb = self.reduce(vec, (1 << c) if self.track else 0)
        if vec:
            self.pivots[vec.bit_length() - 1] = (vec, comb)
        elif self.track:
            self.kernel.append(comb)


class _FieldEchelon(Echelon):
    """Vectors and combinations are ``{index: value}`` dicts; pivots are monic."""

    def _axpy(self, target: dict, a, src: dict):
        ring = self.ring
        for k, v in src.items():
            s = ring.add(target.get(k, 0), ring.mul(a, v))
            if s == 0:
                target.pop(k, None)
            else:
                target[k] = s

    def reduce(self, vec: dict, comb: dict | None = None):
        ring = self.ring
        vec = dict(vec)
        comb = dict(comb or {})
        piv = self.pivots
        while vec:
            lead = max(vec)
            hit = piv.get(lead)
            if hit is None:
                break
            a = ring.neg(vec[lead])
            self._axpy(vec, a, hit[0])
            if self.track:
                self._axpy(comb, a, hit[1])
        return vec, comb

    def add_column(self, c: int, vec: dict):
        vec, comb = self.reduce(vec, {c: self.ring.one} if self.track else None)
        if vec:
            lead = max(vec)
            s = self.ring.inv(vec[lead])
            vec = {k: self.ring.mul(s, v) for k, v in vec.items()}
            comb = {k: self.ring.mul(s, v) for k, v in comb.items()}
            self.pivots[lead] = (vec, comb)
        elif self.track:
            self.kernel.append(comb)


def _bits_to_dict(bits: int) -> dict:
    out = {}
    while bits:
        low = bits & -bits
        out[low.bit_length() - 1] = 1
        bits ^= low
    return out


def _dict_to_bits(vec: dict) -> int:
    bits = 0
    for k, v in vec.items():
        if v % 2:
            bits |= 1 << k
    return bits


def echelon(M: SparseMatrix, track: bool = True) -> Echelon:
    """Eliminate ``M`` column by column; with ``track`` also keep combinations and a kernel basis."""
    if not M.ring.is_field:
        raise NotAField(f"elimination needs a field, got {M.ring}")
    if M.ring.characteristic == 2:
        ech = _GF2Echelon(M.ring, M.rows, M.cols, track=track)
        for c, col in enumerate(M.columns):
            ech.add_column(c, _dict_to_bits(col))
    else:
        ech = _FieldEchelon(M.ring, M.rows, M.cols, track=track)
        for c, col in enumerate(M.columns):
            ech.add_column(c, col)
    return ech


@dataclass
class RankResult:
    rank: int
    kernel: list
    pivot_rows: list
    echelon: Echelon


def rank_kernel_image(M: SparseMatrix) -> RankResult:
    """Rank, a kernel basis (sparse dicts, each verified ``M v = 0``) and pivot rows."""
    ech = echelon(M, track=True)
    if isinstance(ech, _GF2Echelon):
        kernel = [_bits_to_dict(k) for k in ech.kernel]
    else:
        kernel = ech.kernel
    for v in kernel:
        if M.matvec(v):
            raise HochwerkError("kernel vector failed verification")
    return RankResult(ech.rank, kernel, ech.pivot_rows, ech)


def rank(M: SparseMatrix) -> int:
    if M.ring.is_field:
        return echelon(M, track=False).rank
    return sum(1 for d in smith_normal_form(M).factors if d)


def solve(ech: Echelon, target: dict):
    """Return x with ``M x = target`` for the matrix behind ``ech``, or None."""
    if not ech.track:
        raise HochwerkError("solve needs an echelon built with track=True")
    if isinstance(ech, _GF2Echelon):
        rest, comb = ech.reduce(_dict_to_bits(target))
        return None if rest else _bits_to_dict(comb)
    rest, comb = ech.reduce(target)
    if rest:
        return None
    return {k: ech.ring.neg(v) for k, v in comb.items()}


def in_span(ech: Echelon, target: dict) -> bool:
    if isinstance(ech, _GF2Echelon):
        return not ech.reduce(_dict_to_bits(target))[0]
    saved, ech.track = ech.track, False
    try:
        return not ech.reduce(target)[0]
    finally:
        ech.track = saved


# --- Smith normal form ----------------------------------------------------------

@dataclass
class SmithForm:
    """``U @ M @ V == D`` with D diagonal ``factors`` (each dividing the next)."""

    factors: list
    U: list
    V: list
    D: list

    @property
    def rank(self) -> int:
        return sum(1 for d in self.factors if d)

    @property
    def torsion(self) -> list:
        return [d for d in self.factors if d > 1]


def _dense_mul(A, B):
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        nz = [(k, a) for k, a in enumerate(row) if a]
        out.append([sum(a * B[k][j] for k, a in nz) for j in range(cols)] if inner else [0] * cols)
    return out


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M, verify: bool = True) -> SmithForm:
    """Smith normal form of an integer matrix with unimodular certificates.

    The pivot at each step is the smallest nonzero entry of the remaining block,
    which keeps intermediate entries small in practice.  The certificate
    ``U M V = D`` is checked by multiplication before returning.
    """
    if isinstance(M, SparseMatrix):
        if M.ring.kind != "Z":
            raise NotAField(f"Smith normal form is over Z, got {M.ring}")
        A = M.to_dense()
        m, n = M.rows, M.cols
    else:
        A = [list(map(int, row)) for row in M]
        m = len(A)
        n = len(A[0]) if m else 0
    orig = [row[:] for row in A]
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        # row_dst += k * row_src
        if k:
            A[dst] = [a + k * b for a, b in zip(A[dst], A[src])]
            U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, k):
        if k:
            for row in A:
                row[dst] += k * row[src]
            for row in V:
                row[dst] += k * row[src]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    if A[t][j]:
                        clean = False
            if not clean:
                # a smaller remainder exists in row or column t; make it the pivot
                cand = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
                cand += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
                _, i, j = min(cand)
                if i != t:
                    swap_rows(t, i)
                if j != t:
                    swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1

    factors = [A[k][k] for k in range(min(m, n))]
    if verify:
        if _dense_mul(_dense_mul(U, orig), V) != A:
            raise HochwerkError("Smith normal form certificate failed")
        nz = [d for d in factors if d]
        if any(nz[k + 1] % nz[k] for k in range(len(nz) - 1)) or any(factors[len(nz):]):
            raise HochwerkError("invariant factors out of order")
    return SmithForm(factors, U, V, A)
