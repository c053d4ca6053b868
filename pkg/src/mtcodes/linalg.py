"""Matrices over F_q and over F_q[x].

:class:`MatrixFq` supports the row-space machinery needed to handle codes as
explicit subspaces (RREF, null spaces, row-space equality).  :class:`PolyMatrix`
carries the polynomial matrices used by the dimension formulas: exact
determinants, gcds of all k x k minors, and a Hermite-style triangular basis of
the row module.
"""

from __future__ import annotations

import functools
import itertools
import math
from typing import Iterable, Sequence

from .algebra import FieldSpec, Poly, poly_gcd
from .errors import FieldMismatch, RankDeficient, ShapeError, TooManyMinors

DEFAULT_MAX_MINORS = 10**4
COFACTOR_LIMIT = 4


class MatrixFq:
    """Dense matrix over F_q; entries are element codes, stored row-major."""

    __slots__ = ("spec", "rows", "cols", "entries")

    def __init__(self, spec: FieldSpec, rows: Iterable[Sequence[int]], cols: int | None = None):
        data = tuple(tuple(r) for r in rows)
        if cols is None:
            if not data:
                raise ShapeError("column count required for an empty matrix")
            cols = len(data[0])
        q = spec.q
        for r in data:
            if len(r) != cols:
                raise ShapeError(f"ragged row of length {len(r)}, expected {cols}")
            for c in r:
                if not 0 <= c < q:
                    raise ValueError(f"entry {c} outside [0, {q})")
        self.spec = spec
        self.rows = len(data)
        self.cols = cols
        self.entries = data

    @classmethod
    def _raw(cls, spec, data, cols):
        obj = object.__new__(cls)
        obj.spec = spec
        obj.rows = len(data)
        obj.cols = cols
        obj.entries = tuple(tuple(r) for r in data)
        return obj

    @classmethod
    def zeros(cls, spec: FieldSpec, rows: int, cols: int) -> "MatrixFq":
        return cls._raw(spec, [[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> "MatrixFq":
        return cls._raw(spec, [[int(i == j) for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, MatrixFq):
            return NotImplemented
        return (self.spec, self.cols, self.entries) == (other.spec, other.cols, other.entries)

    def __hash__(self):
        return hash((self.cols, self.entries))

    def __repr__(self):
        return f"MatrixFq({self.rows}x{self.cols}, {[list(r) for r in self.entries]})"

    def row_list(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def nonzero_rows(self) -> "MatrixFq":
        return MatrixFq._raw(self.spec, [r for r in self.entries if any(r)], self.cols)

    def stack(self, other: "MatrixFq") -> "MatrixFq":
        _check_pair(self, other)
        return MatrixFq._raw(self.spec, self.entries + other.entries, self.cols)

    def columns(self, idx: Sequence[int]) -> "MatrixFq":
        return MatrixFq._raw(self.spec, [[r[j] for j in idx] for r in self.entries], len(idx))

    def mul_transpose(self, other: "MatrixFq") -> "MatrixFq":
        """Return self * other^T."""
        _check_pair(self, other)
        add, mul = self.spec._add, self.spec._mul
        out = []
        for a in self.entries:
            row = []
            for b in other.entries:
                acc = 0
                for x, y in zip(a, b):
                    if x and y:
                        acc = add[acc][mul[x][y]]
                row.append(acc)
            out.append(row)
        return MatrixFq._raw(self.spec, out, other.rows)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)


def _check_pair(a: MatrixFq, b: MatrixFq) -> None:
    if a.spec != b.spec:
        raise FieldMismatch(f"{a.spec} vs {b.spec}")
    if a.cols != b.cols:
        raise ShapeError(f"column counts differ: {a.cols} vs {b.cols}")


def _rref_rows(spec: FieldSpec, rows: list[list[int]], cols: int) -> tuple[list[list[int]], list[int]]:
    """In-place Gauss-Jordan elimination; returns (rows, pivot columns)."""
    add, mul, neg, inv = spec._add, spec._mul, spec._neg, spec._inv
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(cols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        s = inv[pr[c]]
        if s != 1:
            srow = mul[s]
            rows[r] = pr = [srow[v] for v in pr]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    nf = mul[neg[f]]
                    ri = rows[i]
                    rows[i] = [add[x][nf[y]] if y else x for x, y in zip(ri, pr)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(M: MatrixFq) -> tuple[MatrixFq, int]:
    """Reduced row-echelon form (same shape as ``M``) and rank."""
    rows, pivots = _rref_rows(M.spec, M.row_list(), M.cols)
    return MatrixFq._raw(M.spec, rows, M.cols), len(pivots)


def rank(M: MatrixFq) -> int:
    return rref(M)[1]


def row_basis(M: MatrixFq) -> MatrixFq:
    """RREF basis of the row space, zero rows dropped."""
    rows, pivots = _rref_rows(M.spec, M.row_list(), M.cols)
    return MatrixFq._raw(M.spec, rows[: len(pivots)], M.cols)


def pivot_columns(M: MatrixFq) -> list[int]:
    return _rref_rows(M.spec, M.row_list(), M.cols)[1]


def null_space(M: MatrixFq) -> MatrixFq:
    """RREF basis of {v : M v^T = 0}."""
    spec = M.spec
    rows, pivots = _rref_rows(spec, M.row_list(), M.cols)
    free = [j for j in range(M.cols) if j not in set(pivots)]
    neg = spec._neg
    basis = []
    for f in free:
        v = [0] * M.cols
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = neg[rows[r][f]]
        basis.append(v)
    return row_basis(MatrixFq._raw(spec, basis, M.cols))


def row_space_equal(A: MatrixFq, B: MatrixFq) -> bool:
    _check_pair(A, B)
    return row_basis(A).entries == row_basis(B).entries


def row_space_contains(A: MatrixFq, B: MatrixFq) -> bool:
    """True iff every row of ``B`` lies in the row space of ``A``."""
    _check_pair(A, B)
    return rank(A) == rank(A.stack(B))


class PolyMatrix:
    """Dense matrix over F_q[x]."""

    __slots__ = ("spec", "rows", "cols", "entries")

    def __init__(self, spec: FieldSpec, rows: Iterable[Sequence[Poly]], cols: int | None = None):
        data = tuple(tuple(r) for r in rows)
        if cols is None:
            if not data:
                raise ShapeError("column count required for an empty matrix")
            cols = len(data[0])
        for r in data:
            if len(r) != cols:
                raise ShapeError(f"ragged row of length {len(r)}, expected {cols}")
            for f in r:
                if f.spec != spec:
                    raise FieldMismatch(f"entry over {f.spec}, matrix over {spec}")
        self.spec = spec
        self.rows = len(data)
        self.cols = cols
        self.entries = data

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.spec, self.cols, self.entries) == (other.spec, other.cols, other.entries)

    def __repr__(self):
        body = "; ".join(", ".join(f.format() for f in r) for r in self.entries)
        return f"PolyMatrix({self.rows}x{self.cols}: [{body}])"

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(self.spec, [[self.entries[i][j] for j in cols] for i in rows], len(cols))


def _det_cofactor(m: list[list[Poly]], spec: FieldSpec) -> Poly:
    k = len(m)
    if k == 1:
        return m[0][0]
    if k == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    acc = Poly.zero(spec)
    for j in range(k):
        a = m[0][j]
        if a.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = a * _det_cofactor(minor, spec)
        acc = acc - term if j % 2 else acc + term
    return acc


def _det_bareiss(m: list[list[Poly]], spec: FieldSpec) -> Poly:
    """Fraction-free elimination; each division below is exact in F_q[x]."""
    a = [list(r) for r in m]
    k = len(a)
    sign = 1
    prev = Poly.one(spec)
    for c in range(k - 1):
        if a[c][c].is_zero():
            swap = next((i for i in range(c + 1, k) if not a[i][c].is_zero()), None)
            if swap is None:
                return Poly.zero(spec)
            a[c], a[swap] = a[swap], a[c]
            sign = -sign
        piv = a[c][c]
        for i in range(c + 1, k):
            for j in range(c + 1, k):
                num = piv * a[i][j] - a[i][c] * a[c][j]
                a[i][j] = num // prev
            a[i][c] = Poly.zero(spec)
        prev = piv
    det = a[k - 1][k - 1]
    return det if sign == 1 else -det


def poly_det(M: PolyMatrix, method: str = "auto") -> Poly:
    """Exact determinant over F_q[x].

    ``method`` is ``"cofactor"``, ``"bareiss"`` or ``"auto"`` (cofactor
    expansion up to 4 x 4, fraction-free elimination above).
    """
    if M.rows != M.cols:
        raise ShapeError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
    if M.rows == 0:
        return Poly.one(M.spec)
    m = [list(r) for r in M.entries]
    if method == "auto":
        method = "cofactor" if M.rows <= COFACTOR_LIMIT else "bareiss"
    if method == "cofactor":
        return _det_cofactor(m, M.spec)
    if method == "bareiss":
        return _det_bareiss(m, M.spec)
    raise ValueError(f"unknown determinant method {method!r}")


def minor_count(M: PolyMatrix, k: int) -> int:
    return math.comb(M.rows, k) * math.comb(M.cols, k)


def minors_gcd(M: PolyMatrix, k: int, max_minors: int = DEFAULT_MAX_MINORS) -> Poly:
    """Monic gcd of every k x k minor; the zero polynomial if all vanish."""
    if not 1 <= k <= min(M.rows, M.cols):
        raise ShapeError(f"minor size {k} out of range for a {M.rows}x{M.cols} matrix")
    count = minor_count(M, k)
    if count > max_minors:
        raise TooManyMinors(count, max_minors)
    g = Poly.zero(M.spec)
    for rs in itertools.combinations(range(M.rows), k):
        for cs in itertools.combinations(range(M.cols), k):
            d = poly_det(M.submatrix(rs, cs))
            if not d.is_zero():
                g = poly_gcd(g, d)
                if g.is_one():
                    return g
    return g


def hnf_triangularize(M: PolyMatrix) -> PolyMatrix:
    """Upper-triangular basis of the F_q[x]-row module spanned by ``M``.

    Columns are processed left to right.  In each column the rows still in
    play are reduced Euclid-style against the one of least degree (earliest
    row on ties) until a single nonzero entry remains; that row becomes the
    pivot.  Diagonal entries end monic and every entry above a diagonal is
    reduced modulo it.
    """
    spec = M.spec
    ell = M.cols
    work = [list(r) for r in M.entries]
    pivots: list[list[Poly]] = []
    for c in range(ell):
        while True:
            live = [i for i, r in enumerate(work) if not r[c].is_zero()]
            if not live:
                raise RankDeficient(f"row module has no pivot in column {c}")
            best = min(live, key=lambda i: (work[i][c].degree, i))
            if len(live) == 1:
                break
            pr = work[best]
            for i in live:
                if i == best:
                    continue
                quo = work[i][c] // pr[c]
                work[i] = [x - quo * y for x, y in zip(work[i], pr)]
        row = work.pop(best)
        s = spec.inv(row[c].lead)
        pivots.append([f.scale(s) for f in row])
    if any(not f.is_zero() for r in work for f in r):
        raise RankDeficient("rows left over after triangularization")
    for j in range(1, ell):
        dj = pivots[j][j]
        for i in range(j):
            quo = pivots[i][j] // dj
            if not quo.is_zero():
                pivots[i] = [x - quo * y for x, y in zip(pivots[i], pivots[j])]
    return PolyMatrix(spec, pivots, ell)


def reduces_to_zero(row: Sequence[Poly], tri: PolyMatrix) -> bool:
    """True iff ``row`` lies in the row module of the upper-triangular ``tri``."""
    r = list(row)
    for j in range(tri.cols):
        d = tri.entries[j][j]
        quo, rem = divmod(r[j], d)
        if not rem.is_zero():
            return False
        r = [x - quo * y for x, y in zip(r, tri.entries[j])]
    return all(f.is_zero() for f in r)


def diagonal(M: PolyMatrix) -> list[Poly]:
    return [M.entries[i][i] for i in range(min(M.rows, M.cols))]


def product(polys: Iterable[Poly], spec: FieldSpec) -> Poly:
    return functools.reduce(lambda a, b: a * b, polys, Poly.one(spec))
