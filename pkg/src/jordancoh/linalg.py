"""Dense exact linear algebra over Q(t).

Pivoting is always "first nonzero entry, scanning rows top-down", so results
are reproducible.  When every entry is a rational constant the work is done on
plain Fractions and converted back at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .errors import DimensionMismatch, NotASubspace
from .field import ONE, ZERO, Scalar, to_scalar

Vector = List[Scalar]


@dataclass(frozen=True)
class ExactMatrix:
    rows: Tuple[Tuple[Scalar, ...], ...]
    ncols: int
    column_labels: Optional[Tuple[str, ...]] = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ncols: Optional[int] = None,
                  column_labels: Optional[Sequence[str]] = None) -> "ExactMatrix":
        rows = tuple(tuple(to_scalar(c) for c in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else (len(column_labels) if column_labels else 0)
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("rows of unequal length")
        if column_labels is not None and len(column_labels) != ncols:
            raise DimensionMismatch("column label count does not match column count")
        return cls(rows, ncols, tuple(column_labels) if column_labels is not None else None)

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), self.ncols

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def stack(self, other: "ExactMatrix") -> "ExactMatrix":
        if other.ncols != self.ncols:
            raise DimensionMismatch(f"cannot stack {self.ncols} and {other.ncols} columns")
        return ExactMatrix(self.rows + other.rows, self.ncols, self.column_labels)

    @property
    def sparse_rows(self) -> Tuple[Tuple[Tuple[int, Scalar], ...], ...]:
        """Nonzero (column, entry) pairs of every row, computed once."""
        cached = self.__dict__.get("_sparse")
        if cached is None:
            cached = tuple(tuple((c, a) for c, a in enumerate(r) if a) for r in self.rows)
            object.__setattr__(self, "_sparse", cached)
        return cached

    def apply(self, v: Sequence[Scalar]) -> List[Scalar]:
        """Matrix-vector product."""
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.ncols} columns")
        out = []
        for r in self.sparse_rows:
            acc = ZERO
            for c, a in r:
                b = v[c]
                if b:
                    acc = acc + a * b
            out.append(acc)
        return out


MatrixLike = Union[ExactMatrix, Sequence[Sequence]]


def _rows_of(M: MatrixLike) -> Tuple[List[List[Scalar]], int]:
    if isinstance(M, ExactMatrix):
        return [list(r) for r in M.rows], M.ncols
    rows = [[to_scalar(c) for c in r] for r in M]
    ncols = len(rows[0]) if rows else 0
    if any(len(r) != ncols for r in rows):
        raise DimensionMismatch("rows of unequal length")
    return rows, ncols


def _all_constant(rows) -> bool:
    return all(c.is_constant for r in rows for c in r)


def _gauss_jordan(rows: list, ncols: int) -> List[int]:
    """In-place reduced row echelon form; returns pivot columns.

    Works on any field type with +, -, *, / and truthiness.
    """
    pivots = []
    prow = 0
    nrows = len(rows)
    for col in range(ncols):
        if prow == nrows:
            break
        hit = next((r for r in range(prow, nrows) if rows[r][col]), None)
        if hit is None:
            continue
        rows[prow], rows[hit] = rows[hit], rows[prow]
        piv = rows[prow]
        lead = piv[col]
        if lead != 1:
            inv = 1 / lead
            piv = [x * inv if x else x for x in piv]
            rows[prow] = piv
        nz = [c for c in range(col, ncols) if piv[c]]
        for r in range(nrows):
            if r == prow:
                continue
            row = rows[r]
            f = row[col]
            if not f:
                continue
            for c in nz:
                row[c] = row[c] - f * piv[c]
        pivots.append(col)
        prow += 1
    return pivots


def rref(M: MatrixLike) -> Tuple[ExactMatrix, List[int]]:
    """Reduced row-echelon form and the list of pivot columns."""
    rows, ncols = _rows_of(M)
    if rows and _all_constant(rows):
        work = [[c.value for c in r] for r in rows]
        pivots = _gauss_jordan(work, ncols)
        rows = [[Scalar.const(c) for c in r] for r in work]
    else:
        pivots = _gauss_jordan(rows, ncols)
    labels = M.column_labels if isinstance(M, ExactMatrix) else None
    return ExactMatrix(tuple(tuple(r) for r in rows), ncols, labels), pivots


def rank(M: MatrixLike) -> int:
    rows, ncols = _rows_of(M)
    if not rows:
        return 0
    return len(Echelon(ncols).extend(rows))


def nullspace(M: MatrixLike) -> List[Vector]:
    """Right-kernel basis: one vector per free column (ascending), free entry 1."""
    R, pivots = rref(M)
    ncols = R.ncols
    pivset = set(pivots)
    out = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for r, p in enumerate(pivots):
            c = R.rows[r][free]
            if c:
                v[p] = -c
        out.append(v)
    return out


class Echelon:
    """Incrementally maintained echelon basis of a row space.

    Stored rows have a unit pivot and are zero at the pivots of every row stored
    before them, so reducing a vector in insertion order is exact.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: List[Tuple[int, list]] = []
        self._support: List[List[int]] = []   # nonzero columns of each stored row
        self._rational = True

    def __len__(self):
        return len(self.rows)

    def _reduce(self, v: list) -> list:
        v = list(v)
        for (p, row), support in zip(self.rows, self._support):
            f = v[p]
            if f:
                for c in support:
                    v[c] = v[c] - f * row[c]
        return v

    def _prepare(self, v: Sequence) -> list:
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.ncols} columns")
        v = [to_scalar(c) for c in v]
        if self._rational and all(c.is_constant for c in v):
            return [c.value for c in v]
        if self._rational:
            self._rational = False
            self.rows = [(p, [Scalar.const(x) for x in r]) for p, r in self.rows]
        return v

    def add(self, v: Sequence) -> bool:
        """Insert ``v``; return False if it was already in the span."""
        w = self._reduce(self._prepare(v))
        p = next((c for c, x in enumerate(w) if x), None)
        if p is None:
            return False
        lead = w[p]
        if lead != 1:
            inv = 1 / lead
            w = [x * inv if x else x for x in w]
        self.rows.append((p, w))
        self._support.append([c for c, x in enumerate(w) if x])
        return True

    def contains(self, v: Sequence) -> bool:
        w = self._reduce(self._prepare(v))
        return not any(w)

    def extend(self, vectors) -> List[int]:
        """Add each vector; return indices of those that were independent."""
        return [n for n, v in enumerate(vectors) if self.add(v)]


def rowspace_contains(M: MatrixLike, v: Sequence) -> bool:
    rows, ncols = _rows_of(M)
    if rows and len(v) != ncols:
        raise DimensionMismatch(f"vector of length {len(v)} for {ncols} columns")
    if not rows:
        return all(not to_scalar(c) for c in v)
    ech = Echelon(ncols)
    ech.extend(rows)
    return ech.contains(v)


def quotient_basis(Z: Sequence[Sequence], B: Sequence[Sequence]) -> List[Vector]:
    """Greedy subset of Z whose images form a basis of span(Z)/span(B)."""
    vectors = [v for v in list(Z) + list(B)]
    if not vectors:
        return []
    ncols = len(vectors[0])
    if any(len(v) != ncols for v in vectors):
        raise DimensionMismatch("vectors of unequal length")
    zspan = Echelon(ncols)
    zspan.extend(Z)
    for n, b in enumerate(B):
        if not zspan.contains(b):
            raise NotASubspace(f"vector {n} of B lies outside span(Z)")
    ech = Echelon(ncols)
    ech.extend(B)
    return [[to_scalar(c) for c in z] for z in Z if ech.add(z)]


def column_space_basis(M: MatrixLike) -> List[Vector]:
    """Independent columns of M (first-occurrence order), as vectors."""
    rows, ncols = _rows_of(M)
    cols = [[rows[r][c] for r in range(len(rows))] for c in range(ncols)]
    ech = Echelon(len(rows))
    return [cols[c] for c in ech.extend(cols)]


def as_fraction_matrix(M: MatrixLike) -> List[List[Fraction]]:
    rows, _ = _rows_of(M)
    return [[c.value for c in r] for r in rows]
