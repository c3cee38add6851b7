"""Exact matrices over a field with two interchangeable storage backends.

Each backend is a pair of classes: an immutable matrix (``DenseMatrix``,
``SparseMatrix``) and a mutable view obtained with ``thaw()`` that supports
the elementary row operations.  ``gauss_reduction`` runs Gauss-Jordan
elimination on a private mutable view and freezes the result, so no
mutable state escapes a call.
"""

from __future__ import annotations

from .errors import RaggedRows
from .fields import Field

__all__ = ["DenseMatrix", "SparseMatrix", "BACKENDS", "get_backend", "gauss_reduction"]


def _norm(field, v):
    return field.convert(v)


class _MatrixBase:
    """Shared behaviour of the immutable matrix classes."""

    field: Field
    nrows: int
    ncols: int

    def to_lists(self) -> list[list]:
        raise NotImplementedError

    def thaw(self):
        raise NotImplementedError

    def gauss_reduction(self):
        """Reduced row echelon form; zero rows are moved to the bottom."""
        mm = self.thaw()
        _rref(mm, self.field)
        return mm.freeze()

    def rank(self) -> int:
        return sum(1 for row in self.gauss_reduction().to_lists() if any(row))

    def __eq__(self, other):
        if not isinstance(other, _MatrixBase):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and self.to_lists() == other.to_lists()

    def __hash__(self):
        return hash(tuple(map(tuple, self.to_lists())))

    def __repr__(self):
        return f"{type(self).__name__}({self.to_lists()!r})"


def _rref(mm, field):
    mod = field.mod
    nrows, ncols = mm.nrows, mm.ncols
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if mm.get(i, col):
                piv = i
                break
        if piv is None:
            continue
        mm.swap_rows(r, piv)
        lead = mm.get(r, col)
        if lead != 1:
            mm.scale_row(r, field.inv(lead))
        for i in mm.rows_with(col):
            if i != r:
                c = mm.get(i, col)
                mm.add_row(i, r, (-c) % mod if mod else -c)
        r += 1


def _check_shape(rows, ncols):
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    for row in rows:
        if not isinstance(row, dict) and len(row) != ncols:
            raise RaggedRows(f"row of length {len(row)} in a matrix with {ncols} columns")
        if isinstance(row, dict) and any(not 0 <= c < ncols for c in row):
            raise RaggedRows("sparse row index out of range")
    return ncols


class MutableDense:
    """Row-major list-of-lists view supporting in-place row operations."""

    def __init__(self, rows, ncols, field):
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self.field = field

    def get(self, i, j):
        return self.rows[i][j]

    def rows_with(self, col):
        return [i for i in range(self.nrows) if self.rows[i][col]]

    def scale_row(self, i, c):
        mod = self.field.mod
        if mod:
            self.rows[i] = [v * c % mod for v in self.rows[i]]
        else:
            self.rows[i] = [v * c for v in self.rows[i]]

    def add_row(self, i, j, c):
        """row_i += c * row_j"""
        mod = self.field.mod
        src = self.rows[j]
        if mod:
            self.rows[i] = [(a + c * b) % mod for a, b in zip(self.rows[i], src)]
        else:
            self.rows[i] = [a + c * b for a, b in zip(self.rows[i], src)]

    def swap_rows(self, i, j):
        self.rows[i], self.rows[j] = self.rows[j], self.rows[i]

    def freeze(self) -> "DenseMatrix":
        m = DenseMatrix.__new__(DenseMatrix)
        m._rows = tuple(tuple(r) for r in self.rows)
        m.nrows, m.ncols, m.field = self.nrows, self.ncols, self.field
        self.rows = [list(r) for r in m._rows]
        return m


class DenseMatrix(_MatrixBase):
    """Immutable dense matrix; rows are tuples of raw field values."""

    def __init__(self, rows, field: Field, ncols: int | None = None):
        rows = list(rows)
        ncols = _check_shape(rows, ncols)
        out = []
        for row in rows:
            if isinstance(row, dict):
                dense = [field.zero] * ncols
                for j, v in row.items():
                    dense[j] = _norm(field, v)
                out.append(tuple(dense))
            else:
                out.append(tuple(_norm(field, v) for v in row))
        self._rows = tuple(out)
        self.nrows = len(out)
        self.ncols = ncols
        self.field = field

    @classmethod
    def from_rows(cls, rows, field: Field, ncols: int | None = None) -> "DenseMatrix":
        return cls(rows, field, ncols)

    def thaw(self) -> MutableDense:
        return MutableDense([list(r) for r in self._rows], self.ncols, self.field)

    def to_lists(self):
        return [list(r) for r in self._rows]

    def row_items(self, i):
        return {j: v for j, v in enumerate(self._rows[i]) if v}


class MutableSparse:
    """List of ``{column: value}`` rows supporting in-place row operations."""

    def __init__(self, rows, ncols, field):
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self.field = field

    def get(self, i, j):
        return self.rows[i].get(j, 0)

    def rows_with(self, col):
        return [i for i in range(self.nrows) if col in self.rows[i]]

    def scale_row(self, i, c):
        mod = self.field.mod
        if mod:
            self.rows[i] = {j: v * c % mod for j, v in self.rows[i].items()}
        else:
            self.rows[i] = {j: v * c for j, v in self.rows[i].items()}

    def add_row(self, i, j, c):
        """row_i += c * row_j"""
        mod = self.field.mod
        dst = self.rows[i]
        for col, b in self.rows[j].items():
            v = dst.get(col, 0) + c * b
            if mod:
                v %= mod
            if v:
                dst[col] = v
            else:
                dst.pop(col, None)

    def swap_rows(self, i, j):
        self.rows[i], self.rows[j] = self.rows[j], self.rows[i]

    def freeze(self) -> "SparseMatrix":
        m = SparseMatrix.__new__(SparseMatrix)
        m._rows = tuple(dict(r) for r in self.rows)
        m.nrows, m.ncols, m.field = self.nrows, self.ncols, self.field
        return m


class SparseMatrix(_MatrixBase):
    """Immutable sparse matrix stored as a tuple of ``{column: value}`` rows."""

    def __init__(self, rows, field: Field, ncols: int | None = None):
        rows = list(rows)
        if ncols is None and rows and isinstance(rows[0], dict):
            raise RaggedRows("ncols is required for sparse rows")
        ncols = _check_shape(rows, ncols)
        out = []
        for row in rows:
            items = row.items() if isinstance(row, dict) else enumerate(row)
            d = {}
            for j, v in items:
                v = _norm(field, v)
                if v:
                    d[j] = v
            out.append(d)
        self._rows = tuple(out)
        self.nrows = len(out)
        self.ncols = ncols
        self.field = field

    @classmethod
    def from_rows(cls, rows, field: Field, ncols: int | None = None) -> "SparseMatrix":
        return cls(rows, field, ncols)

    def thaw(self) -> MutableSparse:
        return MutableSparse([dict(r) for r in self._rows], self.ncols, self.field)

    def to_lists(self):
        out = []
        for r in self._rows:
            dense = [self.field.zero] * self.ncols
            for j, v in r.items():
                dense[j] = v
            out.append(dense)
        return out

    def row_items(self, i):
        return dict(self._rows[i])


BACKENDS = {"dense": DenseMatrix, "sparse": SparseMatrix}


def get_backend(backend):
    if isinstance(backend, str):
        try:
            return BACKENDS[backend.lower()]
        except KeyError:
            raise ValueError(f"unknown matrix backend {backend!r}") from None
    return backend


def gauss_reduction(rows, field: Field, backend="dense"):
    """Convenience wrapper: RREF of ``rows`` with the chosen backend."""
    return get_backend(backend).from_rows(rows, field).gauss_reduction()
