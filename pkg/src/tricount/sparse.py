"""CSR matrices and edge lists for undirected simple graphs.

Column indices are kept sorted within each row so element-wise products
and row intersections run as linear merges.  Values, when present, are
unsigned 64-bit counts; a matrix without values is a pattern and reduces
as all-ones.  Matrices are immutable after construction and safe for
concurrent shared reads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import MalformedInputError

INDEX_DTYPE = np.int64
VALUE_DTYPE = np.uint64


def _edge_array(edges) -> np.ndarray:
    arr = np.asarray(edges, dtype=INDEX_DTYPE)
    if arr.size == 0:
        return arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise MalformedInputError(f"edge array must have shape (m, 2), got {arr.shape}")
    return arr


@dataclass(frozen=True, eq=False)
class EdgeList:
    """Raw vertex-pair records plus a vertex count.

    May contain duplicates, self-loops, and both orientations of an edge;
    :func:`canonicalize` normalizes all of that.  Equality compares edges
    and vertex count; ``name`` is a label and is ignored.
    """

    edges: np.ndarray
    num_vertices: int
    name: str = ""

    def __post_init__(self):
        arr = _edge_array(self.edges)
        arr.flags.writeable = False
        object.__setattr__(self, "edges", arr)
        if self.num_vertices < 0:
            raise MalformedInputError("num_vertices must be non-negative")
        if len(arr) and (arr.min() < 0 or arr.max() >= self.num_vertices):
            raise MalformedInputError(
                f"vertex ids must lie in [0, {self.num_vertices})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeList):
            return NotImplemented
        return (self.num_vertices == other.num_vertices
                and np.array_equal(self.edges, other.edges))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        for u, v in self.edges:
            yield int(u), int(v)

    def pairs(self) -> list[tuple[int, int]]:
        return [(int(u), int(v)) for u, v in self.edges]


class CsrMatrix:
    """Compressed sparse row matrix, pattern or valued.

    ``row_offsets`` has length ``num_rows + 1``; ``col_indices`` are
    strictly increasing within each row.  ``values is None`` marks a
    pattern; otherwise values align with ``col_indices`` and are >= 1
    (explicit zeros are never stored).

    Input arrays of matching dtype are adopted without copying and
    frozen read-only along with the matrix.
    """

    __slots__ = ("num_rows", "num_cols", "row_offsets", "col_indices", "values")

    def __init__(self, num_rows, num_cols, row_offsets, col_indices, values=None):
        self.num_rows = int(num_rows)
        self.num_cols = int(num_cols)
        offsets = np.ascontiguousarray(row_offsets, dtype=INDEX_DTYPE)
        cols = np.ascontiguousarray(col_indices, dtype=INDEX_DTYPE)
        vals = None if values is None else np.ascontiguousarray(values, dtype=VALUE_DTYPE)
        self._check_structure(offsets, cols, vals)
        for arr in (offsets, cols) + (() if vals is None else (vals,)):
            arr.flags.writeable = False
        self.row_offsets = offsets
        self.col_indices = cols
        self.values = vals

    def _check_structure(self, offsets, cols, vals):
        if self.num_rows < 0 or self.num_cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if offsets.shape != (self.num_rows + 1,):
            raise ValueError("row_offsets must have length num_rows + 1")
        if offsets[0] != 0 or offsets[-1] != len(cols):
            raise ValueError("row_offsets must start at 0 and end at nnz")
        if np.any(np.diff(offsets) < 0):
            raise ValueError("row_offsets must be non-decreasing")
        if len(cols) and (cols.min() < 0 or cols.max() >= self.num_cols):
            raise ValueError("column index out of range")
        if len(cols) > 1:
            # Strictly increasing inside every row; drops between rows are fine.
            deltas = np.diff(cols)
            breaks = np.zeros(len(cols) - 1, dtype=bool)
            starts = offsets[1:-1]
            starts = starts[(starts > 0) & (starts < len(cols))]
            breaks[starts - 1] = True
            if np.any(deltas[~breaks] <= 0):
                raise ValueError("column indices must be strictly increasing within rows")
        if vals is not None:
            if vals.shape != cols.shape:
                raise ValueError("values must align with col_indices")
            if len(vals) and vals.min() < 1:
                raise ValueError("stored values must be >= 1")

    @property
    def nnz(self) -> int:
        return len(self.col_indices)

    @property
    def shape(self) -> tuple[int, int]:
        return self.num_rows, self.num_cols

    def row(self, i: int) -> np.ndarray:
        """Column indices stored in row ``i`` (a read-only view)."""
        return self.col_indices[self.row_offsets[i]:self.row_offsets[i + 1]]

    def row_ids(self) -> np.ndarray:
        """Row index of every stored entry, in storage order."""
        return np.repeat(np.arange(self.num_rows, dtype=INDEX_DTYPE),
                         np.diff(self.row_offsets))

    def transpose(self) -> CsrMatrix:
        rows = self.row_ids()
        order = np.lexsort((rows, self.col_indices))
        offsets = np.zeros(self.num_cols + 1, dtype=INDEX_DTYPE)
        np.cumsum(np.bincount(self.col_indices, minlength=self.num_cols),
                  out=offsets[1:])
        vals = None if self.values is None else self.values[order]
        return CsrMatrix(self.num_cols, self.num_rows, offsets, rows[order], vals)

    def to_dense(self) -> np.ndarray:
        """Dense ``uint64`` array; pattern entries materialize as 1."""
        dense = np.zeros((self.num_rows, self.num_cols), dtype=VALUE_DTYPE)
        vals = self.values if self.values is not None else 1
        dense[self.row_ids(), self.col_indices] = vals
        return dense

    def __eq__(self, other) -> bool:
        if not isinstance(other, CsrMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        if not (np.array_equal(self.row_offsets, other.row_offsets)
                and np.array_equal(self.col_indices, other.col_indices)):
            return False
        if (self.values is None) != (other.values is None):
            return False
        return self.values is None or np.array_equal(self.values, other.values)

    __hash__ = None

    def __repr__(self) -> str:
        kind = "pattern" if self.values is None else "valued"
        return f"CsrMatrix({self.num_rows}x{self.num_cols}, nnz={self.nnz}, {kind})"


def _csr_from_unsorted(rows, cols, num_rows, num_cols, values=None) -> CsrMatrix:
    """Build a CSR matrix from parallel (row, col) arrays with no duplicates."""
    order = np.lexsort((cols, rows))
    offsets = np.zeros(num_rows + 1, dtype=INDEX_DTYPE)
    np.cumsum(np.bincount(rows, minlength=num_rows), out=offsets[1:])
    vals = None if values is None else values[order]
    return CsrMatrix(num_rows, num_cols, offsets, cols[order], vals)


def canonicalize(edge_list: EdgeList) -> EdgeList:
    """Normalize to a simple undirected edge set.

    Drops self-loops, dedups, stores each edge once as (u, v) with u < v,
    and orders edges lexicographically.  Vertex count is preserved.
    """
    e = edge_list.edges
    e = e[e[:, 0] != e[:, 1]]
    lo = np.minimum(e[:, 0], e[:, 1])
    hi = np.maximum(e[:, 0], e[:, 1])
    uniq = np.unique(np.column_stack((lo, hi)), axis=0)
    return EdgeList(uniq, edge_list.num_vertices, edge_list.name)


def adjacency_from_edges(edge_list: EdgeList) -> CsrMatrix:
    """Symmetric zero-diagonal pattern matrix of a canonical edge list."""
    n = edge_list.num_vertices
    e = edge_list.edges
    if len(e) and (e.min() < 0 or e.max() >= n):
        raise MalformedInputError(f"vertex ids must lie in [0, {n})")
    rows = np.concatenate((e[:, 0], e[:, 1]))
    cols = np.concatenate((e[:, 1], e[:, 0]))
    return _csr_from_unsorted(rows, cols, n, n)


def incidence_from_edges(edge_list: EdgeList) -> CsrMatrix:
    """Vertices-by-edges pattern matrix; column j holds edge j's endpoints.

    Edge j is the j-th entry of the (canonical) edge list.
    """
    n = edge_list.num_vertices
    e = edge_list.edges
    if len(e) and np.any(e[:, 0] == e[:, 1]):
        raise MalformedInputError("incidence matrix is undefined for self-loops")
    edge_ids = np.arange(len(e), dtype=INDEX_DTYPE)
    rows = np.concatenate((e[:, 0], e[:, 1]))
    cols = np.concatenate((edge_ids, edge_ids))
    return _csr_from_unsorted(rows, cols, n, len(e))


def edges_from_adjacency(a: CsrMatrix, name: str = "") -> EdgeList:
    """Canonical edge list (u < v, lexicographic) of a symmetric matrix."""
    rows = a.row_ids()
    keep = a.col_indices > rows
    return EdgeList(np.column_stack((rows[keep], a.col_indices[keep])),
                    a.num_rows, name)


def validate_adjacency(a: CsrMatrix) -> None:
    """Check the simple-graph invariants: square, symmetric pattern, zero
    diagonal, pattern-only.  Raises :class:`MalformedInputError`."""
    if a.num_rows != a.num_cols:
        raise MalformedInputError("adjacency matrix must be square")
    if a.values is not None and len(a.values) and (a.values.max() != 1 or a.values.min() != 1):
        raise MalformedInputError("adjacency matrix must be pattern-only")
    if np.any(a.col_indices == a.row_ids()):
        raise MalformedInputError("adjacency matrix must have a zero diagonal")
    t = a.transpose()
    if not (np.array_equal(a.row_offsets, t.row_offsets)
            and np.array_equal(a.col_indices, t.col_indices)):
        raise MalformedInputError("adjacency pattern must be symmetric")


def _values_or_ones(m: CsrMatrix) -> np.ndarray:
    if m.values is not None:
        return m.values
    return np.ones(m.nnz, dtype=VALUE_DTYPE)


def spgemm(a: CsrMatrix, b: CsrMatrix) -> CsrMatrix:
    """Sparse product A @ B counting multiplicities: the (i, j) output value
    is the number of shared k with A(i,k) and B(k,j) present (times the
    stored counts, for valued inputs).  Zero entries are not stored."""
    if a.num_cols != b.num_rows:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    indptr, indices, values = kernels.spgemm(
        a.row_offsets, a.col_indices, _values_or_ones(a),
        b.row_offsets, b.col_indices, _values_or_ones(b),
        a.num_rows, b.num_cols)
    return CsrMatrix(a.num_rows, b.num_cols, indptr, indices, values)


def hadamard(a: CsrMatrix, b: CsrMatrix) -> CsrMatrix:
    """Element-wise product; an entry survives only if present in both."""
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    indptr, indices, values = kernels.hadamard(
        a.row_offsets, a.col_indices, _values_or_ones(a),
        b.row_offsets, b.col_indices, _values_or_ones(b),
        a.num_rows)
    return CsrMatrix(a.num_rows, a.num_cols, indptr, indices, values)


def triangular_split(a: CsrMatrix) -> tuple[CsrMatrix, CsrMatrix]:
    """Strictly-lower and strictly-upper parts (L, U) of a square matrix.

    For a symmetric pattern, U equals transpose(L) and the two partition
    the off-diagonal entries.
    """
    if a.num_rows != a.num_cols:
        raise ValueError("triangular split requires a square matrix")
    rows = a.row_ids()
    n = a.num_rows

    def part(keep):
        offsets = np.zeros(n + 1, dtype=INDEX_DTYPE)
        np.cumsum(np.bincount(rows[keep], minlength=n), out=offsets[1:])
        vals = None if a.values is None else a.values[keep]
        return CsrMatrix(n, n, offsets, a.col_indices[keep], vals)

    return part(a.col_indices < rows), part(a.col_indices > rows)


def sum_values(c: CsrMatrix) -> int:
    """Sum of all stored entries; a pattern sums as all-ones."""
    if c.values is None:
        return c.nnz
    return int(c.values.sum(dtype=VALUE_DTYPE))


def nnz(c: CsrMatrix) -> int:
    return c.nnz
