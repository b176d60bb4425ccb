"""Triangle-counting kernels.

Four interchangeable counters over one immutable adjacency matrix:

* ``ae``     -- adjacency-times-incidence product; product entries equal
  to 2 mark an (apex vertex, base edge) pair, three per triangle.
* ``a2a``    -- square the adjacency, mask by the adjacency, sum; each
  triangle contributes six.
* ``lu``     -- wedge counting through the strict triangular halves
  (B = L @ U masked by A); each triangle contributes two.
* ``oracle`` -- direct neighbour-intersection enumeration over the edge
  list, kept apart from the matrix formulations so it can referee them.

Every counter checks that its reduction divides exactly; a remainder
means the inputs were inconsistent and raises :class:`ConsistencyError`.
The masked products are accumulated without materializing the
intermediate matrices, which keeps memory linear in the input; the
equivalent explicit forms are available through :mod:`tricount.sparse`.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import kernels, sparse
from .errors import ConsistencyError, MalformedInputError
from .sparse import CsrMatrix

ALGORITHMS = ("ae", "a2a", "lu", "oracle")


@dataclass(frozen=True)
class TriangleCount:
    """A count plus the timing of the kernel that produced it.

    ``aux_seconds`` covers algorithm-specific preprocessing: incidence
    construction for ``ae`` and the triangular split for ``lu``; it is
    zero for the other algorithms.
    """

    n_t: int
    algorithm: str
    kernel_seconds: float
    aux_seconds: float = 0.0

    def __post_init__(self):
        if self.n_t < 0 or self.kernel_seconds < 0 or self.aux_seconds < 0:
            raise ValueError("counts and durations must be non-negative")


def _stored_pairs(a: CsrMatrix):
    """(row, col) arrays of every stored entry, in storage order."""
    return a.row_ids(), a.col_indices


def _endpoints_from_incidence(e: CsrMatrix):
    """Per-edge endpoint arrays (u, v) with u < v from a vertices-by-edges
    incidence matrix."""
    et = e.transpose()
    if np.any(np.diff(et.row_offsets) != 2):
        raise MalformedInputError("every incidence column must have exactly "
                                  "two entries")
    return (np.ascontiguousarray(et.col_indices[0::2]),
            np.ascontiguousarray(et.col_indices[1::2]))


def count_ae(a: CsrMatrix, e: CsrMatrix | None = None) -> TriangleCount:
    """Count via the adjacency-times-incidence product.

    Every product entry equal to 2 pairs an apex vertex with a base edge
    whose both endpoints it neighbours, so the number of such entries is
    3 n_t.  When ``e`` is omitted it is derived from ``a``; building the
    endpoint arrays is reported as ``aux_seconds`` either way.
    """
    t0 = time.perf_counter()
    if e is None:
        edges = sparse.edges_from_adjacency(a)
        eu = np.ascontiguousarray(edges.edges[:, 0])
        ev = np.ascontiguousarray(edges.edges[:, 1])
    else:
        if e.num_rows != a.num_rows:
            raise ValueError(f"incidence rows ({e.num_rows}) must match "
                             f"adjacency dimension ({a.num_rows})")
        eu, ev = _endpoints_from_incidence(e)
    aux = time.perf_counter() - t0

    t0 = time.perf_counter()
    nnz_c = kernels.row_intersection_sum(a.row_offsets, a.col_indices,
                                         a.row_offsets, a.col_indices,
                                         eu, ev)
    if nnz_c % 3:
        raise ConsistencyError(f"apex-edge count {nnz_c} is not divisible "
                               f"by 3; adjacency/incidence mismatch?")
    return TriangleCount(nnz_c // 3, "ae", time.perf_counter() - t0, aux)


def count_a2a(a: CsrMatrix) -> TriangleCount:
    """Count via sum(A@A masked by A) / 6."""
    t0 = time.perf_counter()
    left, right = _stored_pairs(a)
    total = kernels.row_intersection_sum(a.row_offsets, a.col_indices,
                                         a.row_offsets, a.col_indices,
                                         left, right)
    if total % 6:
        raise ConsistencyError(f"masked square sum {total} is not divisible "
                               f"by 6; invalid adjacency?")
    return TriangleCount(total // 6, "a2a", time.perf_counter() - t0)


def count_lu(a: CsrMatrix) -> TriangleCount:
    """Count via sum(L@U masked by A) / 2.

    (L @ U)(i, j) intersects the lower rows of i and j because U is the
    transpose of L for a symmetric pattern.  The split itself is reported
    as ``aux_seconds``.
    """
    t0 = time.perf_counter()
    low, _up = sparse.triangular_split(a)
    aux = time.perf_counter() - t0

    t0 = time.perf_counter()
    left, right = _stored_pairs(a)
    total = kernels.row_intersection_sum(low.row_offsets, low.col_indices,
                                         low.row_offsets, low.col_indices,
                                         left, right)
    if total % 2:
        raise ConsistencyError(f"masked wedge sum {total} is not divisible "
                               f"by 2; invalid adjacency?")
    return TriangleCount(total // 2, "lu", time.perf_counter() - t0, aux)


def count_oracle(a: CsrMatrix) -> TriangleCount:
    """Count by enumerating, per canonical edge (u, v), the common
    neighbours w > v.  Each triangle is found exactly once, at its
    lexicographically smallest edge."""
    t0 = time.perf_counter()
    edges = sparse.edges_from_adjacency(a)
    eu = np.ascontiguousarray(edges.edges[:, 0])
    ev = np.ascontiguousarray(edges.edges[:, 1])
    n_t = kernels.bounded_intersection_sum(a.row_offsets, a.col_indices,
                                           eu, ev)
    return TriangleCount(n_t, "oracle", time.perf_counter() - t0)


_DISPATCH = {
    "ae": count_ae,
    "a2a": count_a2a,
    "lu": count_lu,
    "oracle": count_oracle,
}


def count_triangles(a: CsrMatrix, algorithm: str) -> TriangleCount:
    """Run one of the counters by name (see :data:`ALGORITHMS`)."""
    try:
        fn = _DISPATCH[algorithm]
    except KeyError:
        raise ValueError(f"unknown algorithm {algorithm!r}; "
                         f"expected one of {ALGORITHMS}") from None
    return fn(a)


def enumerate_triangles(a: CsrMatrix) -> list[tuple[int, int, int]]:
    """All triangles as sorted vertex triples.  Test helper; not tuned."""
    triangles = []
    for u, v in sparse.edges_from_adjacency(a):
        common = np.intersect1d(a.row(u), a.row(v), assume_unique=True)
        for w in common[common > v]:
            triangles.append((u, v, int(w)))
    return triangles
