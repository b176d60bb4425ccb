"""Shared graph builders and independent dense oracles for the tests.

The oracles here deliberately avoid the package's sparse kernels: dense
products use a literal triple loop, and triangle counts come from either
an exact integer einsum over all (i, j, k) or a combinations loop.
"""

import itertools

import numpy as np
import pytest

from tricount import kernels
from tricount.sparse import (CsrMatrix, EdgeList, INDEX_DTYPE,
                             adjacency_from_edges, canonicalize)

# K4 minus one edge: the smallest graph with exactly two triangles,
# {0,1,2} and {1,2,3}.
DIAMOND_PAIRS = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]


def edge_list(pairs, n, name="") -> EdgeList:
    arr = np.asarray(pairs, dtype=INDEX_DTYPE).reshape(-1, 2)
    return EdgeList(arr, n, name)


def adjacency_from_pairs(pairs, n) -> CsrMatrix:
    return adjacency_from_edges(canonicalize(edge_list(pairs, n)))


def diamond_graph() -> CsrMatrix:
    return adjacency_from_pairs(DIAMOND_PAIRS, 4)


def complete_graph(n) -> CsrMatrix:
    return adjacency_from_pairs(list(itertools.combinations(range(n), 2)), n)


def complete_bipartite(a, b) -> CsrMatrix:
    pairs = [(i, a + j) for i in range(a) for j in range(b)]
    return adjacency_from_pairs(pairs, a + b)


def path_graph(n) -> CsrMatrix:
    return adjacency_from_pairs([(i, i + 1) for i in range(n - 1)], n)


def star_graph(n) -> CsrMatrix:
    return adjacency_from_pairs([(0, i) for i in range(1, n)], n)


def csr_from_dense(dense, pattern=False) -> CsrMatrix:
    """Build a CsrMatrix straight from a dense array (test construction
    path, independent of the package's builders)."""
    dense = np.asarray(dense)
    rows, cols = np.nonzero(dense)
    offsets = np.zeros(dense.shape[0] + 1, dtype=INDEX_DTYPE)
    np.cumsum(np.bincount(rows, minlength=dense.shape[0]), out=offsets[1:])
    values = None if pattern else dense[rows, cols].astype(np.uint64)
    return CsrMatrix(dense.shape[0], dense.shape[1], offsets,
                     cols.astype(INDEX_DTYPE), values)


def dense_matmul(a, b) -> np.ndarray:
    """Literal triple-loop integer matrix product."""
    n, inner = a.shape
    inner2, m = b.shape
    assert inner == inner2
    out = np.zeros((n, m), dtype=np.int64)
    for i in range(n):
        for k in range(inner):
            a_ik = int(a[i, k])
            if a_ik:
                for j in range(m):
                    out[i, j] += a_ik * int(b[k, j])
    return out


def dense_triangle_count(dense) -> int:
    """Exact triangle count as the sum over all (i, j, k) of
    A(i,j) A(j,k) A(k,i), divided by 6.  Integer arithmetic throughout."""
    d = np.asarray(dense, dtype=np.int64)
    total = int(np.einsum("ij,jk,ki->", d, d, d))
    assert total % 6 == 0
    return total // 6


def triple_loop_triangle_count(dense) -> int:
    """Triangle count by looping over every vertex triple."""
    d = np.asarray(dense)
    n = d.shape[0]
    total = 0
    for i, j, k in itertools.combinations(range(n), 3):
        if d[i, j] and d[j, k] and d[i, k]:
            total += 1
    return total


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    """Run a test under each available kernel backend."""
    with kernels.use_backend(request.param):
        yield request.param
