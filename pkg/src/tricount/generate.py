"""Synthetic graph generation: deterministic Kronecker powers of a seed
adjacency and seeded Erdos-Renyi samples.

Both are reproducible: Kronecker powers are fully deterministic and the
Erdos-Renyi sampler draws from numpy's seeded PCG64 stream, so a fixed
``rng_seed`` always yields the same edge list on any platform.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SizeCapError
from .sparse import (CsrMatrix, EdgeList, INDEX_DTYPE, _csr_from_unsorted,
                     adjacency_from_edges, canonicalize,
                     edges_from_adjacency, validate_adjacency)

RNG_ALGORITHM = "numpy-pcg64"

DEFAULT_MAX_VERTICES = 1 << 21
DEFAULT_MAX_ENTRIES = 1 << 26


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one synthetic graph.

    ``kind`` is ``"kronecker-power"`` (needs ``seed_graph`` and ``power``)
    or ``"erdos-renyi"`` (needs ``n``, ``p``, ``rng_seed``).
    """

    kind: str
    seed_graph: EdgeList | None = None
    power: int = 1
    n: int = 0
    p: float = 0.0
    rng_seed: int = 0

    def __post_init__(self):
        if self.kind not in ("kronecker-power", "erdos-renyi"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == "kronecker-power":
            if self.seed_graph is None:
                raise ValueError("kronecker-power needs a seed_graph")
            if self.power < 1:
                raise ValueError("power must be >= 1")
        else:
            if self.n < 0:
                raise ValueError("n must be non-negative")
            if not 0.0 <= self.p <= 1.0:
                raise ValueError("p must lie in [0, 1]")

    def label(self) -> str:
        if self.kind == "kronecker-power":
            seed_name = self.seed_graph.name or "seed"
            return f"kron-{seed_name}-k{self.power}"
        return f"er-n{self.n}-p{self.p:g}-seed{self.rng_seed}"

    def metadata_lines(self) -> list[str]:
        """Comment lines recording how the graph was produced."""
        lines = [f"generator: {self.kind}"]
        if self.kind == "kronecker-power":
            lines.append(f"seed-graph: {self.seed_graph.name or 'unnamed'} "
                         f"({self.seed_graph.num_vertices} vertices, "
                         f"{len(self.seed_graph)} edge records)")
            lines.append(f"power: {self.power}")
        else:
            lines.append(f"n: {self.n}")
            lines.append(f"p: {self.p!r}")
            lines.append(f"rng: {RNG_ALGORITHM}")
            lines.append(f"rng-seed: {self.rng_seed}")
        return lines


def kronecker_power(seed: CsrMatrix, k: int,
                    max_vertices: int = DEFAULT_MAX_VERTICES,
                    max_entries: int = DEFAULT_MAX_ENTRIES) -> CsrMatrix:
    """k-fold Kronecker product of a seed adjacency with itself.

    The result of the pure product is cleaned back to a simple graph:
    diagonal entries are dropped (a no-op for zero-diagonal seeds) and
    the symmetric pattern is preserved by construction.  k = 1 returns a
    copy of the seed.
    """
    validate_adjacency(seed)
    if k < 1:
        raise ValueError("power must be >= 1")
    n_seed = seed.num_rows
    n_out = n_seed ** k
    if n_out > max_vertices:
        raise SizeCapError(f"{n_seed}^{k} = {n_out} vertices exceeds the "
                           f"cap of {max_vertices}")
    if seed.nnz ** k > max_entries:
        raise SizeCapError(f"{seed.nnz}^{k} stored entries exceeds the "
                           f"cap of {max_entries}")

    seed_rows = seed.row_ids()
    seed_cols = seed.col_indices
    m = len(seed_rows)
    rows, cols = seed_rows, seed_cols
    for _ in range(k - 1):
        prev = len(rows)
        rows = np.repeat(rows, m) * n_seed + np.tile(seed_rows, prev)
        cols = np.repeat(cols, m) * n_seed + np.tile(seed_cols, prev)
    off_diag = rows != cols
    return _csr_from_unsorted(rows[off_diag], cols[off_diag], n_out, n_out)


def erdos_renyi(n: int, p: float, rng_seed: int) -> EdgeList:
    """Sample each unordered vertex pair independently with probability p.

    Returns a canonical edge list (u < v, lexicographic by construction).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = np.random.default_rng(rng_seed)
    us = []
    vs = []
    for u in range(n - 1):
        hits = np.flatnonzero(rng.random(n - u - 1) < p)
        if len(hits):
            us.append(np.full(len(hits), u, dtype=INDEX_DTYPE))
            vs.append(hits.astype(INDEX_DTYPE) + u + 1)
    if us:
        edges = np.column_stack((np.concatenate(us), np.concatenate(vs)))
    else:
        edges = np.empty((0, 2), dtype=INDEX_DTYPE)
    return EdgeList(edges, n, f"er-n{n}-p{p:g}-seed{rng_seed}")


def generate(spec: GenSpec,
             max_vertices: int = DEFAULT_MAX_VERTICES,
             max_entries: int = DEFAULT_MAX_ENTRIES) -> EdgeList:
    """Realize a :class:`GenSpec` as a canonical edge list."""
    if spec.kind == "erdos-renyi":
        el = erdos_renyi(spec.n, spec.p, spec.rng_seed)
        return EdgeList(el.edges, el.num_vertices, spec.label())
    seed = adjacency_from_edges(canonicalize(spec.seed_graph))
    a = kronecker_power(seed, spec.power, max_vertices, max_entries)
    return edges_from_adjacency(a, name=spec.label())
