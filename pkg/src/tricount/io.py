"""Tab-separated edge-list parsing and emission.

Line grammar: ``int ws int [ws int]`` where ``ws`` is exactly one tab in
strict mode or any run of spaces/tabs otherwise.  Integers are unsigned
base-10 ASCII.  Lines starting with a comment prefix and blank lines are
skipped; trailing whitespace and a missing final newline are tolerated.
The optional third field is a weight: it is validated and discarded,
since all counting here is pattern-only.

The vertex count of a parsed file is ``max id + 1`` after the index-base
shift, so trailing isolated vertices are not representable in this format.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ParseError
from .sparse import (CsrMatrix, EdgeList, adjacency_from_edges, canonicalize,
                     INDEX_DTYPE)

_INT_RE = re.compile(r"[0-9]+\Z")


@dataclass(frozen=True)
class TsvDialect:
    """How to read and write an edge-list file.

    The default matches the common SNAP-derived convention: 1-based ids,
    tab-separated, optional weight column, '#'/'%' comments.
    """

    strict_tabs: bool = False
    index_base: int = 1
    has_weight_column: bool = True
    comment_prefixes: frozenset = frozenset({"#", "%"})

    def __post_init__(self):
        if self.index_base not in (0, 1):
            raise ValueError("index_base must be 0 or 1")
        if not self.comment_prefixes:
            raise ValueError("at least one comment prefix is required")


DEFAULT_DIALECT = TsvDialect()


@dataclass(frozen=True)
class LoadedGraph:
    """An adjacency matrix plus provenance from the file it came from."""

    adjacency: CsrMatrix
    n_e: int             # undirected edges after canonicalization
    raw_edge_count: int  # edge records in the file, pre-canonicalization
    name: str = ""


def _lines(stream):
    """Lazily yield text lines; file-like inputs are never buffered whole."""
    if isinstance(stream, bytes):
        yield from stream.decode("utf-8").splitlines()
    elif isinstance(stream, str):
        yield from stream.splitlines()
    else:
        for line in stream:
            yield line.decode("utf-8") if isinstance(line, bytes) else line


def parse_tsv(stream, dialect: TsvDialect = DEFAULT_DIALECT,
              name: str = "") -> EdgeList:
    """Parse an edge list from a string, bytes, or file-like object.

    Raises :class:`ParseError` with the offending 1-based line number on
    any grammar violation.  Edge order is preserved; the vertex count is
    one past the largest id seen.
    """
    base = dialect.index_base
    max_fields = 3 if dialect.has_weight_column else 2
    us: list[int] = []
    vs: list[int] = []
    for lineno, raw in enumerate(_lines(stream), start=1):
        line = raw.rstrip()
        if not line:
            continue
        if line[0] in dialect.comment_prefixes:
            continue
        fields = line.split("\t") if dialect.strict_tabs else line.split()
        if len(fields) < 2:
            raise ParseError(f"expected at least two fields, got {len(fields)}",
                             lineno)
        if len(fields) > max_fields:
            raise ParseError(f"expected at most {max_fields} fields, got "
                             f"{len(fields)}", lineno)
        for f in fields:
            if not _INT_RE.match(f):
                raise ParseError(f"not an unsigned base-10 integer: {f!r}",
                                 lineno)
        u = int(fields[0]) - base
        v = int(fields[1]) - base
        if u < 0 or v < 0:
            raise ParseError(f"vertex id below index base {base}", lineno)
        # fields[2], if present, is the weight: validated above, discarded.
        us.append(u)
        vs.append(v)
    if us:
        edges = np.column_stack((np.asarray(us, dtype=INDEX_DTYPE),
                                 np.asarray(vs, dtype=INDEX_DTYPE)))
        num_vertices = int(edges.max()) + 1
    else:
        edges = np.empty((0, 2), dtype=INDEX_DTYPE)
        num_vertices = 0
    return EdgeList(edges, num_vertices, name)


def write_tsv(edge_list: EdgeList, dialect: TsvDialect = DEFAULT_DIALECT,
              comments=()) -> str:
    """Render an edge list in the dialect, one edge per line.

    ``comments`` are emitted first, each on its own prefixed line.  When
    the dialect declares a weight column, a constant weight of 1 is
    written.  parse_tsv(write_tsv(e)) == e for canonical edge lists whose
    vertex count equals max id + 1.
    """
    prefix = "#" if "#" in dialect.comment_prefixes \
        else min(dialect.comment_prefixes)
    lines = [f"{prefix} {c}" for c in comments]
    base = dialect.index_base
    tail = "\t1" if dialect.has_weight_column else ""
    for u, v in edge_list:
        lines.append(f"{u + base}\t{v + base}{tail}")
    if not lines:
        return ""
    return "\n".join(lines) + "\n"


def load_graph(path, dialect: TsvDialect = DEFAULT_DIALECT) -> LoadedGraph:
    """Parse, canonicalize, and build the adjacency matrix of a file."""
    path = Path(path)
    with open(path, "r", encoding="utf-8") as fh:
        raw = parse_tsv(fh, dialect, name=path.stem)
    canonical = canonicalize(raw)
    return LoadedGraph(adjacency=adjacency_from_edges(canonical),
                       n_e=len(canonical),
                       raw_edge_count=len(raw),
                       name=path.stem)
