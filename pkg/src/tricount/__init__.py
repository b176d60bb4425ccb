"""Triangle counting on sparse adjacency matrices, with a benchmark
harness and power-law execution-time models.

The counting kernels run on a compiled extension when available and fall
back to pure Python otherwise; see :mod:`tricount.kernels`.
"""

__version__ = "0.1.0"

from .bench import MeasurementRecord, SweepFailure, run_benchmark, sweep
from .count import (ALGORITHMS, TriangleCount, count_a2a, count_ae,
                    count_lu, count_oracle, count_triangles,
                    enumerate_triangles)
from .errors import (ConsistencyError, MalformedInputError, ParseError,
                     SizeCapError, TricountError)
from .generate import GenSpec, erdos_renyi, kronecker_power
from .io import LoadedGraph, TsvDialect, load_graph, parse_tsv, write_tsv
from .kernels import available_backends, get_backend, set_backend, use_backend
from .model import (SOA_MODEL, ModelCurve, PowerLawFit, ReferenceModel,
                    compare, evaluate_rate, evaluate_time, fit_power_law,
                    normalize, reference_table)
from .sparse import (CsrMatrix, EdgeList, adjacency_from_edges, canonicalize,
                     edges_from_adjacency, hadamard, incidence_from_edges,
                     nnz, spgemm, sum_values, triangular_split,
                     validate_adjacency)
