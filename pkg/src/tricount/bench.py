"""Timed triangle-counting trials.

One untimed warm-up run precedes the timed trials so cold caches do not
pollute the measurement.  The per-trial time is the kernel time alone by
default; ``include_aux`` folds in the algorithm-specific preprocessing
(see :class:`tricount.count.TriangleCount`).  The reported rate is
undirected edges per second of the *median* trial; minimum time is kept
alongside.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

from .count import count_oracle, count_triangles
from .errors import ConsistencyError
from .sparse import CsrMatrix

# Medians at or below this multiple of the clock tick are unreliable.
_LOW_CONFIDENCE_TICKS = 10


@dataclass(frozen=True)
class MeasurementRecord:
    """One benchmark observation.

    ``n_e`` is the undirected edge count; ``nnz`` (= 2 n_e) is the stored
    entry count of the symmetric adjacency.  ``rate_eps`` is
    ``n_e / time_s_median``, or 0.0 for an edgeless graph.
    ``low_confidence`` flags medians within 10 clock ticks; it is an
    in-memory annotation and is not serialized to CSV.
    """

    graph_name: str
    algorithm: str
    num_vertices: int
    n_e: int
    nnz: int
    trials: int
    time_s_min: float
    time_s_median: float
    rate_eps: float
    include_aux: bool
    n_t: int
    low_confidence: bool = False


@dataclass(frozen=True)
class SweepFailure:
    """A sweep entry that errored instead of producing a measurement."""

    graph_name: str
    algorithm: str
    error: str


def run_benchmark(a: CsrMatrix, algorithm: str, trials: int = 3,
                  include_aux: bool = False, graph_name: str = "",
                  verify: bool = False) -> MeasurementRecord:
    """Run ``trials`` timed counting runs (after one warm-up) and record
    the outcome.

    All trials must agree on the count; with ``verify`` the count must
    also match the enumeration oracle.  Raises :class:`ConsistencyError`
    otherwise.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")

    count_triangles(a, algorithm)  # warm-up, discarded
    times = []
    n_ts = set()
    for _ in range(trials):
        result = count_triangles(a, algorithm)
        times.append(result.kernel_seconds
                     + (result.aux_seconds if include_aux else 0.0))
        n_ts.add(result.n_t)
    if len(n_ts) != 1:
        raise ConsistencyError(f"trials disagreed on the count: {sorted(n_ts)}")
    n_t = n_ts.pop()

    if verify:
        expected = count_oracle(a).n_t
        if n_t != expected:
            raise ConsistencyError(f"{algorithm} counted {n_t} but the "
                                   f"oracle counted {expected}")

    n_e = a.nnz // 2
    median = statistics.median(times)
    resolution = time.get_clock_info("perf_counter").resolution
    return MeasurementRecord(
        graph_name=graph_name,
        algorithm=algorithm,
        num_vertices=a.num_rows,
        n_e=n_e,
        nnz=a.nnz,
        trials=trials,
        time_s_min=min(times),
        time_s_median=median,
        rate_eps=(n_e / median) if n_e else 0.0,
        include_aux=include_aux,
        n_t=n_t,
        low_confidence=median < _LOW_CONFIDENCE_TICKS * resolution,
    )


def sweep(graphs, algorithms, trials: int = 3, include_aux: bool = False,
          verify: bool = False) -> list[MeasurementRecord | SweepFailure]:
    """Benchmark every (graph, algorithm) combination in order.

    ``graphs`` is an iterable of ``(name, adjacency)`` pairs.  A failure
    on one combination becomes a :class:`SweepFailure` entry; the sweep
    continues.
    """
    out: list[MeasurementRecord | SweepFailure] = []
    for name, a in graphs:
        for algorithm in algorithms:
            try:
                out.append(run_benchmark(a, algorithm, trials=trials,
                                         include_aux=include_aux,
                                         graph_name=name, verify=verify))
            except Exception as exc:
                out.append(SweepFailure(name, algorithm, str(exc)))
    return out
