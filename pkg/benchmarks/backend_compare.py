#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs every counting algorithm on a few generated graphs under each
available backend and prints the median kernel times side by side with
the speedup.  Sizes are kept small enough that the pure backend finishes
in seconds; scale up with --ne.

    python benchmarks/backend_compare.py
    python benchmarks/backend_compare.py --algos lu,oracle --ne 30000
"""

import argparse
import math

from tricount import kernels
from tricount.bench import run_benchmark
from tricount.count import ALGORITHMS
from tricount.generate import erdos_renyi
from tricount.sparse import adjacency_from_edges


def target_graphs(ne_targets, seed=1):
    """Erdos-Renyi graphs aiming at the requested edge counts with an
    average degree near 16."""
    for target in ne_targets:
        n = max(8, int(round(2 * target / 16)))
        p = min(1.0, target / math.comb(n, 2))
        el = erdos_renyi(n, p, seed)
        yield el.name, adjacency_from_edges(el)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=3)
    parser.add_argument("--algos", default=",".join(ALGORITHMS),
                        help="comma-separated algorithm subset")
    parser.add_argument("--ne", type=int, nargs="*",
                        default=[2000, 8000, 16000],
                        help="approximate undirected edge counts to test")
    args = parser.parse_args()

    algos = [a for a in args.algos.split(",") if a]
    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)}   trials: {args.trials}")
    if "c" not in backends:
        print("note: compiled kernels unavailable; timing pure Python only")

    header = f"{'graph':>22} {'n_e':>8} {'algo':>7}"
    for b in backends:
        header += f" {b + ' median_s':>14}"
    if len(backends) == 2:
        header += f" {'speedup':>9}"
    print(header)

    for name, a in target_graphs(args.ne):
        for algo in algos:
            medians = {}
            n_ts = set()
            for backend in backends:
                with kernels.use_backend(backend):
                    rec = run_benchmark(a, algo, trials=args.trials,
                                        graph_name=name)
                medians[backend] = rec.time_s_median
                n_ts.add(rec.n_t)
            assert len(n_ts) == 1, "backends disagreed on the count"
            line = f"{name:>22} {a.nnz // 2:>8} {algo:>7}"
            for b in backends:
                line += f" {medians[b]:>14.6f}"
            if len(backends) == 2:
                line += f" {medians['python'] / medians['c']:>8.1f}x"
            print(line)


if __name__ == "__main__":
    main()
