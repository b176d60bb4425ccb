"""Command-line front end.

Subcommands: count, bench, sweep, fit, compare, generate.  The parsed
argparse namespace is the run configuration; every error path prints a
diagnostic to stderr and exits nonzero, so exit status 0 means a clean
run.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import bench, generate as gen_mod, model, report
from .count import ALGORITHMS, count_triangles
from .errors import TricountError
from .io import TsvDialect, load_graph, parse_tsv, write_tsv
from .kernels import get_backend
from .sparse import adjacency_from_edges

_ALGO_CHOICES = ALGORITHMS + ("all",)


def _dialect_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--base", type=int, choices=(0, 1), default=1,
                        help="index base of vertex ids in the file")
    parser.add_argument("--strict-tabs", action="store_true",
                        help="require exactly one tab between fields")
    parser.add_argument("--no-weight", action="store_true",
                        help="reject a third (weight) column")


def _dialect(args: argparse.Namespace) -> TsvDialect:
    return TsvDialect(strict_tabs=args.strict_tabs, index_base=args.base,
                      has_weight_column=not args.no_weight)


def _parse_range(text: str, what: str) -> list[int]:
    """'3' -> [3]; '2..5' -> [2, 3, 4, 5]."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise ValueError(f"empty {what} range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _parse_gen_spec(text: str, dialect: TsvDialect) -> list[gen_mod.GenSpec]:
    """Expand a generator spec string into GenSpecs.

    Forms:
      er:n=N,p=P,seed=S            one Erdos-Renyi graph
      kron:seed=PATH,power=K       Kronecker power(s) of a seed TSV;
                                   power accepts a range like 2..5
    """
    kind, _, body = text.partition(":")
    params = {}
    if body:
        for item in body.split(","):
            key, sep, value = item.partition("=")
            if not sep:
                raise ValueError(f"bad generator parameter {item!r}")
            params[key.strip()] = value.strip()

    if kind == "er":
        try:
            n = int(params.pop("n"))
            p = float(params.pop("p"))
        except KeyError as missing:
            raise ValueError(f"er spec needs {missing}") from None
        seed = int(params.pop("seed", "0"))
        if params:
            raise ValueError(f"unknown er parameters {sorted(params)}")
        return [gen_mod.GenSpec(kind="erdos-renyi", n=n, p=p, rng_seed=seed)]

    if kind == "kron":
        try:
            seed_path = params.pop("seed")
            powers = _parse_range(params.pop("power"), "power")
        except KeyError as missing:
            raise ValueError(f"kron spec needs {missing}") from None
        if params:
            raise ValueError(f"unknown kron parameters {sorted(params)}")
        with open(seed_path, "r", encoding="utf-8") as fh:
            seed_graph = parse_tsv(fh, dialect, name=Path(seed_path).stem)
        return [gen_mod.GenSpec(kind="kronecker-power", seed_graph=seed_graph,
                                power=k) for k in powers]

    raise ValueError(f"unknown generator kind {kind!r}; use 'er' or 'kron'")


def cmd_count(args: argparse.Namespace) -> int:
    loaded = load_graph(args.input, _dialect(args))
    algorithms = ALGORITHMS if args.algo == "all" else (args.algo,)
    print(f"graph: {loaded.name}  vertices: {loaded.adjacency.num_rows}  "
          f"edges: {loaded.n_e}  backend: {get_backend()}")
    for algorithm in algorithms:
        result = count_triangles(loaded.adjacency, algorithm)
        print(f"{algorithm}: triangles: {result.n_t}  "
              f"kernel_s: {result.kernel_seconds:.6g}  "
              f"aux_s: {result.aux_seconds:.6g}")
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    loaded = load_graph(args.input, _dialect(args))
    record = bench.run_benchmark(loaded.adjacency, args.algo,
                                 trials=args.trials,
                                 include_aux=args.include_aux,
                                 graph_name=loaded.name, verify=args.verify)
    csv_text = report.measurements_to_csv([record])
    if args.out:
        Path(args.out).write_text(csv_text, encoding="utf-8")
        print(f"wrote 1 record to {args.out}")
    else:
        print(csv_text, end="")
    if record.low_confidence:
        print("note: median time is within 10 clock ticks; "
              "treat the rate as low-confidence", file=sys.stderr)
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    dialect = _dialect(args)
    algorithms = [a.strip() for a in args.algos.split(",") if a.strip()]
    for a in algorithms:
        if a not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {a!r}")

    graphs = []
    if args.inputs:
        paths = sorted(Path(args.inputs).glob("*.tsv"))
        if not paths:
            raise ValueError(f"no .tsv files under {args.inputs}")
        for path in paths:
            loaded = load_graph(path, dialect)
            graphs.append((loaded.name, loaded.adjacency))
    for spec_text in args.gen or ():
        for spec in _parse_gen_spec(spec_text, dialect):
            edges = gen_mod.generate(spec, max_vertices=args.size_cap)
            graphs.append((edges.name, adjacency_from_edges(edges)))
            if spec.kind == "erdos-renyi":
                print(f"generated {edges.name} (rng {gen_mod.RNG_ALGORITHM}, "
                      f"seed {spec.rng_seed})")
    if not graphs:
        raise ValueError("nothing to sweep: give --inputs and/or --gen")

    results = bench.sweep(graphs, algorithms, trials=args.trials,
                          include_aux=args.include_aux, verify=args.verify)
    records = [r for r in results if isinstance(r, bench.MeasurementRecord)]
    failures = [r for r in results if isinstance(r, bench.SweepFailure)]
    report.write_measurements(records, args.out)
    print(f"wrote {len(records)} records to {args.out}")
    for f in failures:
        print(f"error: {f.graph_name}/{f.algorithm}: {f.error}",
              file=sys.stderr)
    return 1 if failures else 0


def cmd_fit(args: argparse.Namespace) -> int:
    records = report.read_measurements(args.infile)
    if args.algo:
        records = [r for r in records if r.algorithm == args.algo]
    if args.min_ne is not None:
        records = [r for r in records if r.n_e >= args.min_ne]
    points = [(r.n_e, r.time_s_median) for r in records]
    fit = model.fit_power_law(points, snap=args.snap)
    text = report.fit_to_json(fit)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    print(f"T = (N_e/{fit.n1:.6g})^{fit.beta:.6g}   "
          f"[{fit.num_points} points, log10 residual rms "
          f"{fit.residual_rms:.3g}]")
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    fit = report.read_fit(args.fit) if args.fit else None
    lo, hi, points = args.grid.split(":")
    lo, hi, points = float(lo), float(hi), int(points)
    if lo <= 0 or hi < lo or points < 1:
        raise ValueError(f"bad grid {args.grid!r}; want LO:HI:POINTS with "
                         f"0 < LO <= HI")
    grid = np.logspace(np.log10(lo), np.log10(hi), points)
    curves = model.compare(fit, model.reference_table(), grid)
    header = [f"n_e grid: {lo:g}..{hi:g}, {points} log-spaced points",
              f"models: {len(curves)}"]
    if args.out:
        report.write_plotdata(curves, args.out, header)
        print(f"wrote {len(curves)} series to {args.out}")
    else:
        print(report.curves_to_plotdata(curves, header), end="")
    return 0


def cmd_generate(args: argparse.Namespace) -> int:
    dialect = _dialect(args)
    if args.kind == "er":
        if args.n is None or args.p is None:
            raise ValueError("er generation needs --n and --p")
        spec = gen_mod.GenSpec(kind="erdos-renyi", n=args.n, p=args.p,
                               rng_seed=args.seed)
    else:
        if not args.seed_graph:
            raise ValueError("kronecker generation needs --seed-graph")
        with open(args.seed_graph, "r", encoding="utf-8") as fh:
            seed_graph = parse_tsv(fh, dialect,
                                   name=Path(args.seed_graph).stem)
        spec = gen_mod.GenSpec(kind="kronecker-power", seed_graph=seed_graph,
                               power=args.power)
    edges = gen_mod.generate(spec, max_vertices=args.size_cap)
    text = write_tsv(edges, dialect, comments=spec.metadata_lines())
    Path(args.out).write_text(text, encoding="utf-8")
    print(f"wrote {len(edges)} edges ({edges.num_vertices} vertices) "
          f"to {args.out}")
    if spec.kind == "erdos-renyi":
        print(f"rng: {gen_mod.RNG_ALGORITHM}  seed: {spec.rng_seed}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricount",
        description="Triangle counting, benchmarking, and power-law "
                    "time-model analysis on edge-list graphs.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("count", help="count triangles in one graph")
    p.add_argument("--input", required=True)
    p.add_argument("--algo", choices=_ALGO_CHOICES, default="all")
    _dialect_args(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("bench", help="run timed counting trials")
    p.add_argument("--input", required=True)
    p.add_argument("--algo", choices=ALGORITHMS, required=True)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--include-aux", action="store_true",
                   help="fold preprocessing time into the trial time")
    p.add_argument("--verify", action="store_true",
                   help="cross-check the count against the oracle")
    p.add_argument("--out", help="write the CSV record here instead of stdout")
    _dialect_args(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("sweep", help="benchmark graphs x algorithms to CSV")
    p.add_argument("--inputs", help="directory of .tsv graphs")
    p.add_argument("--gen", action="append", metavar="SPEC",
                   help="generator spec, e.g. er:n=1000,p=0.01,seed=7 or "
                        "kron:seed=PATH,power=2..4 (repeatable)")
    p.add_argument("--algos", required=True,
                   help="comma-separated algorithm list")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--include-aux", action="store_true")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--size-cap", type=int,
                   default=gen_mod.DEFAULT_MAX_VERTICES,
                   help="maximum generated vertex count")
    p.add_argument("--out", required=True, help="output CSV path")
    _dialect_args(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("fit", help="fit a power law to a measurement CSV")
    p.add_argument("--in", dest="infile", required=True,
                   help="measurement CSV path")
    p.add_argument("--snap", action="store_true",
                   help="snap the exponent to {1, 4/3, 5/3}")
    p.add_argument("--min-ne", type=float, default=None,
                   help="drop rows with fewer edges than this")
    p.add_argument("--algo", choices=ALGORITHMS, default=None,
                   help="fit only this algorithm's rows")
    p.add_argument("--out", help="write fit JSON here instead of stdout")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("compare",
                       help="tabulate models against the reference table")
    p.add_argument("--fit", help="fit JSON to include alongside the "
                                 "reference models")
    p.add_argument("--grid", default="1e4:1e11:29",
                   help="n_e grid as LO:HI:POINTS (log-spaced)")
    p.add_argument("--out", help="write plot data here instead of stdout")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("generate", help="write a synthetic graph as TSV")
    p.add_argument("--kind", choices=("kronecker", "er"), required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--n", type=int, help="vertex count (er)")
    p.add_argument("--p", type=float, help="edge probability (er)")
    p.add_argument("--seed", type=int, default=0, help="rng seed (er)")
    p.add_argument("--seed-graph", help="seed graph TSV (kronecker)")
    p.add_argument("--power", type=int, default=2,
                   help="Kronecker power (kronecker)")
    p.add_argument("--size-cap", type=int,
                   default=gen_mod.DEFAULT_MAX_VERTICES,
                   help="maximum generated vertex count")
    _dialect_args(p)
    p.set_defaults(func=cmd_generate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (TricountError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
