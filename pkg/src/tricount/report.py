"""Report emission and ingestion: measurement CSV, fit JSON, plot data.

The measurement CSV header is fixed:

    graph,algorithm,vertices,edges,nnz,trials,time_s_min,time_s_median,rate_eps,n_t,include_aux

Floats are written in shortest round-trip decimal form, so a write/read
cycle preserves them bit for bit.  Fit JSON keys mirror the
:class:`tricount.model.PowerLawFit` field names exactly.  Plot data is
plain columnar text, one block per model series, ready for any external
plotting tool.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .bench import MeasurementRecord
from .model import PowerLawFit

CSV_FIELDS = ("graph", "algorithm", "vertices", "edges", "nnz", "trials",
              "time_s_min", "time_s_median", "rate_eps", "n_t", "include_aux")


def _record_row(r: MeasurementRecord) -> list[str]:
    return [r.graph_name, r.algorithm, str(r.num_vertices), str(r.n_e),
            str(r.nnz), str(r.trials), repr(r.time_s_min),
            repr(r.time_s_median), repr(r.rate_eps), str(r.n_t),
            "true" if r.include_aux else "false"]


def measurements_to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in records:
        writer.writerow(_record_row(r))
    return buf.getvalue()


def write_measurements(records, path) -> None:
    Path(path).write_text(measurements_to_csv(records), encoding="utf-8")


def _parse_bool(text: str) -> bool:
    if text == "true":
        return True
    if text == "false":
        return False
    raise ValueError(f"expected 'true' or 'false', got {text!r}")


def measurements_from_csv(text: str) -> list[MeasurementRecord]:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ValueError("empty measurement CSV") from None
    if tuple(header) != CSV_FIELDS:
        raise ValueError(f"unexpected CSV header {header!r}")
    records = []
    for row in reader:
        if not row:
            continue
        if len(row) != len(CSV_FIELDS):
            raise ValueError(f"expected {len(CSV_FIELDS)} columns, got "
                             f"{len(row)}: {row!r}")
        records.append(MeasurementRecord(
            graph_name=row[0], algorithm=row[1], num_vertices=int(row[2]),
            n_e=int(row[3]), nnz=int(row[4]), trials=int(row[5]),
            time_s_min=float(row[6]), time_s_median=float(row[7]),
            rate_eps=float(row[8]), n_t=int(row[9]),
            include_aux=_parse_bool(row[10])))
    return records


def read_measurements(path) -> list[MeasurementRecord]:
    return measurements_from_csv(Path(path).read_text(encoding="utf-8"))


def fit_to_json(fit: PowerLawFit) -> str:
    return json.dumps({"alpha": fit.alpha, "beta": fit.beta, "n1": fit.n1,
                       "residual_rms": fit.residual_rms,
                       "num_points": fit.num_points,
                       "snapped": fit.snapped}, indent=2) + "\n"


def write_fit(fit: PowerLawFit, path) -> None:
    Path(path).write_text(fit_to_json(fit), encoding="utf-8")


def fit_from_json(text: str) -> PowerLawFit:
    data = json.loads(text)
    return PowerLawFit(alpha=data["alpha"], beta=data["beta"],
                       n1=data["n1"], residual_rms=data["residual_rms"],
                       num_points=data["num_points"],
                       snapped=data.get("snapped", False))


def read_fit(path) -> PowerLawFit:
    return fit_from_json(Path(path).read_text(encoding="utf-8"))


def curves_to_plotdata(curves, header_lines=()) -> str:
    """Columnar text: per series, a comment header then one line per grid
    point with columns n_e, time_s, rate_eps, time_vs_soa."""
    out = []
    for line in header_lines:
        out.append(f"# {line}")
    for curve in curves:
        if out:
            out.append("")
        out.append(f"# series: {curve.label}")
        out.append("# columns: n_e time_s rate_eps time_vs_soa")
        for ne, t, r, ratio in zip(curve.n_e, curve.time_s, curve.rate_eps,
                                   curve.time_vs_soa):
            out.append(f"{float(ne)!r} {float(t)!r} {float(r)!r} "
                       f"{float(ratio)!r}")
    return "\n".join(out) + "\n" if out else ""


def write_plotdata(curves, path, header_lines=()) -> None:
    Path(path).write_text(curves_to_plotdata(curves, header_lines),
                          encoding="utf-8")
