"""CSV and JSON emission for tables, grids and reports.

CSV output uses LF line endings, a mandatory header row, and plain
decimal integer formatting; JSON documents carry schema_version "1" and
are dumped with sorted keys so identical inputs give identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .analysis import RatioSeries, SplitReport
from .games import GameSpec, OutcomeGrid, validate_spec
from .sieve import DerivedRows, PTable, derive_rows, table_from_pi

SCHEMA_VERSION = "1"

PTABLE_HEADER = "n,a_n,b_n,delta,gamma,eta"
RATIO_HEADER = "n,a,b,ratio"
GRID_HEADER = "x,y,outcome"


def dumps_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def spec_to_list(spec: GameSpec) -> list[list[int]]:
    return [[p, q] for p, q in spec.pairs]


def ptable_to_csv(table: PTable, rows: DerivedRows | None = None) -> str:
    if rows is None:
        rows = derive_rows(table)
    lines = [PTABLE_HEADER]
    for n in range(table.pair_count()):
        lines.append(
            f"{n},{table.a[n]},{table.b[n]},{rows.delta[n]},{rows.gamma[n]},{rows.eta[n]}"
        )
    return "\n".join(lines) + "\n"


def ptable_rows_from_csv(text: str) -> list[tuple[int, int, int, int, int, int]]:
    lines = text.strip().split("\n")
    if not lines or lines[0] != PTABLE_HEADER:
        raise ValueError(f"expected header {PTABLE_HEADER!r}")
    return [tuple(int(v) for v in line.split(",")) for line in lines[1:]]


def ptable_to_json_doc(table: PTable, rows: DerivedRows | None = None) -> dict:
    if rows is None:
        rows = derive_rows(table)
    return {
        "schema_version": SCHEMA_VERSION,
        "spec": spec_to_list(table.spec),
        "n_max": table.n_max,
        "pi": list(table.pi),
        "a": list(table.a),
        "b": list(table.b),
        "delta": list(rows.delta),
        "gamma": list(rows.gamma),
        "eta": list(rows.eta),
        "multipliers": [rows.mult_lo, rows.mult_hi],
    }


def ptable_from_json_doc(doc: dict) -> PTable:
    spec = validate_spec([tuple(p) for p in doc["spec"]])
    return table_from_pi(spec, doc["n_max"], doc["pi"])


def grid_to_csv(grid: OutcomeGrid) -> str:
    lines = [GRID_HEADER]
    for x in range(grid.xmax + 1):
        for y in range(grid.ymax + 1):
            lines.append(f"{x},{y},{grid.outcome(x, y)}")
    return "\n".join(lines) + "\n"


def ratio_series_to_csv(series: RatioSeries) -> str:
    lines = [RATIO_HEADER]
    for e in series.entries:
        lines.append(f"{e.index},{e.x},{e.y},{e.ratio_float!r}")
    return "\n".join(lines) + "\n"


def _fraction_fields(name: str, value: Fraction | None) -> dict:
    if value is None:
        return {name: None, f"{name}_exact": None}
    return {name: float(value), f"{name}_exact": f"{value.numerator}/{value.denominator}"}


def split_report_to_json_doc(report: SplitReport, series: RatioSeries) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "spec": spec_to_list(series.spec),
        "n_max": series.n_max,
        "series_kind": series.kind,
        "parameters": {
            "min_tail": report.min_tail,
            "gap_resolution": f"{report.gap_resolution.numerator}/{report.gap_resolution.denominator}",
            "min_beam_fraction": report.min_beam_fraction,
        },
        "split": report.split,
        "fold_count": report.fold_count,
        "exceptional_count": report.exceptional_count,
        "tail_count": report.tail_count,
        "tail_mean": report.tail_mean,
        "gaps": [
            {
                "alpha": float(alpha),
                "alpha_exact": f"{alpha.numerator}/{alpha.denominator}",
                "mu": float(mu),
                "mu_exact": f"{mu.numerator}/{mu.denominator}",
            }
            for alpha, mu in report.gaps
        ],
        "beams": [
            {
                "side": b.side,
                "slope": b.slope,
                "density": b.density,
                "median": b.median,
                "last_decile_mean": b.last_decile_mean,
                "count": b.count,
                "index_first": b.index_first,
                "index_last": b.index_last,
                "ratio_min": b.ratio_min,
                "ratio_max": b.ratio_max,
            }
            for b in report.beams
        ],
    }
    doc.update(_fraction_fields("alpha", report.alpha))
    doc.update(_fraction_fields("mu", report.mu))
    return doc


def render_table_text(table: PTable, rows: DerivedRows | None = None) -> str:
    """Row-major text rendering: b over a over the difference rows."""
    if rows is None:
        rows = derive_rows(table)
    labelled = [
        ("b_n", table.b),
        ("a_n", table.a),
        ("delta_n", rows.delta),
        ("gamma_n", rows.gamma),
        ("eta_n", rows.eta),
        ("n", tuple(range(table.pair_count()))),
    ]
    width = max(
        (len(str(v)) for _, values in labelled for v in values), default=1
    )
    label_width = max(len(label) for label, _ in labelled)
    lines = []
    for label, values in labelled:
        cells = " ".join(f"{v:>{width}}" for v in values)
        lines.append(f"{label:<{label_width}} | {cells}")
    return "\n".join(lines) + "\n"
