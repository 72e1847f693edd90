"""Verification stage: temperature errors, 1 - BSS, and error correlations."""

from __future__ import annotations

from pathlib import Path

from ..exceptions import ConfigurationError
from ..tableio import opt_float, read_csv_dicts, write_csv, write_json
from .brier import PrecipSeries, brier_skill_score, precip_error
from .cells import (
    ERROR_VARIABLES,
    LAGS,
    ErrorCell,
    StationSeries,
    aggregate_cell,
    aggregate_errors,
    build_station_series,
    temp_abs_error,
)
from .correlations import (
    SIGNIFICANCE_LEVEL,
    VARIABLE_PAIRS,
    CorrelationResult,
    correlation_table,
)
from .spearman import (
    betainc_regularized,
    midranks,
    spearman_pvalue,
    spearman_rho,
    student_t_two_sided,
)

__all__ = [
    "PrecipSeries",
    "brier_skill_score",
    "precip_error",
    "ErrorCell",
    "StationSeries",
    "aggregate_cell",
    "aggregate_errors",
    "build_station_series",
    "temp_abs_error",
    "spearman_rho",
    "spearman_pvalue",
    "midranks",
    "student_t_two_sided",
    "betainc_regularized",
    "CorrelationResult",
    "correlation_table",
    "run_errors",
    "load_error_cells",
    "write_error_cells",
    "ERROR_VARIABLES",
    "VARIABLE_PAIRS",
    "SIGNIFICANCE_LEVEL",
    "LAGS",
]

CELL_HEADER = (
    "station_id",
    "lag",
    "month",
    "mean_abs_err_min_temp",
    "mean_abs_err_max_temp",
    "precip_error",
    "n_days",
    "n_min_temp",
    "n_max_temp",
    "n_precip",
)

CORRELATION_HEADER = ("region", "var_x", "var_y", "n", "rho", "p_value", "significant")


def write_error_cells(path: str | Path, cells: list[ErrorCell]) -> None:
    write_csv(
        path,
        CELL_HEADER,
        (
            (
                c.station_id,
                c.lag,
                c.month,
                c.mean_abs_err_min_temp,
                c.mean_abs_err_max_temp,
                c.precip_error,
                c.n_days,
                c.n_min_temp,
                c.n_max_temp,
                c.n_precip,
            )
            for c in cells
        ),
    )


def load_error_cells(path: str | Path) -> list[ErrorCell]:
    cells = []
    for row in read_csv_dicts(path):
        cells.append(
            ErrorCell(
                station_id=row["station_id"],
                lag=row["lag"] if row["lag"] == "all" else int(row["lag"]),
                month=row["month"] if row["month"] == "all" else int(row["month"]),
                mean_abs_err_min_temp=opt_float(row["mean_abs_err_min_temp"]),
                mean_abs_err_max_temp=opt_float(row["mean_abs_err_max_temp"]),
                precip_error=opt_float(row["precip_error"]),
                n_days=int(row["n_days"]),
                n_min_temp=int(row["n_min_temp"]),
                n_max_temp=int(row["n_max_temp"]),
                n_precip=int(row["n_precip"]),
            )
        )
    if not cells:
        raise ConfigurationError(f"{path}: empty error-cells table")
    return cells


def write_correlations(path: str | Path, results: list[CorrelationResult]) -> None:
    write_csv(
        path,
        CORRELATION_HEADER,
        (
            (r.region, r.var_x, r.var_y, r.n, r.rho, r.p_value, int(r.significant))
            for r in results
        ),
    )


def load_correlations(path: str | Path) -> list[CorrelationResult]:
    out = []
    for row in read_csv_dicts(path):
        out.append(
            CorrelationResult(
                region=row["region"],
                var_x=row["var_x"],
                var_y=row["var_y"],
                n=int(row["n"]),
                rho=float(row["rho"]),
                p_value=float(row["p_value"]),
                significant=row["significant"] == "1",
            )
        )
    return out


def run_errors(clean_dir: str | Path, assignments: str | Path, out_dir: str | Path) -> None:
    """Compute the error-cell grid and correlation tables from cleaned data."""
    import shutil

    from .. import ingest
    from ..regions import load_assignments

    clean_dir = Path(clean_dir)
    out_dir = Path(out_dir)
    daily = ingest.load_clean_measurements(clean_dir / "measurements.csv")
    forecasts = ingest.load_clean_forecasts(clean_dir / "forecasts.csv")
    assignment, region_names = load_assignments(assignments)

    series = build_station_series(daily, forecasts)
    cells = aggregate_errors(series)
    results, notes = correlation_table(cells, assignment, region_names)

    out_dir.mkdir(parents=True, exist_ok=True)
    write_error_cells(out_dir / "error_cells.csv", cells)
    write_correlations(out_dir / "correlations.csv", results)
    if notes:
        write_json(out_dir / "errors_report.json", {"correlation_notes": notes})
    # pass station coordinates through so the glyph stage needs no extra input
    if (clean_dir / "stations.csv").exists():
        shutil.copyfile(clean_dir / "stations.csv", out_dir / "stations.csv")
