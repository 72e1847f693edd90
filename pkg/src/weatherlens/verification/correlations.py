"""Cross-metric Spearman correlations per region and overall."""

from __future__ import annotations

from dataclasses import dataclass

from ..exceptions import UndefinedStatisticError
from .cells import ERROR_VARIABLES, ErrorCell
from .spearman import spearman_pvalue, spearman_rho

SIGNIFICANCE_LEVEL = 0.05

VARIABLE_PAIRS = (
    ("mean_abs_err_min_temp", "mean_abs_err_max_temp"),
    ("mean_abs_err_min_temp", "precip_error"),
    ("mean_abs_err_max_temp", "precip_error"),
)


@dataclass
class CorrelationResult:
    region: str                 # region name or "overall"
    var_x: str
    var_y: str
    n: int
    rho: float
    p_value: float
    significant: bool


def station_error_vectors(cells: list[ErrorCell]) -> dict[str, dict[str, float]]:
    """station -> error values from the fully pooled (lag=all, month=all) cell."""
    out: dict[str, dict[str, float]] = {}
    for cell in cells:
        if cell.lag != "all" or cell.month != "all":
            continue
        vec = {}
        for var in ERROR_VARIABLES:
            value = getattr(cell, var)
            if value is not None:
                vec[var] = value
        out[cell.station_id] = vec
    return out


def correlation_table(
    cells: list[ErrorCell],
    assignment: dict[str, int],
    region_names: dict[int, str],
) -> tuple[list[CorrelationResult], list[str]]:
    """All pairwise correlations for each region and for the pooled stations."""
    vectors = station_error_vectors(cells)
    groups: list[tuple[str, list[str]]] = [("overall", sorted(vectors))]
    for label in sorted(region_names):
        members = sorted(s for s, lbl in assignment.items() if lbl == label and s in vectors)
        groups.append((region_names[label], members))

    results: list[CorrelationResult] = []
    notes: list[str] = []
    for region, stations in groups:
        for var_x, var_y in VARIABLE_PAIRS:
            xs, ys = [], []
            for sid in stations:
                vec = vectors.get(sid, {})
                if var_x in vec and var_y in vec:
                    xs.append(vec[var_x])
                    ys.append(vec[var_y])
            try:
                rho = spearman_rho(xs, ys)
                p = spearman_pvalue(rho, len(xs))
            except UndefinedStatisticError as exc:
                notes.append(f"{region} {var_x}~{var_y}: {exc}")
                continue
            results.append(
                CorrelationResult(
                    region=region,
                    var_x=var_x,
                    var_y=var_y,
                    n=len(xs),
                    rho=rho,
                    p_value=p,
                    significant=p < SIGNIFICANCE_LEVEL,
                )
            )
    return results, notes
