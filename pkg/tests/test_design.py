"""Design-matrix assembly for the importance forests."""

import numpy as np
import pytest

from weatherlens.exceptions import DesignError
from weatherlens.importance import PREDICTORS, build_design_matrix
from weatherlens.regions.profiles import PROFILE_FEATURES
from weatherlens.verification.cells import ErrorCell


def cell(sid, lag, month, value=1.0, var="precip_error"):
    kw = dict(mean_abs_err_min_temp=None, mean_abs_err_max_temp=None, precip_error=None)
    kw[var] = value
    return ErrorCell(sid, lag, month, n_days=3, n_min_temp=3, n_max_temp=3, n_precip=3, **kw)


def full_grid(sids, var="precip_error"):
    cells = []
    for s, sid in enumerate(sids):
        for lag in list(range(6)) + ["all"]:
            for month in list(range(1, 13)) + ["all"]:
                lag_n = 6 if lag == "all" else lag
                month_n = 0 if month == "all" else month
                cells.append(cell(sid, lag, month, value=float((s + 3 * lag_n + 7 * month_n) % 11), var=var))
    return cells


def profiles_for(sids):
    rng = np.random.default_rng(0)
    return {sid: rng.normal(size=len(PROFILE_FEATURES)) for sid in sids}


def test_full_coverage_row_count():
    sids = [f"S{i}" for i in range(7)]
    cells = full_grid(sids)
    dm = build_design_matrix(
        cells, profiles_for(sids), {s: 1 for s in sids}, 1, "R", "precip_error"
    )
    assert dm.X.shape == (7 * 6 * 12, len(PREDICTORS))
    assert dm.predictor_names[-1] == "lag"
    assert set(np.unique(dm.X[:, -1])) == set(range(6))


def test_missing_month_rows_absent():
    sids = ["A"]
    cells = [c for c in full_grid(sids) if c.month != 11]
    dm = build_design_matrix(cells, profiles_for(sids), {"A": 1}, 1, "R", "precip_error")
    assert dm.X.shape[0] == 6 * 11
    assert all(month != 11 for _, _, month in dm.rows)


def test_margin_cells_excluded():
    sids = ["A"]
    dm = build_design_matrix(full_grid(sids), profiles_for(sids), {"A": 1}, 1, "R", "precip_error")
    assert all(lag != "all" and month != "all" for _, lag, month in dm.rows)


def test_other_regions_excluded():
    sids = ["A", "B"]
    assignment = {"A": 1, "B": 2}
    dm = build_design_matrix(full_grid(sids), profiles_for(sids), assignment, 1, "R", "precip_error")
    assert {r[0] for r in dm.rows} == {"A"}


def test_empty_region_is_fatal_and_names_region():
    with pytest.raises(DesignError, match="Nowhere"):
        build_design_matrix(
            full_grid(["A"]), profiles_for(["A"]), {"A": 1}, 2, "Nowhere", "precip_error"
        )


def test_unknown_error_variable():
    with pytest.raises(ValueError):
        build_design_matrix(full_grid(["A"]), profiles_for(["A"]), {"A": 1}, 1, "R", "nope")


def test_absent_predictor_cells_fatal():
    sids = ["A"]
    bad = {sid: np.full(len(PROFILE_FEATURES), np.nan) for sid in sids}
    with pytest.raises(DesignError, match="absent predictor"):
        build_design_matrix(full_grid(sids), bad, {"A": 1}, 1, "R", "precip_error")
