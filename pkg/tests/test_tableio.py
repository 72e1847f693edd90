"""Deterministic table/JSON serialization."""

import numpy as np

from weatherlens.tableio import fmt_cell, opt_float, read_csv_dicts, write_csv


def test_float_round_trip_shortest_repr(tmp_path):
    values = [0.1, 1 / 3, 1e-17, 123456.789, -2.5, float(np.float64(0.30000000000000004))]
    path = tmp_path / "t.csv"
    write_csv(path, ["v"], [[v] for v in values])
    back = [float(r["v"]) for r in read_csv_dicts(path)]
    assert back == values


def test_integral_floats_compact():
    assert fmt_cell(75.0) == "75"
    assert fmt_cell(-3.0) == "-3"
    assert fmt_cell(75.5) == "75.5"


def test_none_and_nan_serialize_empty():
    assert fmt_cell(None) == ""
    assert fmt_cell(float("nan")) == ""
    assert opt_float("") is None
    assert opt_float("2.5") == 2.5


def test_written_bytes_stable(tmp_path):
    rows = [[i, i * 0.1, f"s{i}"] for i in range(50)]
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    write_csv(p1, ["i", "x", "s"], rows)
    write_csv(p2, ["i", "x", "s"], rows)
    assert p1.read_bytes() == p2.read_bytes()
