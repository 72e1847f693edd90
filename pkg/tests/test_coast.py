"""Great-circle distances and nearest-coast lookups."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from weatherlens.exceptions import ConfigurationError
from weatherlens.ingest import distance_to_coast, haversine_miles
from weatherlens.ingest.coast import EARTH_RADIUS_MILES

lons = st.floats(-180, 180)
lats = st.floats(-90, 90)


def test_one_degree_of_latitude():
    # independent hand computation: R * (pi / 180)
    expected = EARTH_RADIUS_MILES * math.pi / 180.0
    assert haversine_miles(0.0, 0.0, 0.0, 1.0) == pytest.approx(expected, rel=1e-12)
    assert expected == pytest.approx(69.094, abs=5e-4)


def test_known_quarter_circumference():
    assert haversine_miles(0.0, 0.0, 0.0, 90.0) == pytest.approx(
        EARTH_RADIUS_MILES * math.pi / 2.0, rel=1e-12
    )


@given(lons, lats, lons, lats)
def test_symmetry_and_nonnegativity(lon1, lat1, lon2, lat2):
    d1 = haversine_miles(lon1, lat1, lon2, lat2)
    d2 = haversine_miles(lon2, lat2, lon1, lat1)
    assert d1 == pytest.approx(d2, abs=1e-9)
    assert d1 >= 0.0


@given(lons, lats)
def test_identity_of_indiscernibles(lon, lat):
    assert haversine_miles(lon, lat, lon, lat) == 0.0


def test_distance_to_coast_coincident_vertex_is_zero():
    shoreline = np.array([[-124.0, 40.0], [-123.0, 41.0]])
    assert distance_to_coast(-124.0, 40.0, shoreline) == 0.0


def test_distance_to_coast_takes_minimum():
    shoreline = np.array([[0.0, 1.0], [0.0, 10.0], [5.0, 5.0]])
    d = distance_to_coast(0.0, 0.0, shoreline)
    assert d == pytest.approx(EARTH_RADIUS_MILES * math.pi / 180.0, rel=1e-12)


def test_empty_shoreline_is_fatal():
    with pytest.raises(ConfigurationError):
        distance_to_coast(0.0, 0.0, np.empty((0, 2)))


def test_vectorized_matches_scalar():
    pts = np.array([[-110.0, 40.0], [-80.0, 30.0], [-95.5, 45.0]])
    d = haversine_miles(-100.0, 35.0, pts[:, 0], pts[:, 1])
    for i, (lon, lat) in enumerate(pts):
        assert d[i] == pytest.approx(haversine_miles(-100.0, 35.0, lon, lat), rel=1e-12)
