"""Seasonal star glyph construction."""

import math

import numpy as np
import pytest

from weatherlens.glyphs import month_angle, seasonal_glyph

ANCHOR = (100.0, -50.0)


def radii_and_angles(glyph):
    v = glyph.vertices - np.array(glyph.anchor)
    return np.hypot(v[:, 0], v[:, 1]), np.arctan2(v[:, 1], v[:, 0])


class TestAngles:
    def test_january_at_twelve_oclock(self):
        assert month_angle(1) == pytest.approx(math.pi / 2)
        glyph = seasonal_glyph([1.0] + [0.0] * 11, ANCHOR, alpha=2.0, global_max=1.0)
        jan = glyph.vertices[0]
        assert jan[0] == pytest.approx(ANCHOR[0], abs=1e-12)  # directly above
        assert jan[1] == pytest.approx(ANCHOR[1] + 2.0, abs=1e-12)

    def test_april_due_east(self):
        assert month_angle(4) == 0.0
        glyph = seasonal_glyph([0.0] * 3 + [1.0] + [0.0] * 8, ANCHOR, 2.0, 1.0)
        apr = glyph.vertices[3]
        assert apr[0] == pytest.approx(ANCHOR[0] + 2.0, abs=1e-12)
        assert apr[1] == pytest.approx(ANCHOR[1], abs=1e-12)

    def test_month_angles_are_exact_pi_over_six_steps(self):
        for m in range(1, 13):
            assert month_angle(m) == pytest.approx((4 - m) * math.pi / 6, abs=0.0)

    def test_clockwise_ordering(self):
        # consecutive months step by -30 degrees (clockwise on screen)
        for m in range(1, 12):
            delta = month_angle(m + 1) - month_angle(m)
            assert delta == pytest.approx(-math.pi / 6)

    def test_bad_month_rejected(self):
        with pytest.raises(ValueError):
            month_angle(0)
        with pytest.raises(ValueError):
            month_angle(13)


class TestGlyph:
    def test_constant_series_regular_twelve_gon(self):
        glyph = seasonal_glyph([3.0] * 12, ANCHOR, alpha=5.0, global_max=3.0)
        radii, _ = radii_and_angles(glyph)
        assert np.allclose(radii, 5.0, atol=1e-12)
        # consecutive vertex spacing equal: a regular polygon
        d = np.diff(np.vstack([glyph.vertices, glyph.vertices[:1]]), axis=0)
        side = np.hypot(d[:, 0], d[:, 1])
        assert np.allclose(side, side[0], atol=1e-9)

    def test_vertex_count_always_twelve(self):
        glyph = seasonal_glyph(list(range(12)), ANCHOR, 1.0, 11.0)
        assert glyph.vertices.shape == (12, 2)

    def test_monotone_radius_response(self):
        base = [2.0] * 12
        g1 = seasonal_glyph(base, ANCHOR, 1.0, 10.0)
        bumped = list(base)
        bumped[6] = 7.0
        g2 = seasonal_glyph(bumped, ANCHOR, 1.0, 10.0)
        r1, _ = radii_and_angles(g1)
        r2, _ = radii_and_angles(g2)
        assert r2[6] > r1[6]
        others = [i for i in range(12) if i != 6]
        assert np.allclose(r1[others], r2[others], atol=0.0)

    def test_absent_month_renders_radius_zero_with_gap_marker(self):
        series = [1.0] * 12
        series[2] = None
        glyph = seasonal_glyph(series, ANCHOR, 1.0, 1.0)
        radii, _ = radii_and_angles(glyph)
        assert radii[2] == 0.0
        assert glyph.gap_months == (3,)

    def test_all_absent_returns_none(self):
        assert seasonal_glyph([None] * 12, ANCHOR, 1.0, 1.0) is None

    def test_scaling_validation(self):
        with pytest.raises(ValueError):
            seasonal_glyph([1.0] * 12, ANCHOR, 1.0, 0.0)
        with pytest.raises(ValueError):
            seasonal_glyph([2.0] * 12, ANCHOR, 1.0, 1.0)  # exceeds global max
        with pytest.raises(ValueError):
            seasonal_glyph([-1.0] * 12, ANCHOR, 1.0, 1.0)
        with pytest.raises(ValueError):
            seasonal_glyph([1.0] * 11, ANCHOR, 1.0, 1.0)

    def test_radii_within_alpha(self):
        rng = np.random.default_rng(0)
        errors = rng.uniform(0, 4, size=12)
        glyph = seasonal_glyph(list(errors), ANCHOR, alpha=3.0, global_max=4.0)
        radii, _ = radii_and_angles(glyph)
        assert np.all(radii <= 3.0 + 1e-12)
        assert np.all(np.isfinite(glyph.vertices))
