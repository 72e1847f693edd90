"""Brier Skill Score against a brute-force double-loop oracle."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weatherlens.exceptions import UndefinedSkillError
from weatherlens.verification import PrecipSeries, brier_skill_score, precip_error


def brute_force_bss(outcomes, probs, P, lag_cols):
    """Literal double loop over days and lags, skipping missing cells pairwise."""
    num = den = 0.0
    any_cell = False
    for i in range(len(outcomes)):
        for j in lag_cols:
            y = probs[i][j]
            if y is None or (isinstance(y, float) and np.isnan(y)):
                continue
            any_cell = True
            num += (y - outcomes[i]) ** 2
            den += (P - outcomes[i]) ** 2
    if not any_cell or den == 0.0:
        raise ZeroDivisionError
    return 1.0 - num / den


def series(outcomes, probs, lags=None):
    probs = np.asarray(probs, dtype=float)
    lags = lags or tuple(range(probs.shape[1]))
    return PrecipSeries("T", np.asarray(outcomes, float), probs, np.ones(len(outcomes), int), lags=lags)


def test_perfect_forecasts_score_one():
    s = series([1, 0, 1], [[1.0], [0.0], [1.0]], lags=(0,))
    assert brier_skill_score(s) == pytest.approx(1.0)
    assert precip_error(s) == pytest.approx(0.0)


def test_climatology_forecasts_score_zero():
    outcomes = [1, 0, 0, 1]
    P = 0.5
    s = series(outcomes, [[P], [P], [P], [P]], lags=(0,))
    assert brier_skill_score(s) == pytest.approx(0.0)
    assert precip_error(s) == pytest.approx(1.0)


def test_hand_computed_example():
    # O=(1,0), Y=(0.8,0.4): numerator 0.2, denominator 0.5, BSS 0.6
    s = series([1, 0], [[0.8], [0.4]], lags=(0,))
    assert s.climatology == 0.5
    assert brier_skill_score(s) == pytest.approx(0.6, abs=1e-15)
    assert precip_error(s) == pytest.approx(0.4, abs=1e-15)


def test_missing_cells_skipped_pairwise():
    s = series([1, 0, 1, 0], [[0.9, np.nan], [np.nan, 0.2], [0.8, 0.7], [0.1, np.nan]])
    got = brier_skill_score(s)
    expected = brute_force_bss(
        [1, 0, 1, 0],
        [[0.9, None], [None, 0.2], [0.8, 0.7], [0.1, None]],
        0.5,
        [0, 1],
    )
    assert got == pytest.approx(expected, rel=1e-15)


def test_lag_subset_selection():
    s = series([1, 0], [[1.0, 0.5], [0.0, 0.5]])
    assert brier_skill_score(s, lags=(0,)) == pytest.approx(1.0)
    assert brier_skill_score(s, lags=(1,)) == pytest.approx(0.0)


def test_degenerate_climatology_is_fatal():
    s = series([1, 1], [[0.9], [0.8]], lags=(0,))
    with pytest.raises(UndefinedSkillError, match="T"):
        brier_skill_score(s)


def test_bss_never_exceeds_one_and_equality_iff_exact():
    rng = np.random.default_rng(2)
    for _ in range(200):
        n = int(rng.integers(2, 8))
        outcomes = rng.integers(0, 2, size=n).astype(float)
        if outcomes.min() == outcomes.max():
            continue
        probs = rng.uniform(size=(n, 2))
        s = series(outcomes, probs)
        bss = brier_skill_score(s)
        assert bss <= 1.0 + 1e-12
    exact = series([1, 0], [[1.0], [0.0]], lags=(0,))
    assert brier_skill_score(exact) == 1.0


def test_complement_symmetry():
    rng = np.random.default_rng(9)
    outcomes = rng.integers(0, 2, size=12).astype(float)
    outcomes[0], outcomes[1] = 0.0, 1.0
    probs = rng.uniform(size=(12, 3))
    s1 = series(outcomes, probs)
    s2 = series(1.0 - outcomes, 1.0 - probs)
    assert s2.climatology == pytest.approx(1.0 - s1.climatology)
    assert brier_skill_score(s1) == pytest.approx(brier_skill_score(s2), rel=1e-12)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_matches_brute_force_oracle(data):
    n = data.draw(st.integers(2, 10))
    n_lags = data.draw(st.integers(1, 3))
    outcomes = data.draw(
        st.lists(st.integers(0, 1), min_size=n, max_size=n).filter(lambda o: 0 < sum(o) < len(o))
    )
    cells = data.draw(
        st.lists(
            st.lists(
                st.one_of(st.none(), st.floats(0, 1, allow_nan=False)),
                min_size=n_lags,
                max_size=n_lags,
            ),
            min_size=n,
            max_size=n,
        )
    )
    probs = np.array([[np.nan if c is None else c for c in row] for row in cells])
    s = series(outcomes, probs)
    try:
        expected = brute_force_bss(outcomes, cells, s.climatology, range(n_lags))
    except ZeroDivisionError:
        with pytest.raises(UndefinedSkillError):
            brier_skill_score(s)
        return
    assert brier_skill_score(s) == pytest.approx(expected, rel=1e-12)
