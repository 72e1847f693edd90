"""Forest regression against a brute-force reference CART.

The reference grows trees breadth-first with a literal candidate scan,
consuming the same RNG stream and honoring the same split contract as the
production builder. Integer responses keep every prefix-sum exact in
float64, so tree structures must match bit for bit.
"""

import numpy as np
import pytest

from weatherlens.exceptions import NotFittedError
from weatherlens.importance import ForestRegressor
from weatherlens.importance.forest import _PURE_REL_TOL
from weatherlens.validation import spawned_rng


def reference_tree(X, y, weights, mtry, min_leaf, rng):
    n, p = X.shape
    feature, threshold, left, right, value = [], [], [], [], []

    def new_node(rows):
        w = weights[rows].astype(float)
        feature.append(-1)
        threshold.append(np.nan)
        left.append(-1)
        right.append(-1)
        value.append(float((w * y[rows]).sum() / w.sum()))
        return len(feature) - 1

    queue = [(new_node(np.flatnonzero(weights > 0)), np.flatnonzero(weights > 0))]
    while queue:
        level, queue = queue, []
        decisions = []
        for nid, rows in level:
            w = weights[rows].astype(float)
            W = w.sum()
            S = (w * y[rows]).sum()
            Q = (w * y[rows] * y[rows]).sum()
            var = Q / W - (S / W) ** 2
            if not (W >= 2 * min_leaf and var > _PURE_REL_TOL * max(1.0, abs(Q / W))):
                decisions.append((nid, rows, None))
                continue
            feats = rng.permutation(p)[:mtry]
            best = None
            for f in sorted(feats):
                order = rows[np.argsort(X[rows, f], kind="stable")]
                xv = X[order, f]
                cw = np.cumsum(weights[order].astype(float))
                cs = np.cumsum(weights[order] * y[order])
                for i in range(len(order) - 1):
                    if xv[i + 1] <= xv[i]:
                        continue
                    WL, SL = cw[i], cs[i]
                    WR, SR = W - WL, S - SL
                    if WL < min_leaf or WR < min_leaf:
                        continue
                    score = SL * SL / WL + SR * SR / WR
                    if best is None or score > best[0]:
                        best = (score, f, 0.5 * (xv[i] + xv[i + 1]))
            decisions.append((nid, rows, best))
        for nid, rows, best in decisions:
            if best is None:
                continue
            _, f, thr = best
            feature[nid] = int(f)
            threshold[nid] = float(thr)
            lrows = rows[X[rows, f] <= thr]
            rrows = rows[X[rows, f] > thr]
            lid, rid = new_node(lrows), new_node(rrows)
            left[nid], right[nid] = lid, rid
            queue.append((lid, lrows))
            queue.append((rid, rrows))
    return (
        np.array(feature),
        np.array(threshold),
        np.array(left),
        np.array(right),
        np.array(value),
    )


def trees_equal(tree, ref) -> bool:
    got = (tree.feature, tree.threshold, tree.left, tree.right, tree.value)
    return all(np.array_equal(a, b, equal_nan=True) for a, b in zip(got, ref))


class TestAgainstReference:
    @pytest.mark.parametrize("seed", range(6))
    def test_structures_match_reference(self, seed):
        rng_data = np.random.default_rng(seed + 100)
        n = int(rng_data.integers(20, 120))
        p = int(rng_data.integers(2, 6))
        X = rng_data.normal(size=(n, p))
        y = rng_data.integers(0, 64, size=n).astype(float)
        mtry = max(1, int(np.ceil(p / 3)))
        forest = ForestRegressor(
            n_trees=4, features_per_split=mtry, min_leaf_size=3, seed=seed
        ).fit(X, y)
        for t in range(4):
            rng = spawned_rng(seed, 0, t)
            idx = rng.integers(0, n, size=n)
            weights = np.bincount(idx, minlength=n)
            ref = reference_tree(X, y, weights, mtry, 3, rng)
            assert trees_equal(forest.trees_[t], ref)
            assert np.array_equal(forest.oob_rows_[t], np.flatnonzero(weights == 0))

    def test_no_bootstrap_reference(self):
        rng_data = np.random.default_rng(7)
        X = rng_data.normal(size=(40, 3))
        y = rng_data.integers(0, 32, size=40).astype(float)
        forest = ForestRegressor(
            n_trees=2, features_per_split=2, min_leaf_size=2, bootstrap=False, seed=3
        ).fit(X, y)
        for t in range(2):
            rng = spawned_rng(3, 0, t)
            ref = reference_tree(X, y, np.ones(40, dtype=np.int64), 2, 2, rng)
            assert trees_equal(forest.trees_[t], ref)
            assert len(forest.oob_rows_[t]) == 0


class TestContracts:
    def test_constant_response_predicts_the_constant(self):
        X = np.random.default_rng(0).normal(size=(30, 3))
        forest = ForestRegressor(n_trees=8, seed=1).fit(X, np.full(30, 2.5))
        assert np.all(forest.predict(X) == 2.5)
        assert all(t.n_nodes == 1 for t in forest.trees_)

    def test_exact_signal_gives_high_training_r2(self):
        rng = np.random.default_rng(4)
        X = rng.normal(size=(500, 5))
        y = X[:, 0].copy()
        forest = ForestRegressor(n_trees=100, seed=2).fit(X, y)
        pred = forest.predict(X)
        r2 = 1.0 - np.sum((pred - y) ** 2) / np.sum((y - y.mean()) ** 2)
        assert r2 > 0.95

    def test_same_seed_bit_identical(self):
        rng = np.random.default_rng(8)
        X = rng.normal(size=(80, 4))
        y = X @ rng.normal(size=4) + rng.normal(size=80)
        f1 = ForestRegressor(n_trees=12, seed=5).fit(X, y)
        f2 = ForestRegressor(n_trees=12, seed=5).fit(X, y)
        for a, b in zip(f1.trees_, f2.trees_):
            assert trees_equal(a, (b.feature, b.threshold, b.left, b.right, b.value))
        f3 = ForestRegressor(n_trees=12, seed=6).fit(X, y)
        assert not all(
            trees_equal(a, (b.feature, b.threshold, b.left, b.right, b.value))
            for a, b in zip(f1.trees_, f3.trees_)
        )

    def test_predictions_bounded_by_training_range(self):
        rng = np.random.default_rng(12)
        X = rng.normal(size=(120, 4))
        y = rng.normal(size=120) * 10
        forest = ForestRegressor(n_trees=20, seed=0).fit(X, y)
        probe = rng.normal(size=(300, 4)) * 5
        pred = forest.predict(probe)
        assert pred.min() >= y.min() - 1e-12
        assert pred.max() <= y.max() + 1e-12

    def test_min_leaf_weight_respected(self):
        rng = np.random.default_rng(3)
        n, min_leaf = 60, 10
        X = rng.normal(size=(n, 2))
        y = rng.normal(size=n)
        forest = ForestRegressor(n_trees=6, min_leaf_size=min_leaf, seed=9).fit(X, y)
        for t, tree in enumerate(forest.trees_):
            stream = spawned_rng(9, 0, t)
            weights = np.bincount(stream.integers(0, n, size=n), minlength=n)
            # route each in-bag row to its leaf and sum bootstrap weights
            leaf_weight = np.zeros(tree.n_nodes)
            for row in np.flatnonzero(weights > 0):
                node = 0
                while tree.feature[node] >= 0:
                    go_left = X[row, tree.feature[node]] <= tree.threshold[node]
                    node = tree.left[node] if go_left else tree.right[node]
                leaf_weight[node] += weights[row]
            for node in range(tree.n_nodes):
                if tree.feature[node] < 0:
                    assert leaf_weight[node] >= min_leaf

    def test_validation_errors(self):
        X = np.random.default_rng(0).normal(size=(20, 3))
        y = np.arange(20.0)
        with pytest.raises(NotFittedError):
            ForestRegressor().predict(X)
        with pytest.raises(ValueError):
            ForestRegressor(n_trees=0).fit(X, y)
        with pytest.raises(ValueError):
            ForestRegressor(features_per_split=9).fit(X, y)
        with pytest.raises(ValueError):
            ForestRegressor(min_leaf_size=30).fit(X, y)
        fitted = ForestRegressor(n_trees=2, seed=0).fit(X, y)
        with pytest.raises(ValueError):
            fitted.predict(np.zeros((4, 5)))

    def test_get_params(self):
        forest = ForestRegressor(n_trees=10, seed=3)
        params = forest.get_params()
        assert params["n_trees"] == 10 and params["seed"] == 3
        clone = ForestRegressor(**params)
        assert clone.get_params() == params
