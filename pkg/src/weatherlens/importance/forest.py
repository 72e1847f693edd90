"""Random-forest regression built for seeded, platform-stable reproducibility.

Trees grow breadth-first with all nodes of a level scored in vectorized
passes; bootstrap resampling is carried as integer row weights so each
tree's out-of-bag rows are known exactly. Every random draw comes from a
stream keyed by (seed, tree index), so serial and parallel execution and
repeated runs produce identical forests.

Split contract (shared by the brute-force reference used in tests):
  - a node is splittable when its weight is >= 2 * min_leaf_size and its
    weighted response variance exceeds a small relative tolerance;
  - candidate thresholds are midpoints between consecutive distinct values
    of a sampled feature, both children keeping weight >= min_leaf_size;
  - the winning split maximizes sum of child (sum w*y)^2 / (sum w); ties
    prefer the lower feature index, then the lower threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..base import ParamMixin
from ..validation import check_array, check_is_fitted, check_vector, spawned_rng

_PURE_REL_TOL = 1e-12


@dataclass
class Tree:
    """Flat-array decision tree. feature == -1 marks a leaf."""

    feature: np.ndarray
    threshold: np.ndarray
    left: np.ndarray
    right: np.ndarray
    value: np.ndarray

    def predict(self, X: np.ndarray) -> np.ndarray:
        node = np.zeros(len(X), dtype=np.int64)
        while True:
            feat = self.feature[node]
            live = feat >= 0
            if not live.any():
                break
            rows = np.flatnonzero(live)
            xv = X[rows, feat[rows]]
            go_left = xv <= self.threshold[node[rows]]
            node[rows] = np.where(go_left, self.left[node[rows]], self.right[node[rows]])
        return self.value[node]

    @property
    def n_nodes(self) -> int:
        return len(self.feature)


def _grow_tree(
    X: np.ndarray,
    y: np.ndarray,
    weights: np.ndarray,
    sorted_rows: list[np.ndarray],
    mtry: int,
    min_leaf: int,
    rng: np.random.Generator,
) -> Tree:
    n, p = X.shape
    live = np.flatnonzero(weights > 0)
    order_by_feature = [s[weights[s] > 0] for s in sorted_rows]

    feature: list[int] = []
    threshold: list[float] = []
    left: list[int] = []
    right: list[int] = []
    value: list[float] = []

    def new_node(w_sum: float, s_sum: float) -> int:
        feature.append(-1)
        threshold.append(np.nan)
        left.append(-1)
        right.append(-1)
        value.append(s_sum / w_sum)
        return len(feature) - 1

    w_live = weights[live].astype(float)
    node_of = np.full(n, -1, dtype=np.int64)
    node_of[live] = new_node(float(w_live.sum()), float((w_live * y[live]).sum()))

    level_nodes = np.array([0], dtype=np.int64)
    level_W = np.array([w_live.sum()], dtype=float)
    level_S = np.array([(w_live * y[live]).sum()], dtype=float)
    level_Q = np.array([(w_live * y[live] * y[live]).sum()], dtype=float)

    while level_nodes.size:
        base_id = int(level_nodes[0])
        n_level = level_nodes.size
        mean = level_S / level_W
        var = level_Q / level_W - mean * mean
        splittable = (level_W >= 2 * min_leaf) & (
            var > _PURE_REL_TOL * np.maximum(1.0, np.abs(level_Q / level_W))
        )

        feats_of_node = np.full((n_level, mtry), -1, dtype=np.int64)
        for i in range(n_level):
            if splittable[i]:
                feats_of_node[i] = rng.permutation(p)[:mtry]

        best_score = np.full(n_level, -np.inf)
        best_feat = np.full(n_level, -1, dtype=np.int64)
        best_thr = np.full(n_level, np.nan)

        eval_features = np.unique(feats_of_node[feats_of_node >= 0])
        for f in eval_features:
            wants = (feats_of_node == f).any(axis=1)
            ordr = order_by_feature[f]
            key = node_of[ordr] - base_id
            ok = (key >= 0) & wants[np.clip(key, 0, n_level - 1)]
            rows = ordr[ok]
            if rows.size == 0:
                continue
            key = node_of[rows] - base_id
            seg_order = np.argsort(key, kind="stable")
            rows = rows[seg_order]
            key = key[seg_order]

            xv = X[rows, f]
            wv = weights[rows].astype(float)
            sv = wv * y[rows]
            cw = np.cumsum(wv)
            cs = np.cumsum(sv)

            m = rows.size
            seg_change = np.empty(m, dtype=bool)
            seg_change[0] = True
            seg_change[1:] = key[1:] != key[:-1]
            seg_start_idx = np.flatnonzero(seg_change)
            # prefix totals just before each segment starts
            base_w = np.where(seg_start_idx > 0, cw[seg_start_idx - 1], 0.0)
            base_s = np.where(seg_start_idx > 0, cs[seg_start_idx - 1], 0.0)
            seg_of = np.cumsum(seg_change) - 1
            seg_node = key[seg_start_idx]

            cand = np.empty(m, dtype=bool)
            cand[-1] = False
            cand[:-1] = (key[1:] == key[:-1]) & (xv[1:] > xv[:-1])
            idx = np.flatnonzero(cand)
            if idx.size == 0:
                continue
            seg_i = seg_of[idx]
            WL = cw[idx] - base_w[seg_i]
            SL = cs[idx] - base_s[seg_i]
            node_i = seg_node[seg_i]
            WR = level_W[node_i] - WL
            SR = level_S[node_i] - SL
            valid = (WL >= min_leaf) & (WR >= min_leaf)
            if not valid.any():
                continue
            idx, seg_i, WL, SL, WR, SR, node_i = (
                a[valid] for a in (idx, seg_i, WL, SL, WR, SR, node_i)
            )
            score = SL * SL / WL + SR * SR / WR

            # best candidate per node for this feature: max score, first position
            order2 = np.lexsort((idx, -score, node_i))
            first = np.empty(len(order2), dtype=bool)
            nd_sorted = node_i[order2]
            first[0] = True
            first[1:] = nd_sorted[1:] != nd_sorted[:-1]
            pick = order2[first]
            for k in pick:
                nd = int(node_i[k])
                sc = float(score[k])
                if sc > best_score[nd] or (
                    sc == best_score[nd] and f < best_feat[nd]
                ):
                    best_score[nd] = sc
                    best_feat[nd] = f
                    i = int(idx[k])
                    best_thr[nd] = 0.5 * (xv[i] + xv[i + 1])

        did_split = best_feat >= 0
        if not did_split.any():
            break

        child_left = np.full(n_level, -1, dtype=np.int64)
        child_right = np.full(n_level, -1, dtype=np.int64)
        rows_live = np.flatnonzero(node_of >= base_id)
        key_live = node_of[rows_live] - base_id
        split_rows = did_split[key_live]
        go_rows = rows_live[split_rows]
        go_key = key_live[split_rows]
        xv = X[go_rows, best_feat[go_key]]
        go_left = xv <= best_thr[go_key]

        next_nodes: list[int] = []
        for i in np.flatnonzero(did_split):
            nid = base_id + int(i)
            feature[nid] = int(best_feat[i])
            threshold[nid] = float(best_thr[i])
            # placeholder stats; filled from bincounts below
            child_left[i] = new_node(1.0, 0.0)
            child_right[i] = new_node(1.0, 0.0)
            feature[child_left[i]] = -1
            feature[child_right[i]] = -1
            left[nid] = child_left[i]
            right[nid] = child_right[i]
            next_nodes.extend((child_left[i], child_right[i]))

        new_ids = np.where(go_left, child_left[go_key], child_right[go_key])
        node_of[go_rows] = new_ids
        # rows of non-split nodes become permanent leaves; drop them from play
        leaf_rows = rows_live[~split_rows]
        node_of[leaf_rows] = -1

        nxt = np.asarray(next_nodes, dtype=np.int64)
        local = new_ids - int(nxt[0])
        wv = weights[go_rows].astype(float)
        yv = y[go_rows]
        W2 = np.bincount(local, weights=wv, minlength=len(nxt))
        S2 = np.bincount(local, weights=wv * yv, minlength=len(nxt))
        Q2 = np.bincount(local, weights=wv * yv * yv, minlength=len(nxt))
        for j, nid in enumerate(nxt):
            value[nid] = S2[j] / W2[j]

        level_nodes, level_W, level_S, level_Q = nxt, W2, S2, Q2

    return Tree(
        feature=np.asarray(feature, dtype=np.int64),
        threshold=np.asarray(threshold, dtype=float),
        left=np.asarray(left, dtype=np.int64),
        right=np.asarray(right, dtype=np.int64),
        value=np.asarray(value, dtype=float),
    )


class ForestRegressor(ParamMixin):
    """Bagged regression trees with recorded out-of-bag rows.

    Defaults follow the common regression convention: 500 trees, p/3
    features per split (rounded up), leaves of at least 5 bootstrap rows.
    """

    def __init__(
        self,
        n_trees: int = 500,
        features_per_split: int | None = None,
        min_leaf_size: int = 5,
        bootstrap: bool = True,
        seed: int = 0,
    ):
        self.n_trees = n_trees
        self.features_per_split = features_per_split
        self.min_leaf_size = min_leaf_size
        self.bootstrap = bootstrap
        self.seed = seed
        self.trees_ = None
        self.oob_rows_ = None
        self.n_features_in_ = None

    def _mtry(self, p: int) -> int:
        if self.features_per_split is None:
            return max(1, math.ceil(p / 3))
        if not 1 <= self.features_per_split <= p:
            raise ValueError(
                f"features_per_split must be in [1, {p}], got {self.features_per_split}"
            )
        return self.features_per_split

    def fit(self, X, y) -> "ForestRegressor":
        X = check_array(X, name="X")
        y = check_vector(y, name="y")
        if len(X) != len(y):
            raise ValueError("X and y length mismatch")
        if self.n_trees < 1:
            raise ValueError("n_trees must be >= 1")
        n, p = X.shape
        if n < 2 * self.min_leaf_size:
            raise ValueError(
                f"need at least {2 * self.min_leaf_size} rows (2 * min_leaf_size), got {n}"
            )
        mtry = self._mtry(p)
        sorted_rows = [np.argsort(X[:, f], kind="stable") for f in range(p)]
        self.trees_ = []
        self.oob_rows_ = []
        for t in range(self.n_trees):
            rng = spawned_rng(self.seed, 0, t)
            if self.bootstrap:
                idx = rng.integers(0, n, size=n)
                weights = np.bincount(idx, minlength=n)
            else:
                weights = np.ones(n, dtype=np.int64)
            tree = _grow_tree(X, y, weights, sorted_rows, mtry, self.min_leaf_size, rng)
            self.trees_.append(tree)
            self.oob_rows_.append(np.flatnonzero(weights == 0))
        self.n_features_in_ = p
        return self

    def predict(self, X) -> np.ndarray:
        check_is_fitted(self, ["trees_"])
        X = check_array(X, name="X")
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} features, expected {self.n_features_in_}")
        total = np.zeros(len(X))
        for tree in self.trees_:
            total += tree.predict(X)
        return total / len(self.trees_)
