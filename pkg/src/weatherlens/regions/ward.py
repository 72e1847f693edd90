"""Agglomerative clustering under Ward's minimum-variance criterion.

The merge loop runs the Lance-Williams recurrence on squared Euclidean
distances and reports merge heights on the distance scale (the square root
of the minimized quantity), i.e. the squared-input convention. Ties in the
minimum merge cost break toward the lexicographically smallest cluster-id
pair, so the dendrogram is deterministic across platforms.

Cluster ids follow the usual linkage convention: leaves are 0..n-1 and the
merge at step t creates id n+t.
"""

from __future__ import annotations

import numpy as np

from ..base import ParamMixin
from ..validation import check_array, check_is_fitted, check_square_distances


def pairwise_euclidean(X) -> np.ndarray:
    """Dense symmetric Euclidean distance matrix."""
    X = check_array(X, name="X")
    diff = X[:, None, :] - X[None, :, :]
    return np.sqrt(np.sum(diff * diff, axis=-1))


def ward_linkage(distances) -> np.ndarray:
    """Merge list (n-1, 4): left id, right id, height, merged size."""
    D = check_square_distances(distances)
    n = D.shape[0]
    if n < 2:
        raise ValueError("ward_linkage needs at least 2 observations")

    total = 2 * n - 1
    S = np.full((total, total), np.inf)
    S[:n, :n] = D * D
    np.fill_diagonal(S, np.inf)
    sizes = np.zeros(total, dtype=int)
    sizes[:n] = 1
    active = np.zeros(total, dtype=bool)
    active[:n] = True

    merges = np.zeros((n - 1, 4))
    for step in range(n - 1):
        act = np.flatnonzero(active)
        sub = S[np.ix_(act, act)]
        best = np.min(sub)
        # lexicographically smallest (i, j) with i < j attaining the minimum
        ii, jj = np.nonzero(sub == best)
        keep = ii < jj
        ii, jj = ii[keep], jj[keep]
        k = np.lexsort((jj, ii))[0]
        i, j = int(act[ii[k]]), int(act[jj[k]])

        new = n + step
        ni, nj = sizes[i], sizes[j]
        merges[step] = (i, j, np.sqrt(best), ni + nj)

        others = act[(act != i) & (act != j)]
        if others.size:
            nk = sizes[others]
            S[new, others] = (
                (ni + nk) * S[i, others] + (nj + nk) * S[j, others] - nk * best
            ) / (ni + nj + nk)
            S[others, new] = S[new, others]
        sizes[new] = ni + nj
        active[i] = active[j] = False
        active[new] = True
    return merges


def cut_linkage(merges: np.ndarray, n_leaves: int, k: int) -> np.ndarray:
    """Labels 1..k from undoing the last k-1 merges.

    Component labels are assigned in order of each component's smallest
    leaf index.
    """
    if not 1 <= k <= n_leaves:
        raise ValueError(f"k must be in [1, {n_leaves}], got {k}")
    parent = np.arange(2 * n_leaves - 1)

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for step in range(n_leaves - k):
        left, right = int(merges[step, 0]), int(merges[step, 1])
        new = n_leaves + step
        parent[find(left)] = new
        parent[find(right)] = new

    comp_min: dict[int, int] = {}
    comp_of_leaf = np.zeros(n_leaves, dtype=int)
    for leaf in range(n_leaves):
        r = find(leaf)
        comp_of_leaf[leaf] = r
        comp_min.setdefault(r, leaf)
    ordered = sorted(comp_min, key=lambda r: comp_min[r])
    label_of = {r: i + 1 for i, r in enumerate(ordered)}
    return np.array([label_of[r] for r in comp_of_leaf], dtype=int)


class WardClustering(ParamMixin):
    """Ward agglomerative clustering with a fixed cluster count.

    Attributes after fit: ``linkage_`` (merge list), ``labels_`` (1..k),
    ``n_leaves_``.
    """

    def __init__(self, n_clusters: int = 6):
        self.n_clusters = n_clusters
        self.linkage_ = None
        self.labels_ = None
        self.n_leaves_ = None

    def fit(self, X) -> "WardClustering":
        X = check_array(X, min_rows=2, name="X")
        self.n_leaves_ = X.shape[0]
        self.linkage_ = ward_linkage(pairwise_euclidean(X))
        self.labels_ = cut_linkage(self.linkage_, self.n_leaves_, self.n_clusters)
        return self

    def fit_predict(self, X) -> np.ndarray:
        return self.fit(X).labels_

    def cut(self, k: int) -> np.ndarray:
        check_is_fitted(self, ["linkage_"])
        return cut_linkage(self.linkage_, self.n_leaves_, k)
