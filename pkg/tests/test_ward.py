"""Ward clustering against an exhaustive minimum-variance-increase oracle."""

from itertools import combinations

import numpy as np
import pytest

from weatherlens.regions import WardClustering, cut_linkage, pairwise_euclidean, ward_linkage


def exhaustive_ward(X: np.ndarray) -> list[tuple[int, int, float, int]]:
    """Recompute every candidate merge's variance increase from raw points.

    Independent of the Lance-Williams path: at each step the within-cluster
    sum-of-squares increase of every pair is evaluated from scratch and the
    minimum (ties toward the smallest id pair) is merged. Heights follow the
    same distance-scale convention: sqrt(2 * delta SS).
    """
    n = len(X)
    clusters: dict[int, list[int]] = {i: [i] for i in range(n)}
    next_id = n
    merges = []
    while len(clusters) > 1:
        best = None
        for a, b in combinations(sorted(clusters), 2):
            A, B = X[clusters[a]], X[clusters[b]]
            ca, cb = A.mean(axis=0), B.mean(axis=0)
            na, nb = len(A), len(B)
            delta_ss = na * nb / (na + nb) * float(((ca - cb) ** 2).sum())
            if best is None or delta_ss < best[0] - 1e-12:
                best = (delta_ss, a, b)
        delta_ss, a, b = best
        merges.append((a, b, np.sqrt(2.0 * delta_ss), len(clusters[a]) + len(clusters[b])))
        clusters[next_id] = clusters.pop(a) + clusters.pop(b)
        next_id += 1
    return merges


def canonical(labels) -> list[int]:
    seen: dict[int, int] = {}
    return [seen.setdefault(v, len(seen)) for v in labels]


def test_separated_pairs_merge_first():
    X = np.array([[0.0], [0.1], [10.0], [10.1]])
    merges = ward_linkage(pairwise_euclidean(X))
    first_two = {
        frozenset((int(merges[0, 0]), int(merges[0, 1]))),
        frozenset((int(merges[1, 0]), int(merges[1, 1]))),
    }
    assert first_two == {frozenset((0, 1)), frozenset((2, 3))}


def test_matches_exhaustive_oracle_on_random_data():
    rng = np.random.default_rng(11)
    for _ in range(25):
        n = int(rng.integers(3, 9))
        p = int(rng.integers(1, 5))
        X = rng.normal(size=(n, p))
        mine = ward_linkage(pairwise_euclidean(X))
        oracle = exhaustive_ward(X)
        for (l1, r1, h1, s1), (l2, r2, h2, s2) in zip(mine, oracle):
            assert {int(l1), int(r1)} == {l2, r2}
            assert h1 == pytest.approx(h2, rel=1e-9)
            assert int(s1) == s2


def test_deterministic_tie_break_lowest_pair():
    # four corners of a square: all nearest-pair costs tie
    X = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])
    merges = ward_linkage(pairwise_euclidean(X))
    assert (int(merges[0, 0]), int(merges[0, 1])) == (0, 1)


def test_merge_heights_monotone():
    rng = np.random.default_rng(5)
    X = rng.normal(size=(30, 4))
    merges = ward_linkage(pairwise_euclidean(X))
    assert np.all(np.diff(merges[:, 2]) >= -1e-12)


def test_distance_matrix_matches_brute_force():
    rng = np.random.default_rng(7)
    X = rng.normal(size=(10, 4))
    D = pairwise_euclidean(X)
    for i in range(10):
        for j in range(10):
            expected = np.sqrt(sum((X[i, k] - X[j, k]) ** 2 for k in range(4)))
            assert D[i, j] == pytest.approx(expected, abs=1e-12)
    assert np.array_equal(D, D.T)
    assert np.all(np.diag(D) == 0.0)


def test_input_order_invariance_up_to_relabeling():
    rng = np.random.default_rng(13)
    X = rng.normal(size=(24, 5))
    labels = WardClustering(n_clusters=4).fit_predict(X)
    perm = rng.permutation(24)
    labels_perm = WardClustering(n_clusters=4).fit_predict(X[perm])
    restored = np.empty(24, dtype=int)
    restored[perm] = labels_perm
    assert canonical(labels) == canonical(restored)


def test_cut_refinement():
    rng = np.random.default_rng(17)
    X = rng.normal(size=(20, 3))
    model = WardClustering(n_clusters=2).fit(X)
    for k in range(2, 20):
        coarse = model.cut(k)
        fine = model.cut(k + 1)
        for label in set(fine):
            members = np.flatnonzero(fine == label)
            assert len(set(coarse[members])) == 1

    assert len(set(model.cut(1))) == 1
    assert len(set(model.cut(20))) == 20


def test_cut_k_out_of_range():
    model = WardClustering(n_clusters=2).fit(np.random.default_rng(0).normal(size=(5, 2)))
    with pytest.raises(ValueError):
        model.cut(0)
    with pytest.raises(ValueError):
        model.cut(6)


def test_labels_ordered_by_smallest_member():
    X = np.array([[10.0], [0.0], [10.1], [0.1]])
    labels = cut_linkage(ward_linkage(pairwise_euclidean(X)), 4, 2)
    # station 0 belongs to label 1 by the smallest-member ordering rule
    assert labels[0] == 1
    assert labels[2] == 1
    assert labels[1] == 2


def test_n_below_two_is_fatal():
    with pytest.raises(ValueError):
        ward_linkage(np.zeros((1, 1)))
