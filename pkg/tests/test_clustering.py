"""Tests for k-means grouping on the principal component plane."""

import numpy as np
import pytest

from kolan.errors import KTooLarge, UsageError
from kolan.pca import ClusterAssignment, biplot_points, cluster_scores, kmeans, run_pca


# ===== FIXTURES =====


@pytest.fixture(scope="module")
def result(dataset):
    return run_pca(dataset)


@pytest.fixture
def two_blobs():
    points = np.array([[0.0, 0.0], [0.2, 0.1], [0.1, 0.3], [5.0, 5.0], [5.2, 4.9]])
    return points, ["a", "b", "c", "d", "e"]


class TestKmeans:
    """Deterministic Lloyd iterations."""

    def test_separates_blobs(self, two_blobs):
        points, ids = two_blobs
        assignment = kmeans(points, ids, 2)
        assert assignment.groups() == [["a", "b", "c"], ["d", "e"]]

    def test_first_centre_is_lowest_id(self, two_blobs):
        """Cluster 0 always holds the alphabetically first id."""
        points, ids = two_blobs
        reordered = kmeans(points[::-1], ids[::-1], 2)
        assert reordered.labels["a"] == 0

    def test_k_equals_n(self, two_blobs):
        points, ids = two_blobs
        assignment = kmeans(points, ids, 5)
        assert sorted(len(g) for g in assignment.groups()) == [1, 1, 1, 1, 1]

    def test_k_one(self, two_blobs):
        points, ids = two_blobs
        assignment = kmeans(points, ids, 1)
        assert assignment.groups() == [ids]
        np.testing.assert_allclose(assignment.centroids[0], points.mean(axis=0))

    def test_k_too_large(self, two_blobs):
        points, ids = two_blobs
        with pytest.raises(KTooLarge):
            kmeans(points, ids, 6)

    def test_k_zero(self, two_blobs):
        points, ids = two_blobs
        with pytest.raises(UsageError):
            kmeans(points, ids, 0)

    def test_seed_breaks_initial_ties(self):
        """b and c are equally far from a; every seed still gives a valid split."""
        points = np.array([[0.0, 0.0], [1.0, 0.0], [-1.0, 0.0]])
        for seed in range(5):
            first = kmeans(points, ["a", "b", "c"], 2, seed=seed)
            again = kmeans(points, ["a", "b", "c"], 2, seed=seed)
            assert first.labels == again.labels
            assert first.seed == seed
            assert len(first.members(1)) == 1

    def test_inertia_non_increasing(self, two_blobs):
        points, ids = two_blobs
        history = kmeans(points, ids, 2).inertia_history
        assert all(b <= a + 1e-12 for a, b in zip(history, history[1:]))

    def test_final_inertia_matches_final_centroids(self, two_blobs):
        """The last history entry is measured against the returned centroids."""
        points, ids = two_blobs
        assignment = kmeans(points, ids, 2)
        labels = np.array([assignment.labels[i] for i in ids])
        expected = float(np.sum((points - assignment.centroids[labels]) ** 2))
        assert assignment.inertia_history[-1] == pytest.approx(expected, abs=1e-12)

    def test_lloyd_fixpoint(self):
        """Every point sits with its nearest centroid and every centroid is its members' mean."""
        rng = np.random.default_rng(5)
        points = rng.normal(size=(30, 2))
        ids = [f"p{i:02d}" for i in range(30)]
        assignment = kmeans(points, ids, 4)

        labels = np.array([assignment.labels[i] for i in ids])
        distances = np.sum((points[:, None, :] - assignment.centroids[None, :, :]) ** 2, axis=2)
        nearest = distances[np.arange(len(ids)), labels]
        assert np.all(nearest <= distances.min(axis=1) + 1e-12)
        for c in range(4):
            np.testing.assert_allclose(
                assignment.centroids[c], points[labels == c].mean(axis=0), atol=1e-12
            )



class TestClusterAssignment:
    """Invariants of the assignment record."""

    def test_empty_cluster_rejected(self):
        with pytest.raises(ValueError):
            ClusterAssignment(labels={"a": 0, "b": 0}, centroids=np.zeros((2, 2)))

    def test_members_sorted(self):
        assignment = ClusterAssignment(
            labels={"z": 0, "a": 0, "m": 1}, centroids=np.zeros((2, 2))
        )
        assert assignment.k == 2
        assert assignment.members(0) == ["a", "z"]


class TestCampaignClusters:
    """Grouping of the bundled campaign at k=3."""

    def test_three_groups(self, result):
        """The largest account stands alone and the TikTok trio groups together."""
        assignment = cluster_scores(result, 3, seed=7)
        groups = sorted(assignment.groups(), key=len)
        assert groups[0] == ["vina"]
        assert groups[1] == ["chornella", "fayza", "felicia"]
        assert groups[2] == ["dewi", "lolita", "melvin", "morgan", "samuel", "sigi"]

    def test_deterministic(self, result):
        first = cluster_scores(result, 3, seed=7)
        second = cluster_scores(result, 3, seed=7)
        assert first.labels == second.labels
        assert first.inertia_history == second.inertia_history

    def test_biplot_points(self, result):
        assignment = cluster_scores(result, 3, seed=7)
        rows = biplot_points(result, assignment)
        assert [r[0] for r in rows] == list(result.kol_ids)
        kol_id, pc1, pc2, cluster = rows[0]
        assert pc1 == pytest.approx(float(result.scores[0, 0]))
        assert pc2 == pytest.approx(float(result.scores[0, 1]))
        assert cluster == assignment.labels[kol_id]
