"""Grouping influencers on the PC1/PC2 score plane with k-means."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import KTooLarge, UsageError
from .analysis import PcaResult
from .linalg import FloatMatrix

logger = logging.getLogger(__name__)

MAX_ITERATIONS = 100
TIE_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class ClusterAssignment:
    """k-means outcome.

    Attributes:
        labels: kol_id -> cluster index in [0, k)
        centroids: k x 2 centroid coordinates on the (PC1, PC2) plane
        seed: Tie-break seed used for initialization
        iterations: Lloyd iterations performed
        inertia_history: total within-cluster squared distance after each
            centroid update
    """

    labels: Dict[str, int]
    centroids: FloatMatrix
    seed: int = 0
    iterations: int = 0
    inertia_history: List[float] = field(default_factory=list)

    def __post_init__(self) -> None:
        """Every cluster index must be used."""
        k = self.centroids.shape[0]
        used = set(self.labels.values())
        if used != set(range(k)):
            raise ValueError(f"all {k} clusters must be non-empty, got {sorted(used)}")

    @property
    def k(self) -> int:
        return int(self.centroids.shape[0])

    def members(self, cluster: int) -> List[str]:
        """Ids assigned to ``cluster``, sorted."""
        return sorted(kol_id for kol_id, c in self.labels.items() if c == cluster)

    def groups(self) -> List[List[str]]:
        """Member lists for every cluster in index order."""
        return [self.members(c) for c in range(self.k)]


def _farthest_point_init(
    points: FloatMatrix, start: int, k: int, rng: np.random.Generator
) -> List[int]:
    chosen = [start]
    nearest = np.sum((points - points[start]) ** 2, axis=1)
    while len(chosen) < k:
        peak = float(np.max(nearest))
        candidates = [i for i in np.flatnonzero(nearest >= peak - TIE_TOL) if i not in chosen]
        if not candidates:
            candidates = [i for i in range(len(points)) if i not in chosen]
        pick = int(candidates[0]) if len(candidates) == 1 else int(rng.choice(candidates))
        chosen.append(pick)
        nearest = np.minimum(nearest, np.sum((points - points[pick]) ** 2, axis=1))
    return chosen


def _assign(points: FloatMatrix, centroids: FloatMatrix) -> np.ndarray:
    # argmin keeps the lowest cluster index on exact ties
    distances = np.sum((points[:, None, :] - centroids[None, :, :]) ** 2, axis=2)
    return np.argmin(distances, axis=1)


def kmeans(
    points: FloatMatrix,
    ids: Sequence[str],
    k: int,
    seed: int = 0,
    max_iterations: int = MAX_ITERATIONS,
) -> ClusterAssignment:
    """Lloyd's k-means with deterministic farthest-point initialization.

    The first centre is the point with the lowest id; each further centre is
    the point farthest from all centres chosen so far. The seed only breaks
    exact distance ties during initialization.

    Args:
        points: n x d coordinates
        ids: n point ids
        k: number of clusters (1 <= k <= n)
        seed: tie-break seed
        max_iterations: Lloyd iteration cap

    Returns:
        ClusterAssignment at an assignment fixpoint (or after the cap)

    Raises:
        UsageError: If k < 1
        KTooLarge: If k > n
    """
    x = np.asarray(points, dtype=np.float64)
    n = x.shape[0]
    if k < 1:
        raise UsageError(f"k must be at least 1, got {k}")
    if k > n:
        raise KTooLarge(k, n)

    rng = np.random.default_rng(seed)
    start = min(range(n), key=lambda i: ids[i])
    centres = _farthest_point_init(x, start, k, rng)
    centroids = x[centres].copy()

    labels: Optional[np.ndarray] = None
    history: List[float] = []
    iterations = 0
    for iterations in range(1, max_iterations + 1):
        new_labels = _assign(x, centroids)
        new_labels = _refill_empty(x, new_labels, centroids, k)
        if labels is not None and np.array_equal(labels, new_labels):
            break
        labels = new_labels
        centroids = np.array([x[labels == c].mean(axis=0) for c in range(k)])
        history.append(_inertia(x, labels, centroids))
    else:

        logger.warning("k-means stopped at the iteration cap (%d)", max_iterations)

    assert labels is not None
    logger.debug("k-means converged after %d iterations (k=%d, n=%d)", iterations, k, n)
    return ClusterAssignment(
        labels={ids[i]: int(labels[i]) for i in range(n)},
        centroids=centroids,
        seed=seed,
        iterations=iterations,
        inertia_history=history,
    )


def _inertia(points: FloatMatrix, labels: np.ndarray, centroids: FloatMatrix) -> float:
    return float(np.sum((points - centroids[labels]) ** 2))


def _refill_empty(
    points: FloatMatrix, labels: np.ndarray, centroids: FloatMatrix, k: int
) -> np.ndarray:
    # An emptied cluster takes the point farthest from its own centroid
    # among clusters that can spare one.
    labels = labels.copy()
    for c in range(k):
        if np.any(labels == c):
            continue
        counts = np.bincount(labels, minlength=k)
        spread = np.sum((points - centroids[labels]) ** 2, axis=1)
        spread[counts[labels] <= 1] = -1.0
        donor = int(np.argmax(spread))
        labels[donor] = c
    return labels


def cluster_scores(result: PcaResult, k: int, seed: int = 0) -> ClusterAssignment:
    """k-means on the (PC1, PC2) score plane of a PCA result."""
    plane = result.scores[:, :2]
    assignment = kmeans(plane, result.kol_ids, k, seed)
    logger.info("clustered %d influencers into %d groups", len(result.kol_ids), k)
    return assignment


def biplot_points(
    result: PcaResult, assignment: ClusterAssignment
) -> List[Tuple[str, float, float, int]]:
    """(kol_id, PC1, PC2, cluster) rows in PCA row order."""
    return [
        (
            kol_id,
            float(result.scores[i, 0]),
            float(result.scores[i, 1]),
            assignment.labels[kol_id],
        )
        for i, kol_id in enumerate(result.kol_ids)
    ]
