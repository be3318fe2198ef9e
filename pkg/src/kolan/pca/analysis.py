"""Principal component analysis of influencer characteristics.

Six variables describe each influencer: audience type, content theme,
follower count, post count, campaign post type and average likes per post.
They mix 0/1 codes with counts in the hundreds of thousands, so the analysis
runs on the correlation matrix (standardized inputs); covariance PCA would be
dominated by the follower count.
"""

import csv
import io
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

from ..bundled import PUBLISHED_LOADINGS, bundled_path
from ..errors import InputIOError, NoConvergence, ParseError, ValidationError
from ..model.profiles import Audience, ContentFormat, Dataset, KolProfile, Theme
from .linalg import FloatMatrix, canonicalize_signs, eigen_sym, standardize

logger = logging.getLogger(__name__)

FEATURE_NAMES: Tuple[str, ...] = (
    "audiens",
    "theme",
    "jml_fol",
    "jml_post",
    "post_type",
    "avg_like_post",
)

EIGENVALUE_CLAMP = 1e-10
ORTHONORMAL_TOL = 1e-8
RATIO_SUM_TOL = 1e-10


@dataclass(frozen=True)
class FeatureVector:
    """Numeric encoding of one influencer.

    Categorical codes: audiens Young=0 / VeryYoung=1, theme Finance=0 /
    General=1, post_type Image=0 / Video=1.
    """

    audiens: float
    theme: float
    jml_fol: float
    jml_post: float
    post_type: float
    avg_like_post: float

    def __post_init__(self) -> None:
        """Validate codes and finiteness."""
        for name in ("audiens", "theme", "post_type"):
            if getattr(self, name) not in (0.0, 1.0):
                raise ValueError(f"{name} must be coded 0 or 1, got {getattr(self, name)}")
        if not all(np.isfinite(self.as_tuple())):
            raise ValueError("feature values must be finite")

    def as_tuple(self) -> Tuple[float, ...]:
        return (
            self.audiens,
            self.theme,
            self.jml_fol,
            self.jml_post,
            self.post_type,
            self.avg_like_post,
        )


def encode_features(profile: KolProfile) -> FeatureVector:
    """Encode a profile into the six PCA variables."""
    return FeatureVector(
        audiens=1.0 if profile.audience is Audience.VERY_YOUNG else 0.0,
        theme=1.0 if profile.theme is Theme.GENERAL else 0.0,
        jml_fol=float(profile.follower_count),
        jml_post=float(profile.post_count),
        post_type=1.0 if profile.campaign_format is ContentFormat.VIDEO else 0.0,
        avg_like_post=float(profile.avg_likes_per_post),
    )


def feature_matrix(dataset: Dataset) -> Tuple[List[str], FloatMatrix]:
    """Encode every profile, rows in dataset order.

    Returns:
        Tuple of (profile ids, n x 6 feature matrix)
    """
    rows = [encode_features(p).as_tuple() for p in dataset.profiles]
    return dataset.ids, np.array(rows, dtype=np.float64)


@dataclass(frozen=True, eq=False)
class PcaResult:
    """Outcome of a correlation-matrix PCA.

    Attributes:
        loadings: p x p matrix, column j is principal component j+1
        eigenvalues: p eigenvalues, descending
        explained_ratio: share of total variance per component
        scores: n x p projected coordinates (standardized @ loadings)
        feature_names: names of the loadings rows
        kol_ids: ids of the score rows
        standardized: the n x p standardized input
    """

    loadings: FloatMatrix
    eigenvalues: NDArray[np.float64]
    explained_ratio: NDArray[np.float64]
    scores: FloatMatrix
    feature_names: Tuple[str, ...]
    kol_ids: Tuple[str, ...]
    standardized: FloatMatrix

    def __post_init__(self) -> None:
        """Validate the decomposition invariants."""
        p = len(self.feature_names)
        if self.loadings.shape != (p, p):
            raise ValueError(f"loadings must be {p}x{p}, got {self.loadings.shape}")
        if self.scores.shape != (len(self.kol_ids), p):
            raise ValueError(f"scores must be {len(self.kol_ids)}x{p}, got {self.scores.shape}")

        gram_error = float(np.max(np.abs(self.loadings.T @ self.loadings - np.eye(p))))
        if gram_error > ORTHONORMAL_TOL:
            raise NoConvergence(f"loadings are not orthonormal (error {gram_error:.3e})")
        if np.any(np.diff(self.eigenvalues) > 0):
            raise NoConvergence("eigenvalues must be sorted descending")
        if np.any(self.eigenvalues < 0):
            raise NoConvergence("eigenvalues must be non-negative after clamping")
        if abs(float(np.sum(self.explained_ratio)) - 1.0) > RATIO_SUM_TOL:
            raise NoConvergence("explained ratios must sum to 1")

    @property
    def component_names(self) -> List[str]:
        return [f"PC{i + 1}" for i in range(len(self.feature_names))]

    def reconstruct(self) -> FloatMatrix:
        """Standardized input recovered from scores and loadings."""
        result: FloatMatrix = self.scores @ self.loadings.T
        return result


def pca_from_matrix(
    matrix: FloatMatrix,
    feature_names: Sequence[str],
    kol_ids: Optional[Sequence[str]] = None,
) -> PcaResult:
    """Correlation-matrix PCA of an arbitrary n x p matrix.

    Args:
        matrix: n x p raw feature matrix (n >= 2)
        feature_names: p column names
        kol_ids: optional n row ids (defaults to "0".."n-1")

    Returns:
        PcaResult with sign-canonical loadings

    Raises:
        ValidationError: If fewer than 2 rows are given
        ZeroVariance: If a column is constant
        NoConvergence: If the eigensolver fails
    """
    x = np.asarray(matrix, dtype=np.float64)
    n = x.shape[0]
    if n < 2:
        raise ValidationError("dataset", f"PCA requires at least 2 profiles, got {n}")
    ids = tuple(kol_ids) if kol_ids is not None else tuple(str(i) for i in range(n))

    z = standardize(x, feature_names)
    correlation = (z.T @ z) / (n - 1)
    correlation = (correlation + correlation.T) / 2.0

    eigenvalues, vectors = eigen_sym(correlation)
    eigenvalues = np.where(
        (eigenvalues < 0) & (eigenvalues >= -EIGENVALUE_CLAMP), 0.0, eigenvalues
    )
    if np.any(eigenvalues < 0):
        raise NoConvergence(
            f"correlation matrix has a negative eigenvalue {float(np.min(eigenvalues)):.3e}"
        )
    loadings = canonicalize_signs(vectors)
    scores = z @ loadings
    explained = eigenvalues / np.sum(eigenvalues)

    logger.info(
        "PCA on %d rows x %d features; PC1+PC2 explain %.1f%%",
        n,
        len(feature_names),
        100.0 * float(np.sum(explained[:2])),
    )
    return PcaResult(
        loadings=loadings,
        eigenvalues=eigenvalues,
        explained_ratio=explained,
        scores=scores,
        feature_names=tuple(feature_names),
        kol_ids=ids,
        standardized=z,
    )


def run_pca(dataset: Dataset) -> PcaResult:
    """Run the six-variable PCA over every profile in the dataset."""
    ids, x = feature_matrix(dataset)
    return pca_from_matrix(x, FEATURE_NAMES, ids)


def loading_vectors(result: PcaResult) -> List[Tuple[str, float, float]]:
    """(feature, PC1 loading, PC2 loading) rows for biplot arrows."""
    second = 1 if result.loadings.shape[1] > 1 else 0
    return [
        (name, float(result.loadings[i, 0]), float(result.loadings[i, second]))
        for i, name in enumerate(result.feature_names)
    ]


def published_loadings(path: Optional[str] = None) -> Tuple[List[str], FloatMatrix]:
    """Load the published 6 x 6 loadings table.

    Args:
        path: CSV path; defaults to the bundled copy

    Returns:
        Tuple of (feature names, loadings matrix)
    """
    source = path or bundled_path(PUBLISHED_LOADINGS)
    try:
        with open(source, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as e:
        raise InputIOError(source, str(e)) from e

    reader = csv.reader(io.StringIO(text))
    next(reader, None)
    names: List[str] = []
    rows: List[List[float]] = []
    for record in reader:
        if not record:
            continue
        try:
            rows.append([float(cell) for cell in record[1:]])
        except ValueError as e:
            raise ParseError(reader.line_num, record[0], str(e)) from e
        names.append(record[0])
    return names, np.array(rows, dtype=np.float64)
