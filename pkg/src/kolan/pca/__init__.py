"""Principal component analysis and k-means grouping of influencers."""

from .analysis import (
    FEATURE_NAMES,
    FeatureVector,
    PcaResult,
    encode_features,
    feature_matrix,
    loading_vectors,
    pca_from_matrix,
    published_loadings,
    run_pca,
)
from .clustering import ClusterAssignment, biplot_points, cluster_scores, kmeans
from .linalg import canonicalize_signs, eigen_sym, standardize

__all__ = [
    "FEATURE_NAMES",
    "ClusterAssignment",
    "FeatureVector",
    "PcaResult",
    "biplot_points",
    "canonicalize_signs",
    "cluster_scores",
    "eigen_sym",
    "encode_features",
    "feature_matrix",
    "kmeans",
    "loading_vectors",
    "pca_from_matrix",
    "published_loadings",
    "run_pca",
    "standardize",
]
