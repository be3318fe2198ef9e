"""Dense linear algebra for the PCA pipeline.

The symmetric eigensolver is a cyclic Jacobi rotation method. At the matrix
sizes this package works with (six features) it converges in a handful of
sweeps and yields eigenvectors orthonormal to machine precision.
"""

import logging
from typing import Optional, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

from ..errors import NoConvergence, NotSymmetric, ZeroVariance

logger = logging.getLogger(__name__)

SYMMETRY_TOL = 1e-12
OFF_DIAGONAL_TOL = 1e-12
MAX_SWEEPS = 100
SIGN_TIE_TOL = 1e-12

FloatMatrix = NDArray[np.float64]


def standardize(matrix: FloatMatrix, names: Optional[Sequence[str]] = None) -> FloatMatrix:
    """Z-score every column using the sample standard deviation.

    Args:
        matrix: n x p array with n >= 2
        names: Optional column names used in error messages

    Returns:
        New n x p array whose columns have mean 0 and sample sd 1

    Raises:
        ValueError: If the array is not 2-D or has fewer than 2 rows
        ZeroVariance: If a column is constant
    """
    x = np.asarray(matrix, dtype=np.float64)
    if x.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {x.shape}")
    n, p = x.shape
    if n < 2:
        raise ValueError(f"standardize requires at least 2 rows, got {n}")

    mean = x.mean(axis=0)
    centered = x - mean
    sd = centered.std(axis=0, ddof=1)

    for j in range(p):
        scale = max(1.0, float(np.max(np.abs(x[:, j]))))
        if not sd[j] > 1e-12 * scale:
            column = names[j] if names is not None else f"column {j}"
            raise ZeroVariance(column)

    z: FloatMatrix = centered / sd
    # second centering pass removes the rounding residue of the first
    z = z - z.mean(axis=0)
    return z


def _off_diagonal_norm(a: FloatMatrix) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def eigen_sym(
    matrix: FloatMatrix, max_sweeps: int = MAX_SWEEPS
) -> Tuple[NDArray[np.float64], FloatMatrix]:
    """Eigen-decompose a real symmetric matrix with cyclic Jacobi rotations.

    Args:
        matrix: p x p symmetric array
        max_sweeps: Sweep cap before NoConvergence is raised

    Returns:
        Tuple of (eigenvalues sorted descending, eigenvectors as columns in
        the same order)

    Raises:
        NotSymmetric: If the matrix is not square or not symmetric within 1e-12
        NoConvergence: If off-diagonal mass is still above threshold after
            ``max_sweeps`` sweeps
    """
    a = np.array(matrix, dtype=np.float64, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {a.shape}")

    size = a.shape[0]
    norm = max(1.0, float(np.max(np.abs(a)))) if size else 1.0
    asymmetry = float(np.max(np.abs(a - a.T))) if size else 0.0
    if asymmetry > SYMMETRY_TOL * norm:
        raise NotSymmetric(f"matrix is not symmetric (max |A - A^T| = {asymmetry:.3e})")
    a = (a + a.T) / 2.0

    v = np.eye(size)
    threshold = OFF_DIAGONAL_TOL * max(1.0, float(np.linalg.norm(a)))

    sweeps = 0
    while _off_diagonal_norm(a) > threshold:
        if sweeps >= max_sweeps:
            raise NoConvergence(f"Jacobi eigensolver did not converge in {max_sweeps} sweeps")
        sweeps += 1
        for p in range(size - 1):
            for q in range(p + 1, size):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.hypot(theta, 1.0))
                c = 1.0 / np.hypot(t, 1.0)
                s = t * c

                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q

                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q

                a[p, q] = 0.0
                a[q, p] = 0.0

                vec_p = v[:, p].copy()
                vec_q = v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q

    logger.debug("Jacobi eigensolver converged after %d sweeps (p=%d)", sweeps, size)

    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    return values[order], v[:, order]


def canonicalize_signs(vectors: FloatMatrix) -> FloatMatrix:
    """Flip eigenvector columns so each column's largest-magnitude entry is positive.

    Entries within 1e-12 of the column maximum count as ties; the earliest
    such entry decides the sign.

    Args:
        vectors: p x m array of column vectors

    Returns:
        New array with canonical column signs
    """
    out = np.array(vectors, dtype=np.float64, copy=True)
    for j in range(out.shape[1]):
        magnitudes = np.abs(out[:, j])
        peak = float(np.max(magnitudes)) if magnitudes.size else 0.0
        if peak == 0.0:
            continue
        lead = int(np.flatnonzero(magnitudes >= peak - SIGN_TIE_TOL)[0])
        if out[lead, j] < 0:
            out[:, j] = -out[:, j]
    return out
