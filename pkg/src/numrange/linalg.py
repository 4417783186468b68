"""Dense complex linear algebra kernel.

Hermitian eigendecomposition, partial-pivot LU solves and singular values
for small dense matrices (up to a few hundred rows).  All operations are
pure: inputs are never mutated and results depend only on the inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonHermitianError, NonSquareError, SingularMatrixError

# Relative tolerance for accepting a matrix as Hermitian.
HERMITIAN_TOL = 1e-12
# Relative pivot threshold below which a solve reports singularity.
PIVOT_THRESHOLD = 1e-12


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a 2-D complex array with finite entries."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or min(m.shape) < 1:
        raise ValueError(f"expected a matrix, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise ValueError("matrix entries must be finite")
    return m


def as_square(a) -> np.ndarray:
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise NonSquareError(f"expected a square matrix, got shape {m.shape}")
    return m


def norm_inf(a) -> float:
    """Induced infinity norm (maximum absolute row sum)."""
    m = np.atleast_2d(np.asarray(a, dtype=np.complex128))
    if m.size == 0:
        return 0.0
    return float(np.abs(m).sum(axis=1).max())


@dataclass(frozen=True)
class HermitianEig:
    """Eigenvalues in ascending order, unit eigenvectors as columns."""

    values: np.ndarray
    vectors: np.ndarray


def hermitian_eig(h) -> HermitianEig:
    """Full spectrum of a Hermitian matrix.

    The input must be Hermitian up to ``HERMITIAN_TOL`` relative to its
    infinity norm.  It is symmetrized before factorization, which keeps the
    residual ``H v - w v`` below 1e-10 * ||H|| for every eigenpair.

    Raises
    ------
    NonSquareError, NonHermitianError
    """
    m = as_square(h)
    if norm_inf(m - m.conj().T) > HERMITIAN_TOL * norm_inf(m):
        raise NonHermitianError("matrix is not Hermitian within tolerance")
    w, v = np.linalg.eigh(0.5 * (m + m.conj().T))
    return HermitianEig(values=w, vectors=v)


def _lu(a: np.ndarray, threshold: float | None):
    """Partial-pivot LU.  Returns (packed LU, permutation, swaps, zero flag).

    With ``threshold=None`` an exactly zero pivot sets the zero flag and
    stops (the determinant is then zero); otherwise pivots at or below
    ``threshold`` times the largest entry of ``a`` raise.
    """
    lu = a.copy()
    n = lu.shape[0]
    perm = np.arange(n)
    scale = float(np.abs(lu).max()) if lu.size else 0.0
    swaps = 0
    for k in range(n):
        p = k + int(np.argmax(np.abs(lu[k:, k])))
        piv = lu[p, k]
        if threshold is not None and abs(piv) <= threshold * scale:
            raise SingularMatrixError(
                f"pivot {abs(piv):.3e} at column {k} below threshold"
            )
        if threshold is None and piv == 0:
            return lu, perm, swaps, True
        if p != k:
            lu[[k, p]] = lu[[p, k]]
            perm[[k, p]] = perm[[p, k]]
            swaps += 1
        lu[k + 1 :, k] /= lu[k, k]
        lu[k + 1 :, k + 1 :] -= np.outer(lu[k + 1 :, k], lu[k, k + 1 :])
    return lu, perm, swaps, False


def solve(a, b) -> np.ndarray:
    """Solve ``a @ x = b`` by partial-pivot LU.

    ``b`` may be a vector or a matrix of right-hand sides; the result has
    the matching shape.  Raises SingularMatrixError when a pivot falls
    below ``PIVOT_THRESHOLD`` relative to the largest entry of ``a``.
    """
    m = as_square(a)
    rhs = np.asarray(b, dtype=np.complex128)
    vector = rhs.ndim == 1
    x = rhs[:, None] if vector else rhs
    if x.ndim != 2 or x.shape[0] != m.shape[0]:
        raise ValueError(f"shape mismatch: {m.shape} vs {rhs.shape}")
    lu, perm, _, _ = _lu(m, PIVOT_THRESHOLD)
    x = x[perm].astype(np.complex128)
    n = m.shape[0]
    for k in range(n):
        x[k + 1 :] -= np.outer(lu[k + 1 :, k], x[k])
    for k in range(n - 1, -1, -1):
        x[k] /= lu[k, k]
        x[:k] -= np.outer(lu[:k, k], x[k])
    return x[:, 0] if vector else x


def rdiv(a, b) -> np.ndarray:
    """Right division ``a @ inv(b)``."""
    return solve(as_square(b).T, as_matrix(a).T).T


def inverse(a) -> np.ndarray:
    m = as_square(a)
    return solve(m, np.eye(m.shape[0], dtype=np.complex128))


def determinant(a) -> complex:
    """Determinant via LU.  Exact zero pivots return 0 instead of raising."""
    m = as_square(a)
    lu, _, swaps, zero = _lu(m, None)
    if zero:
        return 0j
    det = complex(np.prod(np.diag(lu)))
    return -det if swaps % 2 else det


def singular_values(a) -> np.ndarray:
    """Singular values in descending order."""
    return np.linalg.svd(as_matrix(a), compute_uv=False)


def spectral_norm(a) -> float:
    return float(singular_values(a)[0])
