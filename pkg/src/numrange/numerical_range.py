"""Support function, boundary parametrization and numerical radius of the
numerical range W(T) of a square complex matrix."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg

DEFAULT_RADIUS_GRID = 256
DEFAULT_BOUNDARY_GRID = 2048
DEFAULT_REFINE_TOL = 1e-12
MIN_RADIUS_GRID = 64
MIN_BOUNDARY_GRID = 8
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def rotated_real_part(t, theta: float) -> np.ndarray:
    """Re(e^{-i theta} T), Hermitian by construction."""
    m = linalg.as_square(t)
    w = complex(math.cos(theta), -math.sin(theta))
    return 0.5 * (w * m + (w * m).conj().T)


def _real_part_eigenvalues(m: np.ndarray, theta: float) -> np.ndarray:
    w = complex(math.cos(theta), -math.sin(theta))
    return np.linalg.eigvalsh(0.5 * (w * m + (w * m).conj().T))


def support_function(t, theta: float) -> float:
    """Largest eigenvalue of Re(e^{-i theta} T): the signed distance from
    the origin to the supporting line of W(T) with outward direction theta."""
    return float(_real_part_eigenvalues(linalg.as_square(t), theta)[-1])


@dataclass(frozen=True)
class BoundarySample:
    """Boundary of W(T) parametrized by the supporting-line angle.

    ``points[i]`` is (x, y) at ``thetas[i]``; the chord identity
    x cos(theta) + y sin(theta) = support holds at every grid point by
    construction.  ``lambda_prime`` holds central-difference derivatives
    of the support function.
    """

    thetas: np.ndarray
    support: np.ndarray
    lambda_prime: np.ndarray
    points: np.ndarray

    def points_complex(self) -> np.ndarray:
        return self.points[:, 0] + 1j * self.points[:, 1]

    def radii(self) -> np.ndarray:
        return np.hypot(self.points[:, 0], self.points[:, 1])


def boundary(t, grid_size: int = DEFAULT_BOUNDARY_GRID) -> BoundarySample:
    """Sample the boundary of W(T) on a uniform angle grid.

    Boundary points come from the envelope of supporting lines,
    x = s cos(theta) - s' sin(theta), y = s sin(theta) + s' cos(theta),
    with s' obtained by periodic central differences (O(h^2) accurate; the
    support function is differentiable for the rank-one-defect class this
    package targets).  Corner points of degenerate ranges, such as those
    of normal matrices, are still emitted but s' is only a subgradient
    there.
    """
    m = linalg.as_square(t)
    grid_size = int(grid_size)
    if grid_size < MIN_BOUNDARY_GRID:
        raise ValueError(f"grid_size must be at least {MIN_BOUNDARY_GRID}")
    thetas = 2.0 * math.pi * np.arange(grid_size) / grid_size
    support = np.array([_real_part_eigenvalues(m, th)[-1] for th in thetas])
    h = 2.0 * math.pi / grid_size
    lam_p = (np.roll(support, -1) - np.roll(support, 1)) / (2.0 * h)
    cos_t, sin_t = np.cos(thetas), np.sin(thetas)
    x = support * cos_t - lam_p * sin_t
    y = support * sin_t + lam_p * cos_t
    return BoundarySample(
        thetas=thetas,
        support=support,
        lambda_prime=lam_p,
        points=np.column_stack([x, y]),
    )


def _golden_max(f, a: float, b: float, tol: float) -> float:
    x1 = b - _GOLDEN * (b - a)
    x2 = a + _GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    best = max(f1, f2)
    while b - a > tol:
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = f(x1)
        best = max(best, f1, f2)
    return best


def _grid_refine_max(f, grid_size: int, refine_tol: float) -> float:
    thetas = 2.0 * math.pi * np.arange(grid_size) / grid_size
    vals = np.array([f(th) for th in thetas])
    k = int(np.argmax(vals))
    h = 2.0 * math.pi / grid_size
    refined = _golden_max(f, thetas[k] - h, thetas[k] + h, refine_tol)
    return max(float(vals[k]), refined)


def numerical_radius(
    t,
    grid_size: int = DEFAULT_RADIUS_GRID,
    refine_tol: float = DEFAULT_REFINE_TOL,
) -> float:
    """Numerical radius of T.

    Maximizes the spectral norm of Re(e^{-i theta} T) over the angle: a
    coarse uniform grid locates the best cell and golden-section search
    refines it to ``refine_tol`` in theta.  The result is never below the
    grid maximum.

    Parameters
    ----------
    t : array_like
        Square complex matrix.
    grid_size : int
        Number of coarse angles, at least ``MIN_RADIUS_GRID``.
    refine_tol : float
        Final bracket width of the golden-section refinement.
    """
    m = linalg.as_square(t)
    grid_size = int(grid_size)
    if grid_size < MIN_RADIUS_GRID:
        raise ValueError(f"grid_size must be at least {MIN_RADIUS_GRID}")

    def norm_at(theta: float) -> float:
        w = _real_part_eigenvalues(m, theta)
        return max(abs(float(w[0])), abs(float(w[-1])))

    return _grid_refine_max(norm_at, grid_size, refine_tol)


def numerical_radius_support(
    t,
    grid_size: int = DEFAULT_RADIUS_GRID,
    refine_tol: float = DEFAULT_REFINE_TOL,
) -> float:
    """Numerical radius through the support function alone.

    Maximizes the largest eigenvalue of Re(e^{-i theta} T); this agrees
    with :func:`numerical_radius` whenever the supremum is attained with a
    positive support value, in particular on the rank-one-defect class.
    """
    m = linalg.as_square(t)
    grid_size = int(grid_size)
    if grid_size < MIN_RADIUS_GRID:
        raise ValueError(f"grid_size must be at least {MIN_RADIUS_GRID}")

    def top_at(theta: float) -> float:
        return float(_real_part_eigenvalues(m, theta)[-1])

    return _grid_refine_max(top_at, grid_size, refine_tol)
