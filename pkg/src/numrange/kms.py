"""Symmetric Toeplitz matrices with geometric entries (the classical
Kac-Murdock-Szego family), the trigonometric root system that
parameterizes their spectrum, and the spectrum of the real part of the
single-zero model operator."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .blaschke import _unit_interval, poisson_kernel, real_part_symbol
from .errors import BracketFailureError, TOutOfRangeError

BISECTION_WIDTH = 1e-13
PARITY_RESIDUAL_TOL = 1e-11
EQUATION_RESIDUAL_TOL = 1e-9


def kms_matrix(alpha, n: int) -> np.ndarray:
    """The n x n symmetric Toeplitz matrix with entries alpha**|r - s|."""
    a = _unit_interval(alpha)
    n = int(n)
    if n < 1:
        raise ValueError("dimension must be positive")
    idx = np.arange(n)
    return a ** np.abs(idx[:, None] - idx[None, :]).astype(float)


def eigenvalue_equation(alpha, n: int, t: float) -> float:
    """The degree-n polynomial in cos t whose roots locate the spectrum.

    p_n(cos t) = (sin (n+1)t - 2 a sin nt + a^2 sin (n-1)t) / sin t,
    defined for t in the open interval (0, pi).
    """
    a = _unit_interval(alpha)
    t = float(t)
    if not 0.0 < t < math.pi:
        raise TOutOfRangeError(f"t must lie in (0, pi), got {t}")
    n = int(n)
    return (
        math.sin((n + 1) * t) - 2.0 * a * math.sin(n * t) + a * a * math.sin((n - 1) * t)
    ) / math.sin(t)


def parity_equation(alpha, n: int, k: int, t: float) -> float:
    """Half-angle factor of the eigenvalue equation selected by parity of k.

    Odd k roots solve  cos((n+1)t/2) - a cos((n-1)t/2) = 0,
    even k roots solve sin((n+1)t/2) - a sin((n-1)t/2) = 0.
    """
    a = _unit_interval(alpha)
    half_hi = 0.5 * (n + 1) * t
    half_lo = 0.5 * (n - 1) * t
    if k % 2:
        return math.cos(half_hi) - a * math.cos(half_lo)
    return math.sin(half_hi) - a * math.sin(half_lo)


def solve_root(alpha, n: int, k: int) -> float:
    """The k-th root t_k of the eigenvalue equation, 1-based.

    Each root is bracketed strictly between consecutive grid points
    x_{k-1} and x_k with x_j = j pi / (n+1), and located by bisection on
    the parity-selected half-angle equation, which changes sign across
    that interval for alpha in (0, 1).  At alpha = 0 the root is exactly
    x_k.  Bisection runs until the bracket is narrower than
    ``BISECTION_WIDTH``; the parity residual is verified afterwards.
    """
    a = _unit_interval(alpha)
    n = int(n)
    k = int(k)
    if not 1 <= k <= n:
        raise ValueError(f"root index {k} outside 1..{n}")
    hi = k * math.pi / (n + 1)
    if a == 0.0:
        return hi
    lo = (k - 1) * math.pi / (n + 1)
    f_lo = parity_equation(a, n, k, lo)
    f_hi = parity_equation(a, n, k, hi)
    if f_hi == 0.0:
        return hi
    if f_lo == 0.0 or (f_lo > 0.0) == (f_hi > 0.0):
        raise BracketFailureError(
            f"no sign change on ({lo}, {hi}] for alpha={a}, n={n}, k={k}"
        )
    while hi - lo > BISECTION_WIDTH:
        mid = 0.5 * (lo + hi)
        f_mid = parity_equation(a, n, k, mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    t = 0.5 * (lo + hi)
    if abs(parity_equation(a, n, k, t)) > PARITY_RESIDUAL_TOL:
        raise BracketFailureError(f"parity residual too large at t={t}")
    if abs(eigenvalue_equation(a, n, t)) > EQUATION_RESIDUAL_TOL:
        raise BracketFailureError(f"eigenvalue equation residual too large at t={t}")
    return t


@dataclass(frozen=True)
class KmsRootSystem:
    """Roots t_1 < ... < t_n in (0, pi) with their bracketing intervals."""

    alpha: float
    n: int
    roots: np.ndarray
    brackets: np.ndarray


def kms_root_system(alpha, n: int) -> KmsRootSystem:
    a = _unit_interval(alpha)
    n = int(n)
    grid = np.arange(n + 1) * math.pi / (n + 1)
    roots = np.array([solve_root(a, n, k) for k in range(1, n + 1)])
    brackets = np.column_stack([grid[:-1], grid[1:]])
    return KmsRootSystem(alpha=a, n=n, roots=roots, brackets=brackets)


def kms_eigenvalues(alpha, n: int) -> np.ndarray:
    """Spectrum of :func:`kms_matrix` in descending order.

    The eigenvalues are the Poisson kernel evaluated at the roots of the
    eigenvalue equation; they lie strictly between (1-a)/(1+a) and
    (1+a)/(1-a) and decrease as the root index grows.
    """
    a = _unit_interval(alpha)
    roots = kms_root_system(a, n).roots
    return np.array([poisson_kernel(a, t) for t in roots])


def real_part_spectrum(alpha, n: int) -> np.ndarray:
    """Spectrum of Re(M) in descending order, M the model operator with
    single zero -alpha.

    Values are the real-part symbol evaluated at the roots; at alpha = 0
    this reduces to cos(k pi / (n+1)).  The largest magnitude is attained
    by the last (most negative) value, which equals minus the numerical
    radius of Re(M).
    """
    a = _unit_interval(alpha)
    roots = kms_root_system(a, n).roots
    return np.array([real_part_symbol(a, t) for t in roots])
