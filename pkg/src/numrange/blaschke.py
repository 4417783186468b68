"""Finite Blaschke products and their scalar circle functions.

Evaluation, the Poisson kernel, the Toeplitz symbol of the real part of a
single-zero model operator, and Taylor coefficients of the Takenaka
orthonormal basis with certified truncation tails.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    AlphaOutOfRangeError,
    IndexOutOfRangeError,
    TruncationInsufficientError,
)

# Slack allowed outside the closed unit disc when evaluating.
UNIT_DISC_TOL = 1e-9
# Default truncation targets rho_max**N below this value.
DEFAULT_COEFF_TARGET = 1e-14
MAX_TRUNCATION = 100_000


def _in_disc(alpha) -> complex:
    a = complex(alpha)
    if not (math.isfinite(a.real) and math.isfinite(a.imag)):
        raise AlphaOutOfRangeError("zero must be finite")
    if abs(a) >= 1.0:
        raise AlphaOutOfRangeError(
            f"zero must lie strictly inside the unit disc, got |alpha| = {abs(a)}"
        )
    return a


def _unit_interval(alpha) -> float:
    a = float(alpha)
    if not 0.0 <= a < 1.0:
        raise AlphaOutOfRangeError(f"expected a real parameter in [0, 1), got {alpha!r}")
    return a


@dataclass(frozen=True)
class BlaschkeProduct:
    """A finite Blaschke product given by its zeros inside the unit disc.

    ``factors`` is an ordered tuple of (zero, multiplicity) pairs.  The
    ordering matters: the spanned model space does not depend on it, but
    the Takenaka basis and the matrix of the compressed shift do.
    """

    factors: tuple[tuple[complex, int], ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a Blaschke product needs at least one zero")
        checked = []
        for zero, mult in self.factors:
            m = int(mult)
            if m < 1:
                raise ValueError(f"multiplicity must be positive, got {mult}")
            checked.append((_in_disc(zero), m))
        object.__setattr__(self, "factors", tuple(checked))

    @classmethod
    def single_zero(cls, alpha, n: int = 1) -> "BlaschkeProduct":
        return cls(((complex(alpha), int(n)),))

    @classmethod
    def monomial(cls, n: int) -> "BlaschkeProduct":
        """The product z**n."""
        return cls.single_zero(0.0, n)

    @classmethod
    def from_zeros(cls, zeros) -> "BlaschkeProduct":
        return cls(tuple((complex(z), 1) for z in zeros))

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.factors)

    def zeros(self) -> list[complex]:
        """Multiplicity-expanded zeros in declaration order."""
        out: list[complex] = []
        for zero, mult in self.factors:
            out.extend([zero] * mult)
        return out

    def max_zero_modulus(self) -> float:
        return max(abs(z) for z, _ in self.factors)

    def __mul__(self, other: "BlaschkeProduct") -> "BlaschkeProduct":
        return BlaschkeProduct(self.factors + other.factors)

    def __call__(self, z):
        return evaluate(self, z)


def evaluate(phi: BlaschkeProduct, z) -> complex:
    """Evaluate the product at a point of the closed unit disc.

    The result has modulus at most one inside the disc and modulus one on
    the circle.  Points further than ``UNIT_DISC_TOL`` outside the closed
    disc are rejected.
    """
    w = complex(z)
    if abs(w) > 1.0 + UNIT_DISC_TOL:
        raise ValueError(f"point must lie in the closed unit disc, got |z| = {abs(w)}")
    out = 1.0 + 0.0j
    for zero, mult in phi.factors:
        out *= ((w - zero) / (1.0 - zero.conjugate() * w)) ** mult
    return out


def poisson_kernel(alpha, t) -> float:
    """P_a(e^{it}) = (1 - a^2) / (1 - 2 a cos t + a^2) for real a in [0, 1)."""
    a = _unit_interval(alpha)
    return (1.0 - a * a) / (1.0 - 2.0 * a * math.cos(t) + a * a)


def real_part_symbol(alpha, t) -> float:
    """Toeplitz symbol of the real part of the single-zero model operator.

    h(t) = ((1 + a^2) cos t - 2 a) / (1 - 2 a cos t + a^2), the symbol for
    the zero placed at -a.  It reduces to cos t at a = 0 and is strictly
    decreasing on [0, pi].
    """
    a = _unit_interval(alpha)
    c = math.cos(t)
    return ((1.0 + a * a) * c - 2.0 * a) / (1.0 - 2.0 * a * c + a * a)


@dataclass(frozen=True)
class TaylorSeries:
    """Truncated Taylor coefficients with a certified tail bound.

    ``coeffs[m]`` is the coefficient of z**m.  ``truncation_error_bound``
    dominates the sum of the absolute values of all dropped coefficients.
    """

    coeffs: np.ndarray
    truncation_error_bound: float

    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.coeffs) ** 2))

    def inner(self, other: "TaylorSeries") -> complex:
        n = min(len(self.coeffs), len(other.coeffs))
        return complex(np.sum(self.coeffs[:n] * other.coeffs[:n].conj()))


def _kernel_series(alpha: complex, n_terms: int) -> np.ndarray:
    # (1 - |a|^2)^{1/2} / (1 - conj(a) z) as a geometric series
    sigma = math.sqrt(1.0 - abs(alpha) ** 2)
    return sigma * alpha.conjugate() ** np.arange(n_terms)


def _factor_series(alpha: complex, n_terms: int) -> np.ndarray:
    # (z - a) / (1 - conj(a) z): constant term -a, then geometric decay
    c = np.empty(n_terms, dtype=np.complex128)
    c[0] = -alpha
    if n_terms > 1:
        c[1:] = (1.0 - abs(alpha) ** 2) * alpha.conjugate() ** np.arange(n_terms - 1)
    return c


def _tail_bound(factor_zeros, kernel_zero: complex, n_terms: int) -> float:
    """Bound sum_{m >= n_terms} |c_m| for a Takenaka basis function.

    Each convolved series is dominated termwise by K * rho**m with rho the
    largest zero modulus involved; a product of q such majorants is
    dominated by binom(m+q-1, q-1) * prod(K) * rho**m, whose tail is summed
    by a geometric comparison.
    """
    zs = list(factor_zeros) + [kernel_zero]
    rho = max(abs(z) for z in zs)
    if rho == 0.0:
        # plain monomial basis: the series is exact once it holds the degree
        return 0.0 if n_terms >= len(zs) else 1.0
    q = len(zs)
    log_k = 0.5 * math.log(1.0 - abs(kernel_zero) ** 2)
    for z in factor_zeros:
        log_k += math.log(max(abs(z), (1.0 - abs(z) ** 2) / rho))
    growth = 1.0 + (q - 1) / (n_terms + 1.0)
    if growth * rho >= 1.0:
        return math.inf
    log_binom = (
        math.lgamma(n_terms + q) - math.lgamma(n_terms + 1) - math.lgamma(q)
    )
    log_bound = (
        log_k + log_binom + n_terms * math.log(rho) - math.log(1.0 - growth * rho)
    )
    return math.exp(min(log_bound, 700.0))


def default_truncation(phi: BlaschkeProduct) -> int:
    """Truncation order making rho_max**N smaller than 1e-14."""
    rho = phi.max_zero_modulus()
    if rho == 0.0:
        return phi.degree + 1
    if rho > 0.999:
        raise TruncationInsufficientError(
            f"zeros with modulus {rho} need more than {MAX_TRUNCATION} terms"
        )
    n = int(math.ceil(math.log(DEFAULT_COEFF_TARGET) / math.log(rho)))
    return max(n, phi.degree + 1, 8)


def takenaka_taylor(phi: BlaschkeProduct, k: int, n_terms: int | None = None) -> TaylorSeries:
    """Taylor coefficients of the k-th Takenaka basis function of H(phi).

    The basis function is the normalized reproducing kernel at the k-th
    (multiplicity-expanded) zero times the partial product of the first
    k-1 Blaschke factors.  Indexing is 1-based in k.

    Parameters
    ----------
    phi : BlaschkeProduct
    k : int
        Basis index, 1 <= k <= degree.
    n_terms : int, optional
        Number of retained coefficients; defaults to
        :func:`default_truncation`.

    Returns
    -------
    TaylorSeries
        Coefficients of z**0 .. z**(n_terms-1) plus a tail bound.
    """
    zeros = phi.zeros()
    if not 1 <= k <= len(zeros):
        raise IndexOutOfRangeError(f"basis index {k} outside 1..{len(zeros)}")
    if n_terms is None:
        n_terms = default_truncation(phi)
    n_terms = int(n_terms)
    if n_terms < 1:
        raise ValueError("n_terms must be positive")
    if n_terms > MAX_TRUNCATION:
        raise TruncationInsufficientError(f"truncation {n_terms} exceeds {MAX_TRUNCATION}")
    coeffs = _kernel_series(zeros[k - 1], n_terms)
    for z in zeros[: k - 1]:
        coeffs = np.convolve(coeffs, _factor_series(z, n_terms))[:n_terms]
    return TaylorSeries(coeffs, _tail_bound(zeros[: k - 1], zeros[k - 1], n_terms))
