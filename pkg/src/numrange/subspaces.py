"""Principal angles between model spaces of Blaschke products.

Computes cross-Gram matrices of Takenaka bases through certified Taylor
truncations, the smallest principal angle between two model spaces, the
zero-separation lower bound on its sine, and the resulting numerical
radius estimate for products whose factors have well-separated zeros.

The angle is taken to be the smallest principal angle: its cosine (the
top singular value of the cross-Gram of orthonormal bases) is exactly the
constant bounding normalized cross inner products, which is what the
radius estimate consumes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import linalg
from .blaschke import BlaschkeProduct, takenaka_taylor
from .errors import (
    CommonZeroError,
    DuplicateZeroError,
    NotSingleZeroError,
    TruncationInsufficientError,
)
from .radius import radius_single_zero

GRAM_TAIL_TARGET = 1e-10
COMMON_ZERO_TOL = 1e-12


def _basis_matrix(phi: BlaschkeProduct, n_terms: int) -> tuple[np.ndarray, float]:
    rows = [takenaka_taylor(phi, k, n_terms) for k in range(1, phi.degree + 1)]
    coeffs = np.vstack([r.coeffs for r in rows])
    return coeffs, max(r.truncation_error_bound for r in rows)


def _auto_truncation(phi1: BlaschkeProduct, phi2: BlaschkeProduct) -> int:
    from .blaschke import MAX_TRUNCATION, _tail_bound

    n_terms = 32
    while n_terms <= MAX_TRUNCATION:
        worst = 0.0
        for phi in (phi1, phi2):
            zeros = phi.zeros()
            worst = max(
                worst,
                max(
                    _tail_bound(zeros[: k - 1], zeros[k - 1], n_terms)
                    for k in range(1, len(zeros) + 1)
                ),
            )
        if worst < GRAM_TAIL_TARGET:
            return n_terms
        n_terms *= 2
    raise TruncationInsufficientError(
        f"cannot reach tail target {GRAM_TAIL_TARGET} within {MAX_TRUNCATION} terms"
    )


def cross_gram(
    phi1: BlaschkeProduct, phi2: BlaschkeProduct, n_terms: int | None = None
) -> np.ndarray:
    """Matrix of inner products between the two Takenaka bases.

    Entry (k, l) is the Hardy-space inner product of the k-th basis
    function of H(phi1) with the l-th of H(phi2), computed from truncated
    Taylor coefficients.  The truncation is auto-sized (or checked, when
    given) so every basis tail bound stays below ``GRAM_TAIL_TARGET``.
    """
    if n_terms is None:
        n_terms = _auto_truncation(phi1, phi2)
    c1, tail1 = _basis_matrix(phi1, int(n_terms))
    c2, tail2 = _basis_matrix(phi2, int(n_terms))
    if max(tail1, tail2) >= GRAM_TAIL_TARGET:
        raise TruncationInsufficientError(
            f"truncation {n_terms} leaves tail {max(tail1, tail2):.3e}"
        )
    return c1 @ c2.conj().T


@dataclass(frozen=True)
class AngleReport:
    """Smallest principal angle between two model spaces.

    ``sin_lower_bound`` carries the zero-separation bound when both inputs
    have a single distinct zero, else 0.  ``truncation`` is the number of
    Taylor terms used for the Gram matrix.
    """

    cos_angle: float
    sin_angle: float
    sin_lower_bound: float
    truncation: int


def subspace_cos_angle(
    phi1: BlaschkeProduct, phi2: BlaschkeProduct, n_terms: int | None = None
) -> AngleReport:
    """Angle between the model spaces of two Blaschke products.

    The cosine is the top singular value of :func:`cross_gram`, clamped to
    [0, 1].  Products sharing a zero have intersecting model spaces and
    raise CommonZeroError.
    """
    for z1, _ in phi1.factors:
        for z2, _ in phi2.factors:
            if abs(z1 - z2) < COMMON_ZERO_TOL:
                raise CommonZeroError(f"shared zero at {z1}")
    if n_terms is None:
        n_terms = _auto_truncation(phi1, phi2)
    gram = cross_gram(phi1, phi2, n_terms)
    cos_angle = float(min(1.0, max(0.0, linalg.singular_values(gram)[0])))
    sin_angle = math.sqrt(max(0.0, 1.0 - cos_angle * cos_angle))
    try:
        bound = sin_angle_lower_bound(phi1, phi2)
    except NotSingleZeroError:
        bound = 0.0
    return AngleReport(
        cos_angle=cos_angle,
        sin_angle=sin_angle,
        sin_lower_bound=bound,
        truncation=int(n_terms),
    )


def _single_zero_of(phi: BlaschkeProduct) -> tuple[complex, int]:
    if len(phi.factors) != 1:
        zeros = {z for z, _ in phi.factors}
        if len(zeros) != 1:
            raise NotSingleZeroError(f"product has {len(zeros)} distinct zeros")
        return phi.factors[0][0], phi.degree
    return phi.factors[0][0], phi.factors[0][1]


def sin_angle_lower_bound(phi1: BlaschkeProduct, phi2: BlaschkeProduct) -> float:
    """Zero-separation lower bound for the sine of the subspace angle.

    For products with single zeros a1, a2 of multiplicities n1, n2 this is
    the pseudo-hyperbolic distance |(a1 - a2) / (1 - conj(a1) a2)| raised
    to the power 2 n1 n2; it lies in [0, 1).
    """
    z1, m1 = _single_zero_of(phi1)
    z2, m2 = _single_zero_of(phi2)
    d = abs((z1 - z2) / (1.0 - z1.conjugate() * z2))
    return d ** (2 * m1 * m2)


class RadiusEstimate(NamedTuple):
    """Outcome of the separated-zeros radius estimate.

    ``bound`` is only meaningful when ``applicable`` is true, that is when
    rho < (1 - delta) / (2 (p - 1)); it is None otherwise.
    """

    rho: float
    delta: float
    applicable: bool
    bound: float | None
    p: int


def g_bound(rho: float, delta: float, p: int) -> float:
    """(delta + rho (p-1)) / (1 - rho (p-1)), the radius bound itself."""
    return (delta + rho * (p - 1)) / (1.0 - rho * (p - 1))


def radius_estimate(
    factors, rho_mode: str = "numeric", n_terms: int | None = None
) -> RadiusEstimate:
    """Radius estimate for a product of single-zero Blaschke factors.

    delta is the largest single-factor radius; rho bounds the pairwise
    cosines of the model-space angles, either computed numerically from
    the cross-Gram ("numeric", sharper) or replaced by the proxy
    sqrt(1 - b) with b the zero-separation bound ("f-proxy", matching the
    closed two-factor estimate).  When rho stays below
    (1 - delta) / (2 (p - 1)) the numerical radius of the product model
    operator is at most ``g_bound(rho, delta, p)``, which is then below 1.
    """
    factors = list(factors)
    p = len(factors)
    if p < 2:
        raise ValueError("need at least two factors")
    if rho_mode not in ("numeric", "f-proxy"):
        raise ValueError(f"unknown rho_mode {rho_mode!r}")
    singles = [_single_zero_of(phi) for phi in factors]
    for i in range(p):
        for j in range(i + 1, p):
            if abs(singles[i][0] - singles[j][0]) < COMMON_ZERO_TOL:
                raise DuplicateZeroError(f"factors {i} and {j} share the zero {singles[i][0]}")
    delta = max(radius_single_zero(z, m) for z, m in singles)
    rho = 0.0
    for i in range(p):
        for j in range(i + 1, p):
            if rho_mode == "numeric":
                rho = max(rho, subspace_cos_angle(factors[i], factors[j], n_terms).cos_angle)
            else:
                b = sin_angle_lower_bound(factors[i], factors[j])
                rho = max(rho, math.sqrt(max(0.0, 1.0 - b)))
    applicable = rho < (1.0 - delta) / (2.0 * (p - 1))
    bound = g_bound(rho, delta, p) if applicable else None
    return RadiusEstimate(rho=rho, delta=delta, applicable=applicable, bound=bound, p=p)
