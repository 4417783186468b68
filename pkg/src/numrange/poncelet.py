"""Rank-one unitary dilations and the polygons they cut on the unit circle.

A contraction with rank-one defects admits a one-parameter family of
unitary dilations one dimension up.  For each point of the unit circle
there is a dilation whose spectrum contains it; the spectrum then forms a
polygon inscribed in the circle whose edges are tangent to the boundary
of the numerical range.  This module builds the dilations, selects the
phase placing a prescribed vertex, extracts the unitary spectrum, and
certifies the tangency.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import NotRankOneError, NumrangeError, PhaseSearchFailureError
from .numerical_range import boundary, support_function

DEFECT_RANK_TOL = 1e-8
UNITARITY_TOL = 1e-10
PHASE_RESIDUAL_TOL = 1e-8
VERTEX_MATCH_TOL = 1e-8
VERTEX_DISTINCT_TOL = 1e-8
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
# Re(U) eigenvalue gaps below this trigger the Cayley fallback.
_DEGENERACY_GAP = 1e-7


def _fix_phase(v: np.ndarray) -> np.ndarray:
    # make the first non-negligible component real positive
    mags = np.abs(v)
    j = int(np.argmax(mags > 1e-12 * mags.max()))
    return v * (v[j].conjugate() / abs(v[j]))


def _defect_direction(gram: np.ndarray, label: str) -> np.ndarray:
    eig = linalg.hermitian_eig(gram)
    top = float(eig.values[-1])
    second = float(abs(eig.values[-2])) if gram.shape[0] > 1 else 0.0
    if top <= DEFECT_RANK_TOL:
        raise NotRankOneError(f"defect operator {label} is numerically zero")
    if second > DEFECT_RANK_TOL:
        raise NotRankOneError(
            f"defect operator {label} has second eigenvalue {second:.3e}"
        )
    return math.sqrt(top) * _fix_phase(eig.vectors[:, -1])


def defect_vectors(t) -> tuple[np.ndarray, np.ndarray]:
    """Unit-rank factorizations of both defect operators of a contraction.

    Returns (d, d_star) with d d^* = I - T^* T and d_star d_star^* =
    I - T T^*.  The phase of each vector is fixed by making its first
    non-negligible component real positive.  Raises NotRankOneError when
    either defect is not numerically of rank one.
    """
    m = linalg.as_square(t)
    eye = np.eye(m.shape[0], dtype=np.complex128)
    d = _defect_direction(eye - m.conj().T @ m, "I - T*T")
    d_star = _defect_direction(eye - m @ m.conj().T, "I - TT*")
    return d, d_star


def _dilation_data(m: np.ndarray):
    d, d_star = defect_vectors(m)
    mu = float(np.vdot(d, d).real)
    kappa = complex(np.vdot(d, m.conj().T @ d_star)) / mu
    return d, d_star, kappa


def _assemble(m: np.ndarray, d, d_star, kappa, phase: float) -> np.ndarray:
    n = m.shape[0]
    w = cmath.exp(1j * phase)
    u = np.zeros((n + 1, n + 1), dtype=np.complex128)
    u[:n, :n] = m
    u[:n, n] = w * d_star
    u[n, :n] = d.conj()
    u[n, n] = -w * kappa
    return u


def unitary_dilation(t, phase: float) -> np.ndarray:
    """Unitary (n+1) x (n+1) dilation of a rank-one-defect contraction.

    The top-left block is T exactly; the border is built from the defect
    vectors, and ``phase`` parameterizes the unitary-equivalence classes
    of the dilations.  Unitarity is verified to ``UNITARITY_TOL``.
    """
    m = linalg.as_square(t)
    u = _assemble(m, *_dilation_data(m), float(phase))
    res = linalg.norm_inf(u.conj().T @ u - np.eye(m.shape[0] + 1))
    if res > UNITARITY_TOL:
        raise NumrangeError(f"dilation failed unitarity check, residual {res:.3e}")
    return u


def unitary_eigensystem(u) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues and eigenvectors of a unitary matrix.

    Primary path: eigenvectors of Re(U) refined by Rayleigh quotients,
    valid when Re(U) has well-separated eigenvalues.  Otherwise the
    spectrum is recovered from the Hermitian Cayley transform
    -i (I + e^{i g} U)(I - e^{i g} U)^{-1} with a rotation g chosen to
    keep the resolvent well conditioned.
    """
    m = linalg.as_square(u)
    n = m.shape[0]
    if linalg.norm_inf(m.conj().T @ m - np.eye(n)) > 1e-8:
        raise ValueError("input is not unitary within tolerance")
    if n == 1:
        return np.array([complex(m[0, 0])]), np.eye(1, dtype=np.complex128)
    eig = linalg.hermitian_eig(0.5 * (m + m.conj().T))
    if float(np.min(np.diff(eig.values))) > _DEGENERACY_GAP:
        vals = np.array([complex(np.vdot(eig.vectors[:, j], m @ eig.vectors[:, j])) for j in range(n)])
        res = max(
            float(np.linalg.norm(m @ eig.vectors[:, j] - vals[j] * eig.vectors[:, j]))
            for j in range(n)
        )
        if res <= 1e-8:
            return vals, eig.vectors
    return _cayley_eigensystem(m)


def _cayley_eigensystem(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    n = m.shape[0]
    eye = np.eye(n, dtype=np.complex128)
    best_gamma, best_sep = 0.0, -1.0
    for j in range(24):
        gamma = 2.0 * math.pi * ((j * _GOLDEN) % 1.0)
        sep = float(linalg.singular_values(eye - cmath.exp(1j * gamma) * m)[-1])
        if sep > best_sep:
            best_gamma, best_sep = gamma, sep
        if sep > 0.5:
            break
    if best_sep < 1e-3:
        raise NumrangeError("could not rotate the spectrum away from 1")
    v = cmath.exp(1j * best_gamma) * m
    cay = -1j * linalg.rdiv(eye + v, eye - v)
    eig = linalg.hermitian_eig(0.5 * (cay + cay.conj().T))
    phis = 2.0 * np.arctan2(1.0, eig.values)
    vals = np.exp(1j * phis) * cmath.exp(-1j * best_gamma)
    res = max(
        float(np.linalg.norm(m @ eig.vectors[:, j] - vals[j] * eig.vectors[:, j]))
        for j in range(n)
    )
    if res > 1e-8:
        raise NumrangeError(f"unitary eigensystem residual {res:.3e}")
    return vals, eig.vectors


@dataclass(frozen=True)
class PonceletPolygon:
    """Vertices on the unit circle sorted by argument, one of which is the
    prescribed ``source_vertex``."""

    vertices: np.ndarray
    source_vertex: complex

    def __len__(self) -> int:
        return len(self.vertices)


def _golden_min(f, a: float, b: float, tol: float) -> tuple[float, float]:
    x1 = b - _GOLDEN * (b - a)
    x2 = a + _GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    best_x, best_f = (x1, f1) if f1 < f2 else (x2, f2)
    while b - a > tol:
        if f1 > f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = f(x1)
        if f1 < best_f:
            best_x, best_f = x1, f1
        if f2 < best_f:
            best_x, best_f = x2, f2
    return best_x, best_f


def poncelet_polygon(
    t,
    vertex,
    coarse: int = 64,
    refine_tol: float = 1e-12,
    residual_tol: float = PHASE_RESIDUAL_TOL,
) -> PonceletPolygon:
    """Polygon of the unitary dilation of T having ``vertex`` as a vertex.

    The dilation phase is found by minimizing |det(U(phase) - vertex I)|
    over ``coarse`` samples followed by golden-section refinement; the
    residual at the solution must drop below ``residual_tol``.  Returns
    the n+1 eigenvalues of the selected dilation sorted by argument.

    Raises
    ------
    PhaseSearchFailureError
        If no phase places the vertex in the spectrum, or the computed
        spectrum violates the unit-modulus or distinctness checks.
    """
    m = linalg.as_square(t)
    n = m.shape[0]
    if n < 2:
        raise ValueError("the polygon construction needs a matrix of size 2 or more")
    lam = complex(vertex)
    if abs(abs(lam) - 1.0) > 1e-9:
        raise ValueError(f"vertex must lie on the unit circle, got |v| = {abs(lam)}")
    data = _dilation_data(m)
    eye = np.eye(n + 1, dtype=np.complex128)

    def residual(phase: float) -> float:
        return abs(linalg.determinant(_assemble(m, *data, phase) - lam * eye))

    phases = 2.0 * math.pi * np.arange(coarse) / coarse
    vals = np.array([residual(p) for p in phases])
    k = int(np.argmin(vals))
    h = 2.0 * math.pi / coarse
    phase, res = _golden_min(residual, phases[k] - h, phases[k] + h, refine_tol)
    if res > residual_tol:
        raise PhaseSearchFailureError(
            f"no dilation phase reaches residual {residual_tol:.1e}, best {res:.3e}"
        )
    u = unitary_dilation(m, phase)
    eigs, _ = unitary_eigensystem(u)
    moduli = np.abs(eigs)
    if np.max(np.abs(moduli - 1.0)) > 1e-10:
        raise PhaseSearchFailureError("dilation spectrum left the unit circle")
    order = np.argsort(np.angle(eigs) % (2.0 * math.pi))
    verts = eigs[order]
    dists = np.abs(verts - np.roll(verts, 1))
    if len(verts) > 1 and float(dists.min()) <= VERTEX_DISTINCT_TOL:
        raise PhaseSearchFailureError("dilation spectrum has coinciding eigenvalues")
    if float(np.min(np.abs(verts - lam))) > VERTEX_MATCH_TOL:
        raise PhaseSearchFailureError("prescribed vertex missing from the spectrum")
    return PonceletPolygon(vertices=verts, source_vertex=lam)


def _edges(vertices: np.ndarray):
    """Yield (outward unit normal, line offset) for each polygon edge."""
    verts = np.asarray(vertices, dtype=np.complex128)
    center = verts.mean()
    for i in range(len(verts)):
        p, q = verts[i], verts[(i + 1) % len(verts)]
        normal = -1j * (q - p)
        if (normal.conjugate() * (p - center)).real < 0.0:
            normal = -normal
        normal /= abs(normal)
        offset = 0.5 * ((normal.conjugate() * p).real + (normal.conjugate() * q).real)
        yield normal, offset


def edge_support_gaps(polygon, t) -> np.ndarray:
    """Per-edge difference between the support of W(T) in the edge-normal
    direction and the edge line offset.  Zero means the edge is tangent;
    positive means the edge cuts into the range."""
    verts = polygon.vertices if isinstance(polygon, PonceletPolygon) else polygon
    verts = np.asarray(verts, dtype=np.complex128)
    if len(verts) < 3:
        raise ValueError("need at least three vertices")
    m = linalg.as_square(t)
    gaps = []
    for normal, offset in _edges(verts):
        psi = math.atan2(normal.imag, normal.real)
        gaps.append(support_function(m, psi) - offset)
    return np.array(gaps)


def circumscription_check(polygon, t, grid_size: int = 512) -> float:
    """Largest signed violation of the circumscription property.

    Combines the support-function gap of every edge with the signed
    distance of sampled boundary points beyond each edge line; a Poncelet
    polygon yields a value of order rounding error, a shrunk polygon a
    positive value, a non-tangent enclosing polygon a negative one.
    """
    verts = polygon.vertices if isinstance(polygon, PonceletPolygon) else polygon
    verts = np.asarray(verts, dtype=np.complex128)
    gaps = edge_support_gaps(verts, t)
    pts = boundary(t, grid_size).points_complex()
    worst = float(np.max(gaps))
    for normal, offset in _edges(verts):
        outside = float(np.max((pts * normal.conjugate()).real) - offset)
        worst = max(worst, outside)
    return worst
