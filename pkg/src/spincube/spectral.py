"""Eigen-structure of symmetric matrices and the eigenvector-start heuristic.

``eigen_decompose`` is a cyclic Jacobi solver: deterministic, and accurate to
the last few ulps for the small dense matrices this package works with.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import NumericalFailure, as_spins, as_symmetric, canonicalize, sign_map
from .dynamics import FixedPoint, HopfieldNetwork, Serial, Trajectory, run

DEGENERACY_TOL = 1e-9


class HeuristicIncomplete(RuntimeError):
    """Serial dynamics hit the sweep limit before reaching a stable state."""

    def __init__(self, trajectory: Trajectory):
        super().__init__(f"serial dynamics did not converge within {len(trajectory.energies) - 1} sweeps")
        self.trajectory = trajectory


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in descending order; ``vectors[:, k]`` pairs with ``values[k]``."""

    values: np.ndarray
    vectors: np.ndarray
    sweeps: int = 0

    @property
    def mu_max(self) -> float:
        return float(self.values[0])

    @property
    def top_degenerate(self) -> bool:
        scale = max(1.0, float(np.max(np.abs(self.values))))
        return self.values.size > 1 and self.values[0] - self.values[1] <= DEGENERACY_TOL * scale

    def top_vector(self) -> np.ndarray:
        """Unit top eigenvector, oriented so its first nonzero entry is positive."""
        z = self.vectors[:, 0].copy()
        nz = np.flatnonzero(np.abs(z) > 1e-14)
        if nz.size and z[nz[0]] < 0:
            z = -z
        return z

    def reconstruct(self) -> np.ndarray:
        return (self.vectors * self.values) @ self.vectors.T


def _off_norm(A: np.ndarray) -> float:
    off = A[~np.eye(A.shape[0], dtype=bool)]
    return float(np.sqrt(off @ off))


def jacobi_eigen(M, tol: float = 1e-12, max_sweeps: int = 100) -> Spectrum:
    A = as_symmetric(M).copy()
    A = 0.5 * (A + A.T)
    n = A.shape[0]
    V = np.eye(n)
    target = tol * max(1.0, float(np.linalg.norm(A)))
    sweeps = 0
    while _off_norm(A) > target:
        if sweeps == max_sweeps:
            raise NumericalFailure(f"Jacobi did not converge in {max_sweeps} sweeps", _off_norm(A))
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                diff = A[q, q] - A[p, p]
                if abs(apq) < abs(diff) * 1e-36:
                    t = apq / diff  # theta would overflow; t ~ 1/(2 theta)
                else:
                    theta = diff / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                app, aqq = A[p, p], A[q, q]
                cp, cq = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * cp - s * cq
                A[:, q] = s * cp + c * cq
                rp, rq = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * rp - s * rq
                A[q, :] = s * rp + c * rq
                A[p, p] = app - t * apq
                A[q, q] = aqq + t * apq
                A[p, q] = A[q, p] = 0.0
                vp, vq = V[:, p].copy(), V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
    values = np.diag(A).copy()
    order = np.argsort(-values, kind="stable")
    return Spectrum(values[order], V[:, order], sweeps)


def eigen_decompose(M, tol: float = 1e-12, method: str = "jacobi") -> Spectrum:
    """Orthonormal eigendecomposition of a symmetric matrix.

    ``method="lapack"`` defers to ``numpy.linalg.eigh`` for matrices too large
    for the pure-Python Jacobi sweep.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if method == "jacobi":
        return jacobi_eigen(M, tol)
    if method == "lapack":
        w, P = np.linalg.eigh(as_symmetric(M))
        return Spectrum(w[::-1].copy(), P[:, ::-1].copy())
    raise ValueError(f"unknown eigen method {method!r}")


@dataclass(frozen=True)
class HeuristicResult:
    state: np.ndarray
    energy: float
    trajectory: Trajectory
    start: np.ndarray
    start_energy: float
    top_vector: np.ndarray
    degenerate: bool


def spectral_heuristic(net: HopfieldNetwork, mode: Serial | None = None, max_sweeps: int | None = None,
                       method: str = "jacobi") -> HeuristicResult:
    """Start serial dynamics from the sign pattern of the top eigenvector.

    The eigenvector comes from the canonical form of ``net.S``; thresholds
    only enter through the dynamics.  Raises ``HeuristicIncomplete`` if the
    run hits its sweep limit.
    """
    spec = eigen_decompose(canonicalize(net.S), method=method)
    z = spec.top_vector()
    start = sign_map(z)
    traj = run(net, start, mode or Serial(), max_sweeps)
    if not isinstance(traj.outcome, FixedPoint):
        raise HeuristicIncomplete(traj)
    state = traj.outcome.state
    return HeuristicResult(state, net.energy(state), traj, start, net.energy(start), z, spec.top_degenerate)


@dataclass(frozen=True)
class Lemma2Decomposition:
    """``y'My = mu_max + cross_term + residual`` with ``y = x / sqrt(n)``."""

    mu_max: float
    cross_term: float
    residual: float
    total: float
    projected_value: float
    degenerate: bool


def lemma2_decompose(M, x, spectrum: Spectrum | None = None) -> Lemma2Decomposition:
    """Split the projected corner value around the top eigenvector ``x0``.

    ``cross_term = 2 mu_max (y - x0)'x0`` and ``residual = (y - x0)'M(y - x0)``.
    Their sum is never positive, since ``y'My <= mu_max`` on the unit sphere.
    """
    M = as_symmetric(M)
    x = as_spins(x, M.shape[0]).astype(float)
    spec = spectrum or eigen_decompose(M)
    x0 = spec.top_vector()
    mu = spec.mu_max
    y = x / math.sqrt(x.size)
    d = y - x0
    cross = 2.0 * mu * float(d @ x0)
    resid = float(d @ M @ d)
    return Lemma2Decomposition(mu, cross, resid, mu + cross + resid, float(y @ M @ y), spec.top_degenerate)


@dataclass(frozen=True)
class ExpectationView:
    """``y'My`` as the mean of the eigenvalues under weights ``c_i^2``."""

    coefficients: np.ndarray
    eigenvalues: np.ndarray
    expectation: float
    projected_value: float

    @property
    def probabilities(self) -> np.ndarray:
        return self.coefficients**2


def expectation_view(M, x, spectrum: Spectrum | None = None) -> ExpectationView:
    M = as_symmetric(M)
    x = as_spins(x, M.shape[0]).astype(float)
    spec = spectrum or eigen_decompose(M)
    y = x / math.sqrt(x.size)
    c = spec.vectors.T @ y
    return ExpectationView(c, spec.values.copy(), float(np.sum(c**2 * spec.values)), float(y @ M @ y))


def corner_value_bound(M, spectrum: Spectrum | None = None) -> float:
    """``n * mu_max``: no corner's quadratic form exceeds it."""
    M = as_symmetric(M)
    spec = spectrum or eigen_decompose(M)
    return M.shape[0] * spec.mu_max
