"""Domain types and elementary operations for quadratic forms on {-1, +1}^n.

Matrices and vectors are plain numpy arrays.  The ``as_*`` helpers validate
and normalize inputs; every public operation in the package funnels through
them so shape and finiteness errors surface in one place.
"""
from __future__ import annotations

import numpy as np


class InvalidInput(ValueError):
    """Malformed matrix, vector, graph or pattern."""


class PreconditionError(ValueError):
    """Input is well formed but violates an operation's precondition."""


class BudgetError(RuntimeError):
    """Exhaustive scan refused because the dimension exceeds the budget."""


class NumericalFailure(ArithmeticError):
    """An iterative numerical method did not converge."""

    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


SYMMETRY_TOL = 1e-12


def as_square(B, name: str = "matrix") -> np.ndarray:
    """Return ``B`` as a finite float n x n array, or raise InvalidInput."""
    M = np.asarray(B, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
        raise InvalidInput(f"{name} must be a non-empty square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        i, j = np.argwhere(~np.isfinite(M))[0]
        raise InvalidInput(f"{name} has a non-finite entry at ({i}, {j})")
    return M


def is_symmetric(M: np.ndarray, tol: float = SYMMETRY_TOL) -> bool:
    scale = max(1.0, float(np.max(np.abs(M)))) if M.size else 1.0
    return bool(np.all(np.abs(M - M.T) <= tol * scale))


def as_symmetric(M, name: str = "matrix") -> np.ndarray:
    M = as_square(M, name)
    if not is_symmetric(M):
        i, j = np.unravel_index(np.argmax(np.abs(M - M.T)), M.shape)
        raise InvalidInput(f"{name} is not symmetric: entry ({i}, {j}) != ({j}, {i})")
    return M


def as_vector(x, n: int | None = None, name: str = "vector") -> np.ndarray:
    v = np.asarray(x, dtype=float)
    if v.ndim != 1:
        raise InvalidInput(f"{name} must be one-dimensional, got shape {v.shape}")
    if n is not None and v.shape[0] != n:
        raise InvalidInput(f"{name} has length {v.shape[0]}, expected {n}")
    if not np.all(np.isfinite(v)):
        raise InvalidInput(f"{name} has a non-finite entry at {int(np.argmax(~np.isfinite(v)))}")
    return v


def as_spins(x, n: int | None = None, name: str = "spin vector") -> np.ndarray:
    """Validate a hypercube corner; returns an int8 array of +/-1."""
    v = np.asarray(x)
    if v.ndim != 1 or v.shape[0] == 0:
        raise InvalidInput(f"{name} must be a non-empty 1-d array, got shape {v.shape}")
    if n is not None and v.shape[0] != n:
        raise InvalidInput(f"{name} has length {v.shape[0]}, expected {n}")
    bad = (v != 1) & (v != -1)
    if np.any(bad):
        raise InvalidInput(f"{name} component {int(np.argmax(bad))} is not +1 or -1")
    return v.astype(np.int8)


def canonicalize(B) -> np.ndarray:
    """Symmetric part of ``B`` with the diagonal zeroed.

    On corners the quadratic form of ``B`` equals that of the result plus the
    trace of the symmetric part, so maximizers are unchanged.
    """
    B = as_square(B)
    C = 0.5 * (B + B.T)
    np.fill_diagonal(C, 0.0)
    return C


def volterra_form(C) -> np.ndarray:
    """Strictly lower-triangular matrix with the same quadratic form as ``C``.

    ``C`` must be canonical (symmetric, zero diagonal).
    """
    C = as_symmetric(C)
    if np.any(np.diag(C) != 0):
        raise InvalidInput("volterra_form needs a zero-diagonal matrix; canonicalize first")
    return np.tril(2.0 * C, k=-1)


def quadratic_form(M, x) -> float:
    M = as_square(M)
    x = as_vector(x, M.shape[0])
    return float(x @ M @ x)


def energy(S, T, V) -> float:
    """Hopfield energy ``V'SV - 2V'T`` (non-decreasing under serial updates)."""
    S = as_symmetric(S, "synaptic matrix")
    n = S.shape[0]
    T = as_vector(T, n, "threshold vector")
    V = as_spins(V, n).astype(float)
    return float(V @ S @ V - 2.0 * V @ T)


def sign_map(v) -> np.ndarray:
    """Componentwise sign with sign(0) = +1."""
    v = as_vector(v)
    return np.where(v >= 0, 1, -1).astype(np.int8)


def cauchy_schwarz_bound(B, u) -> float:
    """``|u| * |Bu|``, an upper bound on ``u'Bu`` for any real ``u``."""
    B = as_square(B)
    u = as_vector(u, B.shape[0])
    return float(np.linalg.norm(u) * np.linalg.norm(B @ u))


def all_corners(n: int) -> np.ndarray:
    """Every corner of {-1,+1}^n as rows, in binary order (bit i -> component i)."""
    idx = np.arange(2**n, dtype=np.int64)
    bits = (idx[:, None] >> np.arange(n)) & 1
    return (1 - 2 * bits).astype(np.int8)


def spins_to_str(x) -> str:
    return "".join("+" if s > 0 else "-" for s in as_spins(x))


def str_to_spins(s: str) -> np.ndarray:
    s = s.strip()
    if not s or set(s) - {"+", "-"}:
        raise InvalidInput(f"spin string {s!r} must be a non-empty run of '+'/'-'")
    return np.array([1 if c == "+" else -1 for c in s], dtype=np.int8)
