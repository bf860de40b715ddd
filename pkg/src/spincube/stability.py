"""Stable and anti-stable corners, orthogonal-pattern memories, eigen-corners."""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import (
    InvalidInput,
    PreconditionError,
    as_spins,
    as_square,
    as_symmetric,
    spins_to_str,
)


@dataclass(frozen=True)
class StabilityReport:
    vector: np.ndarray
    stable: bool
    anti_stable: bool
    value: float
    row_sum: float | None = None  # common row sum, when all rows agree

    def record(self) -> str:
        return f"{spins_to_str(self.vector)}, {self.stable}, {self.anti_stable}, {self.value!r}"


def _sign(v: np.ndarray) -> np.ndarray:
    return np.where(v >= 0, 1, -1)


def is_stable_vector(M, x) -> bool:
    """``x == sign(Mx)``."""
    M = as_symmetric(M)
    x = as_spins(x, M.shape[0])
    return bool(np.array_equal(_sign(M @ x), x))


def is_anti_stable_vector(M, x) -> bool:
    """``x == -sign(Mx)``."""
    M = as_symmetric(M)
    x = as_spins(x, M.shape[0])
    return bool(np.array_equal(-_sign(M @ x), x))


def report(M, x) -> StabilityReport:
    M = as_symmetric(M)
    x = as_spins(x, M.shape[0])
    Mx = M @ x
    return StabilityReport(
        vector=x,
        stable=bool(np.array_equal(_sign(Mx), x)),
        anti_stable=bool(np.array_equal(-_sign(Mx), x)),
        value=float(x @ Mx),
    )


@dataclass(frozen=True)
class PatternSet:
    """Pairwise orthogonal corners, stored as rows of an int array."""

    patterns: np.ndarray

    def __post_init__(self):
        P = np.asarray(self.patterns)
        if P.ndim != 2 or P.shape[0] == 0:
            raise InvalidInput("a pattern set needs at least one pattern (2-d array of rows)")
        for k, row in enumerate(P):
            as_spins(row, P.shape[1], f"pattern {k}")
        P = P.astype(np.int64)
        if P.shape[0] > P.shape[1]:
            raise InvalidInput(f"{P.shape[0]} orthogonal patterns cannot fit in dimension {P.shape[1]}")
        G = P @ P.T
        off = G - np.diag(np.diag(G))
        if np.any(off != 0):
            a, b = np.argwhere(off != 0)[0]
            raise InvalidInput(f"patterns {a} and {b} are not orthogonal (dot product {G[a, b]})")
        P.flags.writeable = False
        object.__setattr__(self, "patterns", P)

    @property
    def N(self) -> int:
        return self.patterns.shape[1]

    @property
    def s(self) -> int:
        return self.patterns.shape[0]

    @property
    def saturated(self) -> bool:
        """s == N: every stored pattern sees zero field, so stability rests on sign(0)."""
        return self.s == self.N


def hadamard(N: int) -> np.ndarray:
    """Sylvester Hadamard matrix; ``N`` must be a power of two."""
    if N < 1 or N & (N - 1):
        raise InvalidInput(f"Sylvester construction needs a power of two, got {N}")
    H = np.ones((1, 1), dtype=np.int64)
    while H.shape[0] < N:
        H = np.block([[H, H], [H, -H]])
    return H


def synthesize_memory(P: PatternSet | np.ndarray) -> np.ndarray:
    """Outer-product memory ``W = sum_l (J_l J_l' - I)`` as an integer matrix.

    Each stored pattern is an eigenvector of ``W`` with eigenvalue ``N - s``.
    """
    if not isinstance(P, PatternSet):
        P = PatternSet(P)
    J = P.patterns
    return J.T @ J - P.s * np.eye(P.N, dtype=np.int64)


class EigenClass(enum.Enum):
    STABLE = "stable-by-eigen"
    ANTI_STABLE = "anti-stable-by-eigen"
    NOT_EIGEN = "not-an-eigenvector"


def eigencorner_stability(M, x, rtol: float = 1e-9) -> tuple[EigenClass, float]:
    """Classify a corner by whether it is an eigenvector, and of which sign.

    The candidate eigenvalue is the Rayleigh quotient ``x'Mx / n``; ``x``
    counts as an eigenvector when ``|Mx - mu x|_inf <= rtol * max(1, |Mx|_inf)``.
    Zero eigenvalues are reported as NOT_EIGEN.  Returns ``(class, mu)``.
    """
    M = as_symmetric(M)
    x = as_spins(x, M.shape[0]).astype(float)
    Mx = M @ x
    mu = float(x @ Mx) / x.size
    tol = rtol * max(1.0, float(np.max(np.abs(Mx))))
    if np.max(np.abs(Mx - mu * x)) > tol or abs(mu) <= tol:
        return EigenClass.NOT_EIGEN, mu
    return (EigenClass.STABLE if mu > 0 else EigenClass.ANTI_STABLE), mu


def all_ones_check(M) -> StabilityReport:
    """Stability of the all-ones corner for an entrywise non-negative matrix.

    Its value is the sum of all entries; ``row_sum`` is set when every row
    sums to the same alpha, in which case the value is ``n * alpha``.
    """
    M = as_square(M)
    if np.any(M < 0):
        i, j = np.argwhere(M < 0)[0]
        raise PreconditionError(f"all_ones_check needs non-negative entries; M[{i},{j}] < 0")
    e = np.ones(M.shape[0], dtype=np.int8)
    rows = M.sum(axis=1)
    same = np.all(np.abs(rows - rows[0]) <= 1e-12 * max(1.0, abs(rows[0])))
    return StabilityReport(
        vector=e,
        stable=bool(np.all(rows >= 0)),
        anti_stable=False,
        value=float(M.sum()),
        row_sum=float(rows[0]) if same else None,
    )


def independent_count(vectors) -> int:
    """Rank of a set of corners (the linearly independent subset size)."""
    V = np.asarray(vectors, dtype=float)
    if V.size == 0:
        return 0
    return int(np.linalg.matrix_rank(V))
