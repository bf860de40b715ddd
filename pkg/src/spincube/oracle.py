"""Exhaustive ground truth over the hypercube for small n.

Only negation-canonical corners (first component +1) are scanned, since
``x'Mx == (-x)'M(-x)``.  Canonical corner ``k`` has component ``j >= 1`` equal
to -1 exactly when bit ``j-1`` of ``k`` is set, so index order is stable and
scans split cleanly into index intervals.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .core import BudgetError, InvalidInput, as_symmetric

DEFAULT_BUDGET = 22
CHUNK = 1 << 15


def default_budget() -> int:
    raw = os.environ.get("SPINCUBE_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise InvalidInput(f"SPINCUBE_BUDGET={raw!r} is not an integer") from None


def check_budget(n: int, budget: int | None) -> None:
    budget = default_budget() if budget is None else budget
    if n > budget:
        raise BudgetError(f"exhaustive scan over n={n} exceeds the budget n <= {budget}")


def canonical_corners(n: int, lo: int = 0, hi: int | None = None) -> np.ndarray:
    """Canonical corners with indices in ``[lo, hi)`` as rows of an int8 array."""
    hi = 1 << (n - 1) if hi is None else hi
    idx = np.arange(lo, hi, dtype=np.int64)
    bits = (idx[:, None] >> np.arange(n - 1)) & 1
    X = np.ones((idx.size, n), dtype=np.int8)
    X[:, 1:] = 1 - 2 * bits
    return X


def corner_index(x) -> int:
    """Index of the canonical representative of ``{x, -x}``."""
    x = np.asarray(x)
    if x[0] < 0:
        x = -x
    return int(sum(1 << (j - 1) for j in range(1, x.size) if x[j] < 0))


def _fields(X: np.ndarray, M: np.ndarray) -> np.ndarray:
    # fixed accumulation order so equal corners evaluate identically in any chunk
    Y = np.zeros(X.shape, dtype=float)
    for j in range(M.shape[0]):
        Y += X[:, j, None] * M[j]
    return Y


def _values(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    v = np.zeros(X.shape[0], dtype=float)
    for i in range(X.shape[1]):
        v += X[:, i] * Y[:, i]
    return v


def _intervals(total: int):
    return [(lo, min(lo + CHUNK, total)) for lo in range(0, total, CHUNK)]


def _map(fn, total: int, workers: int):
    parts = _intervals(total)
    if workers <= 1 or len(parts) == 1:
        return [fn(lo, hi) for lo, hi in parts]
    with ThreadPoolExecutor(workers) as pool:
        return list(pool.map(lambda iv: fn(*iv), parts))


@dataclass
class OracleResult:
    optimum_value: float
    optimizers: list[np.ndarray]
    corners_scanned: int
    sense: str = "max"
    indices: list[int] = field(default_factory=list)


def brute_force_optimum(M, sense: str = "max", budget: int | None = None, workers: int = 1) -> OracleResult:
    """Exact optimum of ``x'Mx`` over all corners, with every optimizer."""
    if sense not in ("max", "min"):
        raise InvalidInput(f"sense must be 'max' or 'min', got {sense!r}")
    M = as_symmetric(M)
    n = M.shape[0]
    check_budget(n, budget)
    sgn = 1.0 if sense == "max" else -1.0

    def scan(lo, hi):
        X = canonical_corners(n, lo, hi)
        v = sgn * _values(X, _fields(X, M))
        best = v.max()
        return best, lo + np.flatnonzero(v == best)

    total = 1 << (n - 1)
    parts = _map(scan, total, workers)
    best = max(b for b, _ in parts)
    idx = [int(i) for b, ids in parts if b == best for i in ids]
    opt = [canonical_corners(n, i, i + 1)[0] for i in idx]
    return OracleResult(float(sgn * best), opt, total, sense, idx)


def enumerate_stable_vectors(M, kind: str = "stable", budget: int | None = None,
                             workers: int = 1) -> list[tuple[np.ndarray, float]]:
    """Every negation pair ``{x, -x}`` with a member satisfying the predicate.

    ``kind="stable"`` tests ``x == sign(Mx)``, ``"anti-stable"`` tests
    ``x == -sign(Mx)``.  Away from zero fields both members of a pair agree;
    when some ``(Mx)_i == 0`` the sign(0) = +1 convention can admit only one
    of them, and the pair is still listed.  Results are canonical corners with
    their values, sorted by value descending (index ascending on ties).
    """
    if kind not in ("stable", "anti-stable"):
        raise InvalidInput(f"kind must be 'stable' or 'anti-stable', got {kind!r}")
    M = as_symmetric(M)
    n = M.shape[0]
    check_budget(n, budget)
    flip = 1 if kind == "stable" else -1

    def scan(lo, hi):
        X = canonical_corners(n, lo, hi)
        Y = _fields(X, M)
        sx = np.where(Y >= 0, 1, -1)
        sneg = np.where(-Y >= 0, 1, -1)
        ok = np.all(flip * sx == X, axis=1) | np.all(flip * sneg == -X, axis=1)
        keep = np.flatnonzero(ok)
        return [(lo + int(k), X[k].copy(), float(v)) for k, v in zip(keep, _values(X[keep], Y[keep]))]

    found = [r for part in _map(scan, 1 << (n - 1), workers) for r in part]
    found.sort(key=lambda r: (-r[2], r[0]))
    return [(x, v) for _, x, v in found]


def energy_matrix(S, T) -> np.ndarray:
    """``A`` with ``(1, V)' A (1, V) == V'SV - 2V'T`` for every state ``V``."""
    S = as_symmetric(S)
    T = np.asarray(T, dtype=float)
    n = S.shape[0]
    A = np.zeros((n + 1, n + 1))
    A[1:, 1:] = S
    A[0, 1:] = A[1:, 0] = -T
    return A


def brute_force_energy(S, T, budget: int | None = None, workers: int = 1) -> OracleResult:
    """Maximum Hopfield energy over all states.

    With zero thresholds the optimizers are negation-canonical; otherwise an
    extra spin pinned to +1 carries the threshold term and every optimal state
    is listed as is.
    """
    T = np.asarray(T, dtype=float)
    if not np.any(T):
        return brute_force_optimum(S, "max", budget, workers)
    budget = default_budget() if budget is None else budget
    check_budget(T.size, budget)
    res = brute_force_optimum(energy_matrix(S, T), "max", budget + 1, workers)
    return OracleResult(res.optimum_value, [x[1:].copy() for x in res.optimizers], res.corners_scanned,
                        "max", res.indices)
