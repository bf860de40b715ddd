"""Weighted graphs as zero-threshold Hopfield networks.

With ``S`` the weighted adjacency matrix and ``T = 0``, every state ``V``
satisfies ``energy(V) + 4 * cut(V) == 2 * sum(w)``, so maximizing the energy
is the same as minimizing the cut between the +1 and -1 vertices.  Weights may
be negative; the brute-force referee does not care.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import InvalidInput, as_spins
from .dynamics import HopfieldNetwork, Serial
from .oracle import _intervals, canonical_corners, check_budget
from .spectral import HeuristicResult, spectral_heuristic


@dataclass(frozen=True)
class WeightedGraph:
    n: int
    edges: tuple[tuple[int, int, float], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInput(f"graph needs at least one vertex, got n={self.n}")
        seen = set()
        clean = []
        for k, e in enumerate(self.edges):
            try:
                i, j, w = int(e[0]), int(e[1]), float(e[2])
            except (TypeError, ValueError, IndexError):
                raise InvalidInput(f"edge {k} is not an (i, j, w) triple: {e!r}") from None
            if i == j:
                raise InvalidInput(f"edge {k} is a self-loop at vertex {i}")
            if i > j:
                i, j = j, i
            if i < 0 or j >= self.n:
                raise InvalidInput(f"edge {k} ({i}, {j}) has a vertex outside 0..{self.n - 1}")
            if not np.isfinite(w):
                raise InvalidInput(f"edge {k} ({i}, {j}) has a non-finite weight")
            if (i, j) in seen:
                raise InvalidInput(f"edge {k} duplicates ({i}, {j})")
            seen.add((i, j))
            clean.append((i, j, w))
        object.__setattr__(self, "edges", tuple(clean))

    @property
    def total_weight(self) -> float:
        return float(sum(w for _, _, w in self.edges))

    @classmethod
    def from_matrix(cls, S) -> "WeightedGraph":
        S = np.asarray(S, dtype=float)
        n = S.shape[0]
        return cls(n, tuple((i, j, float(S[i, j])) for i in range(n) for j in range(i + 1, n) if S[i, j] != 0))


@dataclass(frozen=True)
class CutPartition:
    """``side[i]`` is True when vertex ``i`` belongs to U (the +1 vertices)."""

    side: np.ndarray
    weight: float | None = None

    def spins(self) -> np.ndarray:
        return np.where(self.side, 1, -1).astype(np.int8)

    def canonical(self) -> "CutPartition":
        """Complement-equivalent partition with vertex 0 in U."""
        return self if self.side[0] else CutPartition(~self.side, self.weight)


def graph_to_network(G: WeightedGraph) -> HopfieldNetwork:
    S = np.zeros((G.n, G.n))
    for i, j, w in G.edges:
        S[i, j] = S[j, i] = w
    return HopfieldNetwork.zero_threshold(S)


def cut_weight(G: WeightedGraph, P: CutPartition) -> float:
    side = np.asarray(P.side, dtype=bool)
    if side.shape != (G.n,):
        raise InvalidInput(f"partition has {side.size} vertices, graph has {G.n}")
    return float(sum(w for i, j, w in G.edges if side[i] != side[j]))


def state_to_partition(V, G: WeightedGraph | None = None) -> CutPartition:
    side = as_spins(V) == 1
    P = CutPartition(side)
    return P if G is None else CutPartition(side, cut_weight(G, P))


def _cut_weights(G: WeightedGraph, X: np.ndarray) -> np.ndarray:
    out = np.zeros(X.shape[0])
    for i, j, w in G.edges:
        out += w * (X[:, i] != X[:, j])
    return out


def min_cut_partitions(G: WeightedGraph, allow_trivial: bool = True,
                       budget: int | None = None) -> tuple[list[CutPartition], float]:
    """All minimum-weight partitions (vertex 0 in U), in partition-index order."""
    check_budget(G.n, budget)
    if G.n == 1 and not allow_trivial:
        raise InvalidInput("a graph with one vertex has no nontrivial cut")
    best, found = np.inf, []
    for lo, hi in _intervals(1 << (G.n - 1)):
        X = canonical_corners(G.n, lo, hi)
        c = _cut_weights(G, X)
        if not allow_trivial:
            c[np.all(X == 1, axis=1)] = np.inf
        m = c.min()
        if m < best:
            best, found = m, []
        if m == best and np.isfinite(m):
            found.extend(X[k] for k in np.flatnonzero(c == m))
    best = float(best)
    return [CutPartition(x == 1, best) for x in found], best


def brute_force_mincut(G: WeightedGraph, allow_trivial: bool = False,
                       budget: int | None = None) -> tuple[CutPartition, float]:
    """Exact minimum cut; ties go to the lowest partition index.

    By default both sides must be non-empty.  ``allow_trivial=True`` admits
    U = all vertices (weight 0), which is the partition the all-ones state
    maps to and is what energy maximization ranges over.
    """
    parts, best = min_cut_partitions(G, allow_trivial, budget)
    return parts[0], best


def mincut_heuristic(G: WeightedGraph, mode: Serial | None = None,
                     max_sweeps: int | None = None) -> tuple[CutPartition, float, HeuristicResult]:
    res = spectral_heuristic(graph_to_network(G), mode, max_sweeps)
    P = state_to_partition(res.state, G)
    return P, P.weight, res
