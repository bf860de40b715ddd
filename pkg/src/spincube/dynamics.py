"""Discrete-time Hopfield network dynamics.

A network is a symmetric synaptic matrix ``S`` and a threshold vector ``T``.
Node ``i`` is updated to ``sign(S[i] @ V - T[i])`` with sign(0) = +1.  In
serial mode one node moves per time step, and a sweep visits every node once;
in fully parallel mode every node moves at once.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Union

import numpy as np

from .core import (
    InvalidInput,
    PreconditionError,
    as_spins,
    as_symmetric,
    as_vector,
    spins_to_str,
)

HISTORY_LIMIT = 24


@dataclass(frozen=True)
class HopfieldNetwork:
    S: np.ndarray
    T: np.ndarray

    def __post_init__(self):
        S = as_symmetric(self.S, "synaptic matrix").copy()
        T = as_vector(self.T, S.shape[0], "threshold vector").copy()
        S.flags.writeable = False
        T.flags.writeable = False
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "T", T)

    @classmethod
    def zero_threshold(cls, S) -> "HopfieldNetwork":
        S = np.asarray(S, dtype=float)
        return cls(S, np.zeros(S.shape[0]))

    @property
    def n(self) -> int:
        return self.S.shape[0]

    def fields(self, V) -> np.ndarray:
        return self.S @ np.asarray(V, dtype=float) - self.T

    def energy(self, V) -> float:
        V = np.asarray(V, dtype=float)
        return float(V @ self.S @ V - 2.0 * V @ self.T)


@dataclass(frozen=True)
class Serial:
    """One node per time step.

    ``order="round-robin"`` visits 0..n-1 every sweep.  ``order="random"``
    draws a fresh permutation per sweep from ``seed``; sweep ``k`` always gets
    the same permutation, so runs are reproducible and ``step`` can be called
    at any time index.  ``nodes`` restricts the schedule to a subset (a
    partial update set; no convergence guarantee is claimed for it).
    """

    order: str = "round-robin"
    seed: int = 0
    nodes: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.order not in ("round-robin", "random"):
            raise InvalidInput(f"unknown serial order {self.order!r}")

    def sweep_order(self, n: int, sweep: int) -> np.ndarray:
        base = np.arange(n) if self.nodes is None else np.asarray(self.nodes, dtype=int)
        if self.order == "round-robin":
            return base
        rng = np.random.default_rng([self.seed, sweep])
        return base[rng.permutation(base.size)]

    def node_at(self, n: int, t: int) -> int:
        size = n if self.nodes is None else len(self.nodes)
        return int(self.sweep_order(n, t // size)[t % size])


@dataclass(frozen=True)
class FullyParallel:
    pass


UpdateMode = Union[Serial, FullyParallel]


@dataclass(frozen=True)
class FixedPoint:
    state: np.ndarray


@dataclass(frozen=True)
class TwoCycle:
    state_a: np.ndarray
    state_b: np.ndarray


@dataclass(frozen=True)
class StepLimit:
    pass


Outcome = Union[FixedPoint, TwoCycle, StepLimit]


@dataclass
class Trajectory:
    """States and energies of a run.

    Serial runs record one entry per sweep (the initial state, then the state
    after each sweep); parallel runs record one entry per synchronous step.
    For ``n > HISTORY_LIMIT`` only the last two states are kept, energies are
    always complete; ``first_index`` is the step number of ``states[0]``.
    """

    states: list[np.ndarray]
    energies: list[float]
    outcome: Outcome
    flips: int = 0
    first_index: int = 0
    mode: UpdateMode = field(default_factory=Serial)

    @property
    def final(self) -> np.ndarray:
        return self.states[-1]

    @property
    def converged(self) -> bool:
        return not isinstance(self.outcome, StepLimit)

    def records(self) -> Iterable[tuple[int, float, str]]:
        offset = len(self.energies) - len(self.states)
        for k, state in enumerate(self.states):
            yield k + offset, self.energies[k + offset], spins_to_str(state)

    def export(self) -> str:
        return "".join(f"{k}, {e!r}, {s}\n" for k, e, s in self.records())


def _check(net: HopfieldNetwork, V) -> np.ndarray:
    if not isinstance(net, HopfieldNetwork):
        raise InvalidInput("expected a HopfieldNetwork")
    return as_spins(V, net.n)


def local_field(net: HopfieldNetwork, V, i: int) -> float:
    V = _check(net, V)
    if not 0 <= i < net.n:
        raise InvalidInput(f"node index {i} out of range for n={net.n}")
    return float(net.S[i] @ V - net.T[i])


def step(net: HopfieldNetwork, V, mode: UpdateMode, t: int = 0) -> np.ndarray:
    """One time step from ``V``.  In serial mode ``t`` selects the node."""
    V = _check(net, V)
    if isinstance(mode, FullyParallel):
        return np.where(net.fields(V) >= 0, 1, -1).astype(np.int8)
    i = mode.node_at(net.n, t)
    out = V.copy()
    out[i] = 1 if net.S[i] @ V - net.T[i] >= 0 else -1
    return out


def is_stable_state(net: HopfieldNetwork, V) -> bool:
    V = _check(net, V)
    return bool(np.array_equal(np.where(net.fields(V) >= 0, 1, -1), V))


def run(net: HopfieldNetwork, V0, mode: UpdateMode | None = None, max_sweeps: int | None = None) -> Trajectory:
    """Iterate until a fixed point, a 2-cycle (parallel only) or ``max_sweeps``.

    Serial mode requires a non-negative diagonal; that is what guarantees
    convergence.  Hitting the limit yields ``StepLimit``, never a truncated
    success.
    """
    V = _check(net, V0).copy()
    mode = Serial() if mode is None else mode
    if max_sweeps is None:
        max_sweeps = 1000 * net.n
    if max_sweeps < 1:
        raise InvalidInput("max_sweeps must be at least 1")
    if isinstance(mode, FullyParallel):
        return _run_parallel(net, V, max_sweeps)
    if np.any(np.diag(net.S) < 0):
        i = int(np.argmax(np.diag(net.S) < 0))
        raise PreconditionError(f"serial convergence needs a non-negative diagonal; S[{i},{i}] < 0")
    return _run_serial(net, V, mode, max_sweeps)


def _record(states: list, V: np.ndarray, keep_all: bool):
    states.append(V.copy())
    if not keep_all and len(states) > 2:
        del states[0]


def _run_serial(net, V, mode: Serial, max_sweeps: int) -> Trajectory:
    S, T = net.S, net.T
    keep_all = net.n <= HISTORY_LIMIT
    Vf = V.astype(float)
    states, energies = [V.copy()], [net.energy(V)]
    flips = 0
    for sweep in range(max_sweeps):
        changed = False
        for i in mode.sweep_order(net.n, sweep):
            new = 1 if S[i] @ Vf - T[i] >= 0 else -1
            if new != V[i]:
                V[i] = new
                Vf[i] = new
                changed = True
                flips += 1
        _record(states, V, keep_all)
        energies.append(net.energy(V))
        if not changed:
            return Trajectory(states, energies, FixedPoint(V.copy()), flips,
                              len(energies) - len(states), mode)
    return Trajectory(states, energies, StepLimit(), flips, len(energies) - len(states), mode)


def _run_parallel(net, V, max_steps: int) -> Trajectory:
    keep_all = net.n <= HISTORY_LIMIT
    states, energies = [V.copy()], [net.energy(V)]
    prev2, prev1 = None, V.copy()
    flips = 0
    for _ in range(max_steps):
        nxt = np.where(net.fields(prev1) >= 0, 1, -1).astype(np.int8)
        flips += int(np.count_nonzero(nxt != prev1))
        _record(states, nxt, keep_all)
        energies.append(net.energy(nxt))
        first = len(energies) - len(states)
        if np.array_equal(nxt, prev1):
            return Trajectory(states, energies, FixedPoint(nxt), flips, first, FullyParallel())
        if prev2 is not None and np.array_equal(nxt, prev2):
            return Trajectory(states, energies, TwoCycle(prev2.copy(), prev1.copy()), flips, first,
                              FullyParallel())
        prev2, prev1 = prev1, nxt
    return Trajectory(states, energies, StepLimit(), flips, len(energies) - len(states), FullyParallel())
