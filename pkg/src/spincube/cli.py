"""``spincube`` command-line front end.

Exit status: 0 on success, 1 for malformed input or a violated precondition,
2 when an exhaustive scan exceeds its budget or a numerical method fails.
"""
from __future__ import annotations

import argparse
import hashlib
import io
import json
import sys
from dataclasses import dataclass
from typing import TextIO

import numpy as np

from . import formats
from .core import (
    BudgetError,
    InvalidInput,
    NumericalFailure,
    PreconditionError,
    as_symmetric,
    canonicalize,
    spins_to_str,
    str_to_spins,
    volterra_form,
)
from .dynamics import FixedPoint, FullyParallel, Serial, TwoCycle, run
from .mincut import brute_force_mincut, mincut_heuristic
from .oracle import brute_force_energy, brute_force_optimum, default_budget, enumerate_stable_vectors
from .spectral import HeuristicIncomplete, corner_value_bound, eigen_decompose, spectral_heuristic
from .stability import independent_count, report, synthesize_memory


@dataclass
class RunConfig:
    subcommand: str
    input_path: str
    seed: int = 0
    mode: str = "serial"
    budget: int | None = None
    output_format: str = "text"
    sense: str = "max"
    kind: str | None = None
    start: str | None = None
    vector: str | None = None
    max_sweeps: int | None = None
    exact: bool = False
    heuristic: bool = False
    volterra: bool = False
    allow_trivial: bool = False
    eigen_method: str = "jacobi"

    def update_mode(self):
        if self.mode == "parallel":
            return FullyParallel()
        if self.mode == "random":
            return Serial("random", self.seed)
        if self.mode == "serial":
            return Serial()
        raise InvalidInput(f"unknown mode {self.mode!r}")


class Reporter:
    """Writes results as ``key: value`` text or as one JSON object per line."""

    def __init__(self, cfg: RunConfig, out: TextIO, digest: str):
        self.cfg, self.out = cfg, out
        self.json = cfg.output_format == "json-lines"
        self.provenance = {
            "command": cfg.subcommand,
            "input_sha256": digest,
            "seed": cfg.seed,
            "mode": cfg.mode,
            "budget": default_budget() if cfg.budget is None else cfg.budget,
        }
        if self.json:
            self.emit("provenance", **self.provenance)
        else:
            out.write("# " + " ".join(f"{k}={v}" for k, v in self.provenance.items()) + "\n")

    def emit(self, record: str, **fields):
        if self.json:
            obj = {"record": record, "command": self.cfg.subcommand, **{k: _plain(v) for k, v in fields.items()}}
            self.out.write(json.dumps(obj, sort_keys=False) + "\n")
        else:
            self.out.write(f"{record}: " + ", ".join(f"{k}={_text(v)}" for k, v in fields.items()) + "\n")

    def block(self, title: str, text: str):
        """Raw matrix text in text mode, a ``rows`` field in json mode."""
        if self.json:
            rows = [line.split() for line in text.strip().splitlines()[1:]]
            self.emit(title, rows=[[float(v) for v in r] for r in rows])
        else:
            self.out.write(f"# {title}\n{text}")


def _plain(v):
    if isinstance(v, np.ndarray):
        return v.tolist()
    if isinstance(v, np.generic):
        return v.item()
    return v


def _text(v):
    if isinstance(v, float):
        return repr(v + 0.0)
    return str(_plain(v))


def _load(cfg: RunConfig) -> tuple[bytes, str]:
    try:
        raw = formats.read_text(cfg.input_path)
    except OSError as err:
        raise InvalidInput(f"cannot read {cfg.input_path}: {err.strerror}") from None
    try:
        return raw, raw.decode("utf-8")
    except UnicodeDecodeError:
        raise InvalidInput(f"{cfg.input_path} is not UTF-8 text") from None


def _cmd_canonicalize(cfg, text, rep):
    C = canonicalize(formats.parse_matrix(text))
    rep.block("canonical", formats.format_matrix(C))
    if cfg.volterra:
        rep.block("volterra", formats.format_matrix(volterra_form(C)))


def _cmd_spectrum(cfg, text, rep):
    M = as_symmetric(formats.parse_matrix(text))
    spec = eigen_decompose(M, method=cfg.eigen_method)
    rep.block("eigenvalues", formats.format_matrix(np.diag(spec.values)))
    rep.block("eigenvectors", formats.format_matrix(spec.vectors))
    rep.emit("summary", mu_max=spec.mu_max, degenerate_top=spec.top_degenerate, sweeps=spec.sweeps)


def _serial_mode(cfg):
    mode = cfg.update_mode()
    if isinstance(mode, FullyParallel):
        raise PreconditionError("the heuristic runs serial dynamics; use --mode serial or random")
    return mode


def _cmd_heuristic(cfg, text, rep):
    net = formats.parse_network(text)
    res = spectral_heuristic(net, _serial_mode(cfg), cfg.max_sweeps, cfg.eigen_method)
    C = canonicalize(net.S)
    # energy = x'Cx + trace(S) - 2x'T, and x'Cx <= n * mu_max(C)
    bound = corner_value_bound(C) + float(np.trace(net.S)) + 2.0 * float(np.sum(np.abs(net.T)))
    rep.emit("heuristic", state=spins_to_str(res.state), energy=res.energy, start=spins_to_str(res.start),
             start_energy=res.start_energy, bound=bound, gap=bound - res.energy,
             degenerate_top=res.degenerate, sweeps=len(res.trajectory.energies) - 1)
    budget = default_budget() if cfg.budget is None else cfg.budget
    if net.n <= budget:
        opt = brute_force_energy(net.S, net.T, budget)
        rep.emit("oracle", optimum=opt.optimum_value, attained=res.energy == opt.optimum_value,
                 optimizers=[spins_to_str(x) for x in opt.optimizers])


def _cmd_dynamics(cfg, text, rep):
    net = formats.parse_network(text)
    start = str_to_spins(cfg.start) if cfg.start else np.ones(net.n, dtype=np.int8)
    traj = run(net, start, cfg.update_mode(), cfg.max_sweeps)
    for k, e, s in traj.records():
        rep.emit("step", step=k, energy=e, state=s)
    out = traj.outcome
    if isinstance(out, FixedPoint):
        rep.emit("outcome", kind="fixed-point", state=spins_to_str(out.state), flips=traj.flips)
    elif isinstance(out, TwoCycle):
        rep.emit("outcome", kind="two-cycle", state_a=spins_to_str(out.state_a),
                 state_b=spins_to_str(out.state_b), flips=traj.flips)
    else:
        rep.emit("outcome", kind="step-limit", state=spins_to_str(traj.final), flips=traj.flips)


def _cmd_stable(cfg, text, rep):
    M = formats.parse_matrix(text)
    if cfg.vector:
        r = report(M, str_to_spins(cfg.vector))
        rep.emit("report", vector=spins_to_str(r.vector), stable=r.stable, anti_stable=r.anti_stable,
                 value=r.value)
        return
    _enumerate(cfg, M, cfg.kind or "stable", rep)


def _enumerate(cfg, M, kind, rep):
    found = enumerate_stable_vectors(M, kind, cfg.budget)
    for x, v in found:
        rep.emit(kind, vector=spins_to_str(x), value=v)
    rep.emit("count", kind=kind, pairs=len(found), independent=independent_count([x for x, _ in found]))


def _cmd_brute(cfg, text, rep):
    M = formats.parse_matrix(text)
    res = brute_force_optimum(M, cfg.sense, cfg.budget)
    rep.emit("optimum", sense=cfg.sense, value=res.optimum_value,
             optimizers=[spins_to_str(x) for x in res.optimizers], corners_scanned=res.corners_scanned)
    if cfg.kind:
        _enumerate(cfg, M, cfg.kind, rep)


def _cmd_mincut(cfg, text, rep):
    G = formats.parse_graph(text)
    exact = cfg.exact or not cfg.heuristic
    weights = {}
    if cfg.heuristic:
        P, w, _ = mincut_heuristic(G, _serial_mode(cfg), cfg.max_sweeps)
        rep.emit("heuristic", partition=spins_to_str(P.canonical().spins()), weight=w)
        weights["heuristic"] = w
    if exact:
        P, w = brute_force_mincut(G, cfg.allow_trivial, cfg.budget)
        rep.emit("exact", partition=spins_to_str(P.spins()), weight=w)
        weights["exact"] = w
    if len(weights) == 2:
        rep.emit("gap", gap=weights["heuristic"] - weights["exact"])


def _cmd_memory(cfg, text, rep):
    P = formats.parse_patterns(text)
    W = synthesize_memory(P)
    rep.block("memory", formats.format_matrix(W, "{:g}"))
    for J in P.patterns:
        r = report(W, J)
        eigen = bool(np.array_equal(W @ J, (P.N - P.s) * J))
        rep.emit("pattern", vector=spins_to_str(J), stable=r.stable, value=r.value, eigenvalue_n_minus_s=eigen)
    rep.emit("summary", N=P.N, s=P.s, expected_value=P.N * (P.N - P.s), saturated=P.saturated)


HANDLERS = {
    "canonicalize": _cmd_canonicalize,
    "spectrum": _cmd_spectrum,
    "heuristic": _cmd_heuristic,
    "dynamics": _cmd_dynamics,
    "stable": _cmd_stable,
    "brute": _cmd_brute,
    "mincut": _cmd_mincut,
    "memory": _cmd_memory,
}


def run_command(cfg: RunConfig, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    if cfg.subcommand not in HANDLERS:
        err.write(f"spincube: unknown subcommand {cfg.subcommand!r}\n")
        return 1
    buf = io.StringIO()
    try:
        raw, text = _load(cfg)
        rep = Reporter(cfg, buf, hashlib.sha256(raw).hexdigest())
        HANDLERS[cfg.subcommand](cfg, text, rep)
    except (InvalidInput, PreconditionError) as e:
        err.write(f"spincube {cfg.subcommand}: {cfg.input_path}: {e}\n")
        return 1
    except (BudgetError, NumericalFailure, HeuristicIncomplete) as e:
        err.write(f"spincube {cfg.subcommand}: {cfg.input_path}: {e}\n")
        return 2
    out.write(buf.getvalue())
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spincube", description="Quadratic forms on the +/-1 hypercube.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input_path", help="input file")
    common.add_argument("--seed", type=int, default=0, help="seed for random schedules (default 0)")
    common.add_argument("--mode", choices=("serial", "random", "parallel"), default="serial",
                        help="update mode: round-robin serial, random-permutation serial, or fully parallel")
    common.add_argument("--budget", type=int, default=None,
                        help="largest n for exhaustive scans (default $SPINCUBE_BUDGET or 22)")
    common.add_argument("--format", dest="output_format", choices=("text", "json-lines"), default="text")
    common.add_argument("--max-sweeps", type=int, default=None)
    common.add_argument("--eigen-method", choices=("jacobi", "lapack"), default="jacobi")
    sub = p.add_subparsers(dest="subcommand", required=True)

    c = sub.add_parser("canonicalize", parents=[common], help="symmetrize and zero the diagonal")
    c.add_argument("--volterra", action="store_true", help="also print the strictly lower-triangular form")
    sub.add_parser("spectrum", parents=[common], help="eigendecomposition of a symmetric matrix")
    sub.add_parser("heuristic", parents=[common], help="top-eigenvector start + serial dynamics")
    d = sub.add_parser("dynamics", parents=[common], help="run the network from a start state")
    d.add_argument("--start", help="start state as a +/- string (default all +)")
    s = sub.add_parser("stable", parents=[common], help="stable / anti-stable corners")
    s.add_argument("--kind", choices=("stable", "anti-stable"), default=None)
    s.add_argument("--vector", help="report on one corner instead of enumerating")
    b = sub.add_parser("brute", parents=[common], help="exhaustive optimum over all corners")
    b.add_argument("--sense", choices=("max", "min"), default="max")
    b.add_argument("--kind", choices=("stable", "anti-stable"), default=None,
                   help="also enumerate stable or anti-stable corners")
    m = sub.add_parser("mincut", parents=[common], help="minimum cut of a weighted graph")
    m.add_argument("--exact", action="store_true", help="exhaustive minimum (default when no flag given)")
    m.add_argument("--heuristic", action="store_true", help="spectral heuristic on the graph's network")
    m.add_argument("--allow-trivial", action="store_true",
                   help="let the exact search return U = all vertices (weight 0)")
    sub.add_parser("memory", parents=[common], help="outer-product memory from orthogonal patterns")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**vars(args))
    return run_command(cfg)


if __name__ == "__main__":
    sys.exit(main())
