"""Plain-text file formats.

Matrix:   a line ``n`` followed by n rows of n reals.
Network:  a matrix followed by an optional line of n thresholds (default 0).
Graph:    a line ``n m`` followed by m lines ``i j w`` (0-based).
Patterns: one ``+``/``-`` string per line, all the same length.

Blank lines and lines starting with ``#`` are ignored everywhere.
"""
from __future__ import annotations

from pathlib import Path

import numpy as np

from .core import InvalidInput, as_square, str_to_spins
from .dynamics import HopfieldNetwork
from .mincut import WeightedGraph
from .stability import PatternSet


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if s and not s.startswith("#"):
            out.append((no, s))
    return out


def _reals(no: int, s: str, count: int, what: str) -> list[float]:
    parts = s.split()
    if len(parts) != count:
        raise InvalidInput(f"line {no}: {what} needs {count} values, found {len(parts)}")
    try:
        return [float(p) for p in parts]
    except ValueError:
        raise InvalidInput(f"line {no}: {what} has a non-numeric value in {s!r}") from None


def _parse_matrix(lines, pos: int = 0) -> tuple[np.ndarray, int]:
    if pos >= len(lines):
        raise InvalidInput("missing matrix dimension line")
    no, head = lines[pos]
    try:
        n = int(head)
    except ValueError:
        raise InvalidInput(f"line {no}: expected the dimension n, found {head!r}") from None
    if n < 1:
        raise InvalidInput(f"line {no}: dimension must be positive, got {n}")
    if pos + 1 + n > len(lines):
        raise InvalidInput(f"matrix declares n={n} but only {len(lines) - pos - 1} rows follow")
    rows = [_reals(ln, s, n, f"matrix row {r}") for r, (ln, s) in enumerate(lines[pos + 1:pos + 1 + n])]
    return as_square(np.array(rows)), pos + 1 + n


def parse_matrix(text: str) -> np.ndarray:
    lines = _lines(text)
    M, pos = _parse_matrix(lines)
    if pos != len(lines):
        raise InvalidInput(f"line {lines[pos][0]}: unexpected content after the matrix")
    return M


def parse_network(text: str) -> HopfieldNetwork:
    lines = _lines(text)
    S, pos = _parse_matrix(lines)
    n = S.shape[0]
    if pos == len(lines):
        T = np.zeros(n)
    elif pos + 1 == len(lines):
        T = np.array(_reals(*lines[pos], n, "threshold line"))
    else:
        raise InvalidInput(f"line {lines[pos + 1][0]}: unexpected content after the thresholds")
    return HopfieldNetwork(S, T)


def parse_graph(text: str) -> WeightedGraph:
    lines = _lines(text)
    if not lines:
        raise InvalidInput("empty graph file")
    no, head = lines[0]
    try:
        n, m = (int(p) for p in head.split())
    except ValueError:
        raise InvalidInput(f"line {no}: expected 'n m', found {head!r}") from None
    if len(lines) - 1 != m:
        raise InvalidInput(f"graph declares m={m} edges but has {len(lines) - 1} edge lines")
    edges = []
    for ln, s in lines[1:]:
        parts = s.split()
        if len(parts) != 3:
            raise InvalidInput(f"line {ln}: edge needs 'i j w', found {s!r}")
        try:
            edges.append((int(parts[0]), int(parts[1]), float(parts[2])))
        except ValueError:
            raise InvalidInput(f"line {ln}: malformed edge {s!r}") from None
    return WeightedGraph(n, tuple(edges))


def parse_patterns(text: str) -> PatternSet:
    lines = _lines(text)
    if not lines:
        raise InvalidInput("empty pattern file")
    rows = []
    for no, s in lines:
        try:
            rows.append(str_to_spins(s))
        except InvalidInput as err:
            raise InvalidInput(f"line {no}: {err}") from None
        if rows[-1].size != rows[0].size:
            raise InvalidInput(f"line {no}: pattern length {rows[-1].size} differs from {rows[0].size}")
    return PatternSet(np.array(rows))


def format_matrix(M, fmt: str = "{!r}") -> str:
    M = np.asarray(M)
    body = "\n".join(" ".join(fmt.format(float(v) + 0.0) for v in row) for row in M)
    return f"{M.shape[0]}\n{body}\n"


def format_graph(G: WeightedGraph) -> str:
    body = "".join(f"{i} {j} {w!r}\n" for i, j, w in G.edges)
    return f"{G.n} {len(G.edges)}\n{body}"


def read_text(path: str | Path) -> bytes:
    return Path(path).read_bytes()
