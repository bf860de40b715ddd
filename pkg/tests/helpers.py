import itertools

import numpy as np


def random_symmetric(rng, n, zero_diag=True, scale=1.0):
    A = rng.normal(scale=scale, size=(n, n))
    A = A + A.T
    if zero_diag:
        np.fill_diagonal(A, 0.0)
    return A


def naive_corners(n):
    """All corners via itertools, independent of spincube's corner generators."""
    return [np.array(c, dtype=np.int8) for c in itertools.product((1, -1), repeat=n)]


def naive_optimum(M, sense="max"):
    vals = [(float(x @ M @ x), x) for x in naive_corners(M.shape[0])]
    pick = max if sense == "max" else min
    best = pick(v for v, _ in vals)
    return best, [x for v, x in vals if v == best]


# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE: list[str] = []
