"""Depth-first short-vector enumeration on a quadratic form.

Floating point is used only for pruning bounds (with a padded radius);
every candidate is confirmed against the exact integer Gram matrix, so
the reported counts are certificates.
"""

from __future__ import annotations

import math

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a hard dependency
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f

#: relative padding of the pruning radius, so float rounding can never
#: exclude a true candidate (exact recheck discards the extras)
RADIUS_MARGIN = 1e-6


@njit(cache=True)
def _enumerate_core(chol, gram, bound, budget):
    """Count lattice vectors with scaled norm in (0, bound].

    chol: lower Cholesky factor of gram (float64).  Enumerates one
    vector per antipodal pair (outermost nonzero coordinate positive)
    and records 2 per pair.  Returns (counts, nodes, complete).
    """
    n = gram.shape[0]
    counts = np.zeros(bound + 1, dtype=np.int64)
    boundf = bound * (1.0 + RADIUS_MARGIN) + 1e-9
    x = np.zeros(n, dtype=np.int64)
    lo = np.zeros(n, dtype=np.int64)
    hi = np.zeros(n, dtype=np.int64)
    partial = np.zeros(n + 1, dtype=np.float64)
    sigma = np.zeros((n + 1, n), dtype=np.float64)
    zf = np.zeros(n, dtype=np.bool_)
    nodes = 0

    # initialize the top level
    level = n - 1
    zf[level] = True
    rem = boundf - partial[level + 1]
    d = chol[level, level]
    c = sigma[level + 1, level] / d
    rad = math.sqrt(rem) / d + 1e-9
    lo[level] = int(math.ceil(-c - rad))
    hi[level] = int(math.floor(-c + rad))
    if zf[level] and lo[level] < 0:
        lo[level] = 0
    x[level] = lo[level] - 1

    complete = True
    while True:
        x[level] += 1
        if x[level] > hi[level]:
            level += 1
            if level >= n:
                break
            continue
        nodes += 1
        if nodes > budget:
            complete = False
            break
        t = chol[level, level] * x[level] + sigma[level + 1, level]
        partial[level] = partial[level + 1] + t * t
        if partial[level] > boundf:
            continue
        if level == 0:
            if zf[0] and x[0] == 0:
                continue
            # exact integer norm
            norm = 0
            for i in range(n):
                if x[i] != 0:
                    s = 0
                    for j in range(n):
                        s += gram[i, j] * x[j]
                    norm += x[i] * s
            if 0 < norm <= bound:
                counts[norm] += 2
            continue
        # descend
        for kk in range(level):
            sigma[level, kk] = sigma[level + 1, kk] + x[level] * chol[level, kk]
        zf[level - 1] = zf[level] and x[level] == 0
        level -= 1
        rem = boundf - partial[level + 1]
        if rem < 0.0:
            rem = 0.0
        d = chol[level, level]
        c = sigma[level + 1, level] / d
        rad = math.sqrt(rem) / d + 1e-9
        lo[level] = int(math.ceil(-c - rad))
        hi[level] = int(math.floor(-c + rad))
        if zf[level] and lo[level] < 0:
            lo[level] = 0
        x[level] = lo[level] - 1

    counts[0] = 1
    return counts, nodes, complete


def enumerate_by_norm(gram_rows, bound: int, budget: int = 10 ** 9):
    """Exact counts of lattice vectors by scaled norm 0..bound.

    gram_rows: exact integer Gram matrix (positive definite, ideally of
    an LLL-reduced basis).  Returns (counts ndarray, nodes, complete).
    """
    gram = np.array(gram_rows, dtype=np.int64)
    n = gram.shape[0]
    if bound < 0:
        raise ValueError("bound must be >= 0")
    if bound == 0 or n == 0:
        counts = np.zeros(bound + 1, dtype=np.int64)
        counts[0] = 1
        return counts, 0, True
    chol = np.linalg.cholesky(gram.astype(np.float64))
    return _enumerate_core(chol, gram, int(bound), int(budget))
