"""Dense exact linear algebra over F_p on numpy integer arrays."""

from __future__ import annotations

import numpy as np


def gf_rank(a, p):
    """Rank over F_p; destroys its argument (pass a copy to keep it)."""
    if a.size == 0:
        return 0
    a %= p
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv], col:] = a[[piv, rank], col:]
        inv = pow(int(a[rank, col]), p - 2, p)
        if inv != 1:
            a[rank, col:] = (a[rank, col:] * inv) % p
        below = a[rank + 1:, col]
        hit = np.nonzero(below)[0]
        if hit.size:
            idx = rank + 1 + hit
            a[idx, col:] = (a[idx, col:] - np.outer(below[hit], a[rank, col:])) % p
        rank += 1
    return rank


def gf_rref(a, p):
    """Reduced row echelon form over F_p; returns (matrix, pivot column list)."""
    a = a % p
    rows, cols = a.shape
    pivots = []
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        if inv != 1:
            a[rank] = (a[rank] * inv) % p
        other = np.nonzero(a[:, col])[0]
        for r in other:
            if r != rank:
                a[r] = (a[r] - a[r, col] * a[rank]) % p
        pivots.append(col)
        rank += 1
    return a, pivots


def gf_nullspace(a, p):
    """Canonical nullspace basis over F_p as a list of int tuples.

    Basis vectors are indexed by the free columns in increasing order, each
    with a 1 in its free position, so the result is deterministic.
    """
    a = np.asarray(a, dtype=np.int64)
    if a.size == 0:
        n = a.shape[1] if a.ndim == 2 else 0
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rref, pivots = gf_rref(a.copy(), p)
    n = a.shape[1]
    pivot_set = set(pivots)
    free_cols = [c for c in range(n) if c not in pivot_set]
    basis = []
    for f in free_cols:
        vec = [0] * n
        vec[f] = 1
        for row_idx, c in enumerate(pivots):
            val = int(rref[row_idx, f]) % p
            if val:
                vec[c] = (-val) % p
        basis.append(tuple(vec))
    return basis
