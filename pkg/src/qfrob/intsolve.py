"""Exact linear solving over the integers by fraction-free elimination."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

UNIQUE = "unique"
NO_SOLUTION = "no_solution"
UNDERDETERMINED = "underdetermined"


@dataclass(frozen=True)
class IntLinearSystem:
    """An exact integer system: matrix rows with a right-hand column."""

    matrix: tuple
    rhs: tuple

    def __post_init__(self):
        if len(self.matrix) != len(self.rhs):
            raise ValueError("rhs length does not match matrix")
        widths = {len(row) for row in self.matrix}
        if len(widths) > 1:
            raise ValueError("ragged matrix")


@dataclass(frozen=True)
class ExactSolveResult:
    status: str
    solution: Optional[tuple] = None

    def is_unique(self):
        return self.status == UNIQUE


def solve_system(system):
    return solve_exact(system.matrix, system.rhs)


def solve_exact(matrix, rhs):
    """Solve matrix * x = rhs for an integer vector x, exactly.

    Returns UNIQUE only when the coefficient matrix has full column rank and
    the (then unique) rational solution is integral.  Rank-deficient systems
    report UNDERDETERMINED; inconsistent or non-integral ones NO_SOLUTION.
    Bareiss-style fraction-free elimination keeps every intermediate value an
    integer regardless of entry size.
    """
    n_rows = len(matrix)
    n_cols = len(matrix[0]) if n_rows else 0
    if len(rhs) != n_rows:
        raise ValueError("rhs length does not match matrix")
    aug = [list(map(int, row)) + [int(b)] for row, b in zip(matrix, rhs)]
    width = n_cols + 1

    pivot_rows = []  # (row, col) in elimination order
    prev_pivot = 1
    rank = 0
    for col in range(n_cols):
        piv = None
        for r in range(rank, n_rows):
            if aug[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        if piv != rank:
            aug[rank], aug[piv] = aug[piv], aug[rank]
        pv = aug[rank][col]
        for r in range(rank + 1, n_rows):
            factor = aug[r][col]
            if factor == 0 and prev_pivot == 1:
                continue
            row_r = aug[r]
            row_p = aug[rank]
            for c in range(col, width):
                row_r[c] = (row_r[c] * pv - factor * row_p[c]) // prev_pivot
        prev_pivot = pv
        pivot_rows.append((rank, col))
        rank += 1

    for r in range(rank, n_rows):
        if any(aug[r][c] != 0 for c in range(n_cols)):
            raise AssertionError("elimination left a nonzero row below the rank")
        if aug[r][n_cols] != 0:
            return ExactSolveResult(NO_SOLUTION)

    if rank < n_cols:
        return ExactSolveResult(UNDERDETERMINED)

    # Back substitution over the rationals on the triangular integer system.
    x = [Fraction(0)] * n_cols
    for row, col in reversed(pivot_rows):
        acc = Fraction(aug[row][n_cols])
        for c in range(col + 1, n_cols):
            acc -= aug[row][c] * x[c]
        x[col] = acc / aug[row][col]
    if any(v.denominator != 1 for v in x):
        return ExactSolveResult(NO_SOLUTION)
    return ExactSolveResult(UNIQUE, tuple(int(v) for v in x))


def solve_affine(matrix, rhs):
    """Full rational solution set of matrix * x = rhs.

    Returns (particular, nullspace_basis) with Fraction entries, or None when
    the system is inconsistent.  Coordinates on which every nullspace vector
    vanishes are determined even when the system is underdetermined.
    """
    n_rows = len(matrix)
    n_cols = len(matrix[0]) if n_rows else 0
    aug = [
        [Fraction(v) for v in row] + [Fraction(b)]
        for row, b in zip(matrix, rhs)
    ]
    pivots = []
    rank = 0
    for col in range(n_cols):
        piv = None
        for r in range(rank, n_rows):
            if aug[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        if piv != rank:
            aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = aug[rank][col]
        aug[rank] = [v / inv for v in aug[rank]]
        for r in range(n_rows):
            if r != rank and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[rank])]
        pivots.append(col)
        rank += 1
    for r in range(rank, n_rows):
        if aug[r][n_cols] != 0:
            return None
    pivot_set = set(pivots)
    particular = [Fraction(0)] * n_cols
    for row_idx, col in enumerate(pivots):
        particular[col] = aug[row_idx][n_cols]
    basis = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * n_cols
        vec[free] = Fraction(1)
        for row_idx, col in enumerate(pivots):
            vec[col] = -aug[row_idx][free]
        basis.append(tuple(vec))
    return tuple(particular), basis
