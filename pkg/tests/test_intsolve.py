import random
from fractions import Fraction

from qfrob.intsolve import (
    NO_SOLUTION,
    UNDERDETERMINED,
    UNIQUE,
    solve_affine,
    solve_exact,
)


def test_identity_system():
    res = solve_exact([[1, 0], [0, 1]], [7, -3])
    assert res.status == UNIQUE and res.solution == (7, -3)


def test_underdetermined():
    res = solve_exact([[1, 1]], [2])
    assert res.status == UNDERDETERMINED


def test_hand_elimination():
    res = solve_exact([[1, 1], [1, 2]], [3, 5])
    assert res.status == UNIQUE and res.solution == (1, 2)


def test_inconsistent():
    res = solve_exact([[1, 1], [1, 1]], [1, 2])
    assert res.status == NO_SOLUTION


def test_non_integral_solution_has_no_integer_point():
    res = solve_exact([[2]], [1])
    assert res.status == NO_SOLUTION


def test_overdetermined_consistent():
    res = solve_exact([[1, 0], [0, 1], [1, 1]], [2, 3, 5])
    assert res.status == UNIQUE and res.solution == (2, 3)


def _oracle(matrix, rhs):
    """Plain Fraction-based Gaussian elimination for cross-checking."""
    n_rows, n_cols = len(matrix), len(matrix[0])
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    rank = 0
    pivots = []
    for col in range(n_cols):
        piv = next((r for r in range(rank, n_rows) if aug[r][col] != 0), None)
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        aug[rank] = [v / aug[rank][col] for v in aug[rank]]
        for r in range(n_rows):
            if r != rank and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[rank])]
        pivots.append(col)
        rank += 1
    if any(all(aug[r][c] == 0 for c in range(n_cols)) and aug[r][n_cols] != 0
           for r in range(n_rows)):
        return NO_SOLUTION, None
    if rank < n_cols:
        return UNDERDETERMINED, None
    sol = [Fraction(0)] * n_cols
    for r, c in enumerate(pivots):
        sol[c] = aug[r][n_cols]
    if any(v.denominator != 1 for v in sol):
        return NO_SOLUTION, None
    return UNIQUE, tuple(int(v) for v in sol)


def test_random_systems_against_rational_oracle():
    rng = random.Random(20240817)
    for _ in range(300):
        n_rows = rng.randint(1, 6)
        n_cols = rng.randint(1, 6)
        matrix = [[rng.randint(-9, 9) for _ in range(n_cols)] for _ in range(n_rows)]
        rhs = [rng.randint(-9, 9) for _ in range(n_rows)]
        got = solve_exact(matrix, rhs)
        want_status, want_sol = _oracle(matrix, rhs)
        assert got.status == want_status, (matrix, rhs)
        if want_status == UNIQUE:
            assert got.solution == want_sol
            # Verify by substitution, never trusting either path blindly.
            for row, b in zip(matrix, rhs):
                assert sum(a * x for a, x in zip(row, got.solution)) == b


def test_solve_affine_shapes():
    particular, basis = solve_affine([[1, 1]], [2])
    assert len(basis) == 1
    x = [p + b for p, b in zip(particular, basis[0])]
    assert x[0] + x[1] == 2
    assert solve_affine([[1], [1]], [1, 2]) is None
    particular, basis = solve_affine([[2, 0], [0, 4]], [1, 2])
    assert basis == []
    assert particular == (Fraction(1, 2), Fraction(1, 2))
