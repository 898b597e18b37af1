"""Matrix factorizations of the split quadric form.

A matrix factorization of f is a pair of r x r polynomial matrices (A, B)
with A*B = B*A = f*I.  The canonical pair for the quadric in 2m+2 variables
is built by the usual doubling recursion starting from ((x1), (x2)); each
step adjoins the two fresh variables of the new coordinate pair in the
off-diagonal blocks, which is what keeps the product identity exact.

Objects carry grading labels (generator and relation degrees of the cokernel
presentation) and doubled torus weights for every generator and relation
slot; downstream linear algebra splits along these weights.
"""

from __future__ import annotations

import itertools
import json

import numpy as np

from .errors import SearchExhausted
from .gflinalg import gf_nullspace
from .ring import (
    MultiPoly,
    PrimeField,
    neg_weight,
    quadric_form,
    format_poly,
)


class MatrixFactorization:
    """One ordered half (A, B) of a factorization A*B = B*A = f*I.

    The module attached to the object is coker(A); B is the partner matrix
    giving the 2-periodic resolution.  gen_degrees/gen_weights label the rows
    of A (module generators), rel_degrees/rel_weights its columns.
    """

    __slots__ = (
        "p",
        "m",
        "size",
        "A",
        "B",
        "gen_degrees",
        "rel_degrees",
        "gen_weights",
        "rel_weights",
    )

    def __init__(self, p, m, A, B, gen_degrees, rel_degrees, gen_weights, rel_weights):
        self.p = p
        self.m = m
        self.size = len(A)
        self.A = A
        self.B = B
        self.gen_degrees = tuple(gen_degrees)
        self.rel_degrees = tuple(rel_degrees)
        self.gen_weights = tuple(tuple(w) for w in gen_weights)
        self.rel_weights = tuple(tuple(w) for w in rel_weights)

    @property
    def n_vars(self):
        return 2 * self.m + 2

    def factored_form(self):
        return quadric_form(self.p, self.m)

    def twist(self, t):
        """Internal twist by t: generator degrees drop by t, weights unchanged."""
        return MatrixFactorization(
            self.p,
            self.m,
            self.A,
            self.B,
            [g - t for g in self.gen_degrees],
            [r - t for r in self.rel_degrees],
            self.gen_weights,
            self.rel_weights,
        )

    def entries_homogeneous(self):
        """True when every entry degree matches the grading labels of both matrices."""
        for mat, tgt, src in (
            (self.A, self.gen_degrees, self.rel_degrees),
            (self.B, self.rel_degrees, [r + 1 for r in self.rel_degrees]),
        ):
            for i, row in enumerate(mat):
                for j, entry in enumerate(row):
                    if entry.is_zero():
                        continue
                    if not entry.is_homogeneous():
                        return False
                    if entry.homogeneous_degree() != src[j] - tgt[i]:
                        return False
        return True

    def to_json_dict(self):
        def mat(rows):
            return [
                [
                    [
                        {"exps": list(exps), "coeff": c}
                        for exps, c in sorted(entry.terms.items())
                    ]
                    for entry in row
                ]
                for row in rows
            ]

        return {
            "size": self.size,
            "A": mat(self.A),
            "B": mat(self.B),
            "p": self.p,
            "m": self.m,
        }

    def to_json(self):
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))

    def format_matrices(self):
        names = [f"x{i + 1}" for i in range(self.n_vars)]
        def fmt(mat):
            return [[format_poly(e, names) for e in row] for row in mat]
        return fmt(self.A), fmt(self.B)


def _zero(p, n_vars):
    return MultiPoly.zero(p, n_vars)


def _pad_matrix(mat, p, old_vars, new_vars):
    out = []
    for row in mat:
        new_row = []
        for entry in row:
            terms = {e + (0,) * (new_vars - old_vars): c for e, c in entry.terms.items()}
            q = MultiPoly(p, new_vars)
            q.terms = terms
            new_row.append(q)
        out.append(new_row)
    return out


def build_factorization_pair(p, m):
    """The canonical pair for the quadric in 2m+2 variables, sizes 2^m.

    Returns (minus, plus): minus presents the spinor module labeled S-,
    plus the one labeled S+; minus.A * plus.A(== minus.B) = q * I.
    """
    PrimeField(p)  # validate the modulus
    if m < 0:
        raise ValueError("m must be nonnegative")
    n_vars = 2
    A = [[MultiPoly.variable(p, n_vars, 0)]]
    B = [[MultiPoly.variable(p, n_vars, 1)]]
    # Weight bookkeeping: targets/sources for A; the pair for B is the mirror.
    tA, sA = [(-1,)], [(1,)]
    tB, sB = [(1,)], [(-1,)]
    for step in range(m):
        old_vars = n_vars
        n_vars += 2
        A = _pad_matrix(A, p, old_vars, n_vars)
        B = _pad_matrix(B, p, old_vars, n_vars)
        xo = MultiPoly.variable(p, n_vars, n_vars - 2)
        xe = MultiPoly.variable(p, n_vars, n_vars - 1)
        zero = _zero(p, n_vars)
        r = len(A)

        def block(top_left, corner_tr, corner_bl, bottom_right):
            out = []
            for i in range(r):
                out.append(list(top_left[i]) + [corner_tr if i == j else zero for j in range(r)])
            for i in range(r):
                out.append([corner_bl if i == j else zero for j in range(r)] + [e.scale(-1) for e in bottom_right[i]])
            return out

        new_A = block(A, xo, xe, B)
        new_B = block(B, xo, xe, A)
        A, B = new_A, new_B
        tA, sA, tB, sB = (
            [w + (-1,) for w in tA] + [w + (1,) for w in tB],
            [w + (-1,) for w in sA] + [w + (1,) for w in sB],
            [w + (-1,) for w in tB] + [w + (1,) for w in tA],
            [w + (-1,) for w in sB] + [w + (1,) for w in sA],
        )

    r = len(A)
    minus = MatrixFactorization(p, m, A, B, [1] * r, [2] * r, tA, sA)
    plus = MatrixFactorization(p, m, B, A, [1] * r, [2] * r, tB, sB)
    return minus, plus


def verify_factorization(mf):
    """True iff A*B = B*A = q*I exactly."""
    q = mf.factored_form()
    r = mf.size
    p = mf.p
    for left, right in ((mf.A, mf.B), (mf.B, mf.A)):
        # The recursion keeps rows sparse; index nonzero entries once.
        left_nz = [
            [(k, e) for k, e in enumerate(row) if not e.is_zero()] for row in left
        ]
        for i in range(r):
            for j in range(r):
                terms = {}
                for k, e in left_nz[i]:
                    other = right[k][j]
                    if other.is_zero():
                        continue
                    for ea, ca in e.terms.items():
                        for eb, cb in other.terms.items():
                            exps = tuple(x + y for x, y in zip(ea, eb))
                            new = (terms.get(exps, 0) + ca * cb) % p
                            if new:
                                terms[exps] = new
                            else:
                                terms.pop(exps, None)
                expected = q.terms if i == j else {}
                if terms != expected:
                    return False
    return True


class Involution:
    """The coordinate swap x_{2i+1} <-> x_{2i+2} for every pair; fixes the quadric."""

    __slots__ = ("m", "perm")

    def __init__(self, m):
        self.m = m
        perm = []
        for i in range(m + 1):
            perm.extend([2 * i + 1, 2 * i])
        self.perm = tuple(perm)

    def apply(self, poly):
        return poly.substitute_variables(self.perm)


def apply_involution(mf, inv=None):
    """Entrywise coordinate swap; the result factors the same quadric."""
    if inv is None:
        inv = Involution(mf.m)
    A = [[inv.apply(e) for e in row] for row in mf.A]
    B = [[inv.apply(e) for e in row] for row in mf.B]
    return MatrixFactorization(
        mf.p,
        mf.m,
        A,
        B,
        mf.gen_degrees,
        mf.rel_degrees,
        [neg_weight(w) for w in mf.gen_weights],
        [neg_weight(w) for w in mf.rel_weights],
    )


def cosyzygy(mf):
    """Swap (A, B) and shift the grading so the result presents the next
    module in the 2-periodic resolution of coker(A).

    Two applications return the original matrices with every degree label
    moved by the degree of the quadric form split across the two steps.
    """
    return MatrixFactorization(
        mf.p,
        mf.m,
        mf.B,
        mf.A,
        [g + 1 for g in mf.gen_degrees],
        [r + 1 for r in mf.rel_degrees],
        mf.rel_weights,
        mf.gen_weights,
    )


def dual(mf):
    """Transpose both matrices and reflect the grading labels.

    The result presents the module of homomorphisms into the quadric ring;
    label reflection is through the degree of the quadric form so that the
    twist conventions of the duality come out right.
    """
    At = [list(col) for col in zip(*mf.A)]
    Bt = [list(col) for col in zip(*mf.B)]
    return MatrixFactorization(
        mf.p,
        mf.m,
        At,
        Bt,
        [2 - r for r in mf.rel_degrees],
        [2 - g for g in mf.gen_degrees],
        [neg_weight(w) for w in mf.rel_weights],
        [neg_weight(w) for w in mf.gen_weights],
    )


class Witness:
    """Invertible constant base change (P, Q) with P * X.A = Y.A * Q."""

    __slots__ = ("P", "Q", "p")

    def __init__(self, P, Q, p):
        self.P = P
        self.Q = Q
        self.p = p

    def to_json_dict(self):
        return {"P": [list(map(int, r)) for r in self.P],
                "Q": [list(map(int, r)) for r in self.Q]}


def _gf_invertible(mat, p):
    a = np.array(mat, dtype=np.int64) % p
    n = a.shape[0]
    rank = 0
    for col in range(n):
        piv = None
        for r in range(rank, n):
            if a[r, col] % p:
                piv = r
                break
        if piv is None:
            return False
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank] = (a[rank] * inv) % p
        for r in range(n):
            if r != rank and a[r, col]:
                a[r] = (a[r] - a[r, col] * a[rank]) % p
        rank += 1
    return True


def find_base_change_witness(X, Y, enumeration_bound=10 ** 6):
    """Search for invertible constant P, Q over F_p with P*X.A = Y.A*Q.

    A witness certifies that the cokernels of X.A and Y.A are isomorphic as
    graded modules.  The solution space of the linear condition is computed
    exactly; candidate coefficient tuples are enumerated in lexicographic
    order so the smallest witness wins.  Returns None when the space contains
    no invertible pair, raises SearchExhausted when it is too big to sweep.
    """
    if X.size != Y.size or X.p != Y.p or X.m != Y.m:
        raise ValueError("witness search needs matrices of equal size over one ring")
    p = X.p
    r = X.size
    n_vars = X.n_vars
    # Unknown vector: P (r*r) then Q (r*r); equations indexed by
    # (row, col, variable): coefficient of x_v in (P*X.A - Y.A*Q)[i][j].
    n_unknowns = 2 * r * r
    rows = []
    for i in range(r):
        for j in range(r):
            for v in range(n_vars):
                row = [0] * n_unknowns
                for k in range(r):
                    exps = [0] * n_vars
                    exps[v] = 1
                    c = X.A[k][j].terms.get(tuple(exps), 0)
                    if c:
                        row[i * r + k] = c % p
                    c2 = Y.A[i][k].terms.get(tuple(exps), 0)
                    if c2:
                        row[r * r + k * r + j] = (-c2) % p
                if any(row):
                    rows.append(row)
    if not rows:
        basis = [tuple(int(i == j) for j in range(n_unknowns)) for i in range(n_unknowns)]
    else:
        basis = gf_nullspace(np.array(rows, dtype=np.int64), p)
    dim = len(basis)
    if dim == 0:
        return None
    if p ** dim - 1 > enumeration_bound:
        raise SearchExhausted(
            f"solution space has {p}^{dim} candidates, above bound {enumeration_bound}"
        )
    for coeffs in itertools.product(range(p), repeat=dim):
        if not any(coeffs):
            continue
        vec = [0] * n_unknowns
        for c, b in zip(coeffs, basis):
            if c:
                for idx, val in enumerate(b):
                    vec[idx] = (vec[idx] + c * val) % p
        P = [vec[i * r:(i + 1) * r] for i in range(r)]
        Q = [vec[r * r + i * r: r * r + (i + 1) * r] for i in range(r)]
        if _gf_invertible(P, p) and _gf_invertible(Q, p):
            return Witness(P, Q, p)
    return None
