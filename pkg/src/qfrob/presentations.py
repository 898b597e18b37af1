"""Graded module presentations over the quadric ring.

A presentation is a homogeneous matrix mapping a graded free module onto the
relations of the module, together with degree and torus-weight labels for
both sides.  Modules backed by a matrix factorization also carry the partner
matrix, which gives the next step of the 2-periodic resolution and is what
Ext computations and stable-Hom quotients consume.

Presentations with ``q_closed`` set have the quadric form already in the
column span of their relations (matrix factorization cokernels, free modules
presented by q itself).  Frobenius pullbacks do not, and the homomorphism
engine augments them on the fly.
"""

from __future__ import annotations

from .errors import UnsupportedParameters
from .ring import (
    MultiPoly,
    PrimeField,
    quadric_form,
    scale_weight,
)
from .matfac import build_factorization_pair


class ModulePresentation:
    __slots__ = (
        "p",
        "m",
        "gen_degrees",
        "gen_weights",
        "rel_degrees",
        "rel_weights",
        "matrix",
        "partner",
        "partner_src_degrees",
        "partner_src_weights",
        "q_closed",
    )

    def __init__(
        self,
        p,
        m,
        gen_degrees,
        gen_weights,
        rel_degrees,
        rel_weights,
        matrix,
        partner=None,
        partner_src_degrees=None,
        partner_src_weights=None,
        q_closed=False,
    ):
        self.p = p
        self.m = m
        self.gen_degrees = tuple(gen_degrees)
        self.gen_weights = tuple(tuple(w) for w in gen_weights)
        self.rel_degrees = tuple(rel_degrees)
        self.rel_weights = tuple(tuple(w) for w in rel_weights)
        self.matrix = tuple(tuple(row) for row in matrix)
        self.partner = (
            tuple(tuple(row) for row in partner) if partner is not None else None
        )
        self.partner_src_degrees = (
            tuple(partner_src_degrees) if partner_src_degrees is not None else None
        )
        self.partner_src_weights = (
            tuple(tuple(w) for w in partner_src_weights)
            if partner_src_weights is not None
            else None
        )
        self.q_closed = q_closed

    @property
    def n_vars(self):
        return 2 * self.m + 2

    @property
    def n_gens(self):
        return len(self.gen_degrees)

    @property
    def n_rels(self):
        return len(self.rel_degrees)

    @classmethod
    def from_matrix_factorization(cls, mf):
        return cls(
            mf.p,
            mf.m,
            mf.gen_degrees,
            mf.gen_weights,
            mf.rel_degrees,
            mf.rel_weights,
            mf.A,
            partner=mf.B,
            partner_src_degrees=[r + 1 for r in mf.rel_degrees],
            partner_src_weights=mf.gen_weights,
            q_closed=True,
        )

    @classmethod
    def free_module(cls, p, m, twist=0, count=1):
        """The free module on generators of twist t, presented by q itself."""
        PrimeField(p)
        n_vars = 2 * m + 2
        q = quadric_form(p, m)
        zero = MultiPoly.zero(p, n_vars)
        w0 = (0,) * (m + 1)
        matrix = [
            [q if i == j else zero for j in range(count)] for i in range(count)
        ]
        one = MultiPoly.constant(p, n_vars, 1)
        partner = [
            [one if i == j else zero for j in range(count)] for i in range(count)
        ]
        return cls(
            p,
            m,
            [-twist] * count,
            [w0] * count,
            [-twist + 2] * count,
            [w0] * count,
            matrix,
            partner=partner,
            partner_src_degrees=[-twist + 2] * count,
            partner_src_weights=[w0] * count,
            q_closed=True,
        )

    def twist(self, t):
        if t == 0:
            return self
        return ModulePresentation(
            self.p,
            self.m,
            [g - t for g in self.gen_degrees],
            self.gen_weights,
            [r - t for r in self.rel_degrees],
            self.rel_weights,
            self.matrix,
            partner=self.partner,
            partner_src_degrees=(
                [s - t for s in self.partner_src_degrees]
                if self.partner_src_degrees is not None
                else None
            ),
            partner_src_weights=self.partner_src_weights,
            q_closed=self.q_closed,
        )

    def direct_sum(self, other):
        if (self.p, self.m) != (other.p, other.m):
            raise ValueError("direct sum over different rings")
        zero = MultiPoly.zero(self.p, self.n_vars)

        def block(a, b, rows_a, cols_a, rows_b, cols_b):
            out = []
            for i in range(rows_a):
                out.append(list(a[i]) + [zero] * cols_b)
            for i in range(rows_b):
                out.append([zero] * cols_a + list(b[i]))
            return out

        matrix = block(
            self.matrix, other.matrix, self.n_gens, self.n_rels, other.n_gens, other.n_rels
        )
        partner = None
        psd = None
        psw = None
        if self.partner is not None and other.partner is not None:
            partner = block(
                self.partner,
                other.partner,
                len(self.partner),
                len(self.partner[0]) if self.partner else 0,
                len(other.partner),
                len(other.partner[0]) if other.partner else 0,
            )
            psd = self.partner_src_degrees + other.partner_src_degrees
            psw = self.partner_src_weights + other.partner_src_weights
        return ModulePresentation(
            self.p,
            self.m,
            self.gen_degrees + other.gen_degrees,
            self.gen_weights + other.gen_weights,
            self.rel_degrees + other.rel_degrees,
            self.rel_weights + other.rel_weights,
            matrix,
            partner=partner,
            partner_src_degrees=psd,
            partner_src_weights=psw,
            q_closed=self.q_closed and other.q_closed,
        )

    def periodicity_shift(self):
        """Presentation of the next module in the 2-periodic resolution."""
        if self.partner is None:
            raise UnsupportedParameters("periodicity shift needs a partner matrix")
        return ModulePresentation(
            self.p,
            self.m,
            [g + 1 for g in self.gen_degrees],
            self.rel_weights,
            [r + 1 for r in self.rel_degrees],
            self.gen_weights,
            self.partner,
            partner=self.matrix,
            partner_src_degrees=[r + 2 for r in self.rel_degrees],
            partner_src_weights=self.rel_weights,
            q_closed=True,
        )


def frobenius_pullback_presentation(pres, e, p=None):
    """Pull back along the e-th Frobenius: x_i -> x_i^(p^e), degrees scaled.

    The stated relation matrix is the entrywise power substitution; the
    quadric relation itself is no longer in its column span, so the result
    is marked as needing closure (the engine adds q-columns when solving).
    """
    if p is not None and p != pres.p:
        raise ValueError("presentation is over a different prime")
    if e < 0:
        raise ValueError("e must be nonnegative")
    if e == 0:
        return pres
    q = pres.p ** e
    matrix = [
        [entry.frobenius_power(q) for entry in row] for row in pres.matrix
    ]
    partner = None
    if pres.partner is not None:
        partner = [
            [entry.frobenius_power(q) for entry in row] for row in pres.partner
        ]
    return ModulePresentation(
        pres.p,
        pres.m,
        [q * g for g in pres.gen_degrees],
        [scale_weight(w, q) for w in pres.gen_weights],
        [q * r for r in pres.rel_degrees],
        [scale_weight(w, q) for w in pres.rel_weights],
        matrix,
        partner=partner,
        partner_src_degrees=(
            [q * s for s in pres.partner_src_degrees]
            if pres.partner_src_degrees is not None
            else None
        ),
        partner_src_weights=(
            [scale_weight(w, q) for w in pres.partner_src_weights]
            if pres.partner_src_weights is not None
            else None
        ),
        q_closed=False,
    )


_PAIR_CACHE = {}


def factorization_pair(p, m):
    key = (p, m)
    if key not in _PAIR_CACHE:
        _PAIR_CACHE[key] = build_factorization_pair(p, m)
    return _PAIR_CACHE[key]


def spinor_presentation(p, m, sign, twist=0):
    """Presentation of the spinor module S- (sign '-') or S+ (sign '+')."""
    minus, plus = factorization_pair(p, m)
    mf = minus if sign == "-" else plus
    if twist:
        mf = mf.twist(twist)
    return ModulePresentation.from_matrix_factorization(mf)


def spinor_sum_presentation(p, m, twist=0):
    return spinor_presentation(p, m, "+", twist).direct_sum(
        spinor_presentation(p, m, "-", twist)
    )
