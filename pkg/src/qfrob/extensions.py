"""Extension-shape bookkeeping and the multiplicity forcing argument.

An extension of spinor-sum powers by spinor-sum powers on the quadric is,
up to isomorphism, a direct sum of twisted spinors and trivial line bundle
copies; the extension splits exactly when no line bundle copies occur.  The
forcing step says: once the 2x2 spinor multiplicity matrix of the Frobenius
pushforward is symmetric and nonzero, comparing multiplicities on both sides
of a split pushforward forces the spinor counts to pair up evenly, which
kills the line bundle copies by a rank count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedShape, PreconditionFailed


@dataclass(frozen=True)
class ExtensionShape:
    """Summand counts of the middle term of a spinor-sum extension.

    alpha copies of S(-m) on the sub side, beta copies of S(-m+1) on the
    quotient side; the middle decomposes into alpha_plus/alpha_minus copies
    of the single spinors at twist -m, beta_plus/beta_minus at twist -m+1,
    and rho copies of O(-m).
    """

    m: int
    alpha: int
    beta: int
    alpha_plus: int
    alpha_minus: int
    beta_plus: int
    beta_minus: int
    rho: int

    def rank_balance_holds(self):
        full = 2 ** self.m
        half = 2 ** (self.m - 1)
        lhs = full * (self.alpha + self.beta)
        rhs = half * (
            self.alpha_plus + self.alpha_minus + self.beta_plus + self.beta_minus
        ) + self.rho
        return lhs == rhs


def analyze_extension_shape(shape):
    """Read off the line-bundle count and the split verdict.

    The extension splits exactly when rho = 0.
    """
    if min(
        shape.alpha,
        shape.beta,
        shape.alpha_plus,
        shape.alpha_minus,
        shape.beta_plus,
        shape.beta_minus,
        shape.rho,
    ) < 0:
        raise MalformedShape("negative multiplicity in extension shape")
    if not shape.rank_balance_holds():
        raise MalformedShape("extension shape violates its rank balance")
    return {"rho": shape.rho, "splits": shape.rho == 0}


def _is_symmetric_nonzero(u):
    (a, b), (c, d) = u
    if min(a, b, c, d) < 0:
        return False
    return b == c and any((a, b, c, d))


def forces_balanced_split(u, alpha, alpha_plus, alpha_minus):
    """Consistency of a multiplicity triple with the forcing argument.

    The split pushforward makes (alpha - alpha_plus, alpha - alpha_minus)
    a kernel vector of u; a symmetric nonzero u then forces the sum
    alpha_plus + alpha_minus = 2 * alpha.  Returns whether the supplied
    triple satisfies both, via the invertible / all-entries-equal dichotomy
    with a direct kernel check for degenerate symmetric matrices outside it.
    """
    if not _is_symmetric_nonzero(u):
        raise PreconditionFailed(
            "multiplicity matrix must be symmetric, nonnegative, and nonzero"
        )
    (a, b), (c, d) = u
    x = (alpha - alpha_plus, alpha - alpha_minus)
    det = a * d - b * c
    if det != 0:
        # Invertible: the kernel is trivial, so both counts must equal alpha.
        return x == (0, 0)
    if a == b == c == d:
        # All entries equal and nonzero: kernel is the antidiagonal line.
        return x[0] + x[1] == 0
    in_kernel = (a * x[0] + b * x[1] == 0) and (c * x[0] + d * x[1] == 0)
    return in_kernel and x[0] + x[1] == 0


def forcing_holds_for(u):
    """Whether every kernel vector of u has coordinate sum zero.

    This is the exact content needed from the matrix u: together with the
    rank balance it pins rho = 0 for split pushforwards.  True for every
    symmetric nonzero matrix in the invertible / all-equal dichotomy; the
    degenerate symmetric cases are decided by their explicit kernel line.
    """
    if not _is_symmetric_nonzero(u):
        raise PreconditionFailed(
            "multiplicity matrix must be symmetric, nonnegative, and nonzero"
        )
    (a, b), (c, d) = u
    det = a * d - b * c
    if det != 0:
        return True
    # Singular symmetric nonzero: kernel is one line; pick a spanning vector.
    if (a, c) != (0, 0):
        kx, ky = c, -a
    else:
        kx, ky = d, -b
    return kx + ky == 0
