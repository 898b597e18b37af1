"""Closed-form Hilbert data for the quadric and its spinor modules.

All counts are exact Python integers; values grow like p^(2me) so nothing
here may pass through floats.
"""

from __future__ import annotations

import math

from .errors import UnsupportedParameters


def ambient_dim(m, d):
    """Dimension of the degree-d part of the polynomial ring in 2m+2 variables."""
    if d < 0:
        return 0
    return math.comb(d + 2 * m + 1, 2 * m + 1)


def _check_m(m):
    if m < 2:
        raise UnsupportedParameters(f"quadric index m must be >= 2, got {m}")


def h0_line(m, k):
    """Dimension of the degree-k part of the quadric coordinate ring (0 for k < 0)."""
    _check_m(m)
    if k < 0:
        return 0
    return ambient_dim(m, k) - ambient_dim(m, k - 2)


def h0_spinor(m, k):
    """Global sections of a twisted spinor bundle: 2^m * (dim_(k-1) - dim_(k-2)).

    Vanishes for k <= 0.  The linear presentation matrix is injective with
    free cokernel sections in each degree, which is what makes this closed
    form exact.
    """
    _check_m(m)
    if k <= 0:
        return 0
    return (2 ** m) * (ambient_dim(m, k - 1) - ambient_dim(m, k - 2))


def line_series_coefficients(m, max_degree):
    """Coefficients of (1 - s^2) / (1 - s)^(2m+2) up to max_degree.

    Reference expansion for cross-checking h0_line by convolution.
    """
    _check_m(m)
    # 1/(1-s)^(2m+2) has coefficients C(d + 2m+1, 2m+1).
    inv = [math.comb(d + 2 * m + 1, 2 * m + 1) for d in range(max_degree + 1)]
    out = []
    for d in range(max_degree + 1):
        val = inv[d] - (inv[d - 2] if d >= 2 else 0)
        out.append(val)
    return out
