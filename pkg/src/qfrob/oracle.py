"""Closed-form support oracle for Frobenius pushforward summands.

The oracle answers, by integer inequalities alone, which line bundle twists
O(-t) and spinor twists S(-t) occur as direct summands of the e-th Frobenius
pushforward of O(j) or of the spinor sum S(j).  Twists here follow the
minus-t convention of the inequalities; helpers convert to plain twists.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedParameters
from .ring import is_prime


def _validate(p, m, e):
    if not is_prime(p) or p < 3:
        raise UnsupportedParameters(f"p must be a prime >= 3, got {p}")
    if m < 2:
        raise UnsupportedParameters(f"m must be >= 2, got {m}")
    if e < 1:
        raise UnsupportedParameters(f"e must be >= 1, got {e}")


def line_in_pushforward_O(p, m, e, j, t):
    """O(-t) is a summand of the e-th pushforward of O(j)."""
    _validate(p, m, e)
    return 0 <= j + p ** e * t <= 2 * m * (p ** e - 1)


def spinor_in_pushforward_O(p, m, e, j, t):
    """S(-t) is a summand of the e-th pushforward of O(j)."""
    _validate(p, m, e)
    lo = (m - 1) * (p - 1) * p ** (e - 1)
    hi = m * p ** e + (m - 1) * p ** (e - 1) - 2 * m
    return lo <= j + t * p ** e <= hi


def line_in_pushforward_S(p, m, e, j, t):
    """O(-t) is a summand of the e-th pushforward of S(j)."""
    _validate(p, m, e)
    return 1 <= j + p ** e * t <= 2 * m * (p ** e - 1)


def spinor_in_pushforward_S(p, m, e, j, t):
    """S(-t) is a summand of the e-th pushforward of S(j).

    The window corners move by one exactly at e = 1.
    """
    _validate(p, m, e)
    delta = 1 if e == 1 else 0
    lo = (m - 1) * (p - 1) * p ** (e - 1) + 1 - delta
    hi = m * p ** e + (m - 1) * p ** (e - 1) - 2 * m + delta
    return lo <= j + t * p ** e <= hi


def spinor_threshold(p, m):
    """Smallest e >= 1 with p^(e-1) * (m-1) >= 2m.

    From that exponent on, the pushforward of the structure sheaf contains
    spinor summands at both twists -m and -(m-1).
    """
    if not is_prime(p) or p < 3:
        raise UnsupportedParameters(f"p must be a prime >= 3, got {p}")
    if m < 2:
        raise UnsupportedParameters(f"m must be >= 2, got {m}")
    e = 1
    while p ** (e - 1) * (m - 1) < 2 * m:
        e += 1
    return e


def _window_ts(lo, hi, j, q):
    """Integers t with lo <= j + q*t <= hi."""
    first = -((j - lo) // q)  # ceil((lo - j) / q)
    out = []
    t = first
    while j + q * t <= hi:
        if j + q * t >= lo:
            out.append(t)
        t += 1
    return out


@dataclass(frozen=True)
class SupportPrediction:
    """Predicted summand support: t-values with O(-t) resp. S(-t) present.

    line_window and spinor_window carry the integer t-interval endpoints
    (t_lo, t_hi) cut out by the inequalities; an empty window has
    t_lo = t_hi + 1 and the two straddling twists are still well defined.
    """

    source_kind: str
    p: int
    m: int
    e: int
    j: int
    line_twists: tuple
    spinor_twists: tuple
    line_window: tuple
    spinor_window: tuple

    def line_support_twists(self):
        """Support as plain twists: O(t) present."""
        return tuple(sorted(-t for t in self.line_twists))

    def spinor_support_twists(self):
        return tuple(sorted(-t for t in self.spinor_twists))


def support_prediction(source_kind, p, m, e, j):
    """Oracle support sets for the pushforward of O(j) or S(j).

    Spinor-type sources (S+, S-, S) all use the S windows; for the split
    spinors the prediction bounds the pair support from above.
    """
    _validate(p, m, e)
    q = p ** e
    if source_kind == "O":
        line_pred = line_in_pushforward_O
        spin_pred = spinor_in_pushforward_O
        line_lo, line_hi = 0, 2 * m * (q - 1)
        s_lo = (m - 1) * (p - 1) * p ** (e - 1)
        s_hi = m * q + (m - 1) * p ** (e - 1) - 2 * m
    elif source_kind in ("S", "S+", "S-"):
        line_pred = line_in_pushforward_S
        spin_pred = spinor_in_pushforward_S
        line_lo, line_hi = 1, 2 * m * (q - 1)
        delta = 1 if e == 1 else 0
        s_lo = (m - 1) * (p - 1) * p ** (e - 1) + 1 - delta
        s_hi = m * q + (m - 1) * p ** (e - 1) - 2 * m + delta
    else:
        raise ValueError(f"unknown source kind {source_kind!r}")
    line_ts = tuple(t for t in _window_ts(line_lo, line_hi, j, q) if line_pred(p, m, e, j, t))
    spin_ts = tuple(t for t in _window_ts(s_lo, s_hi, j, q) if spin_pred(p, m, e, j, t))

    def bounds(lo, hi):
        t_lo = -((j - lo) // q)
        t_hi = (hi - j) // q
        return (t_lo, t_hi)

    return SupportPrediction(
        source_kind,
        p,
        m,
        e,
        j,
        line_ts,
        spin_ts,
        bounds(line_lo, line_hi),
        bounds(s_lo, s_hi),
    )
