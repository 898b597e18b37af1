"""Symbolic catalog of the bundles appearing in pushforward decompositions.

Symbols name line bundles O(t), the two spinor bundles S+(t), S-(t) of rank
2^(m-1), and their sum S(t) on the 2m-dimensional quadric.  The catalog
carries ranks, section counts, the duality involution, and the reference
table of Hom/Ext dimensions between twisted spinor bundles; entries outside
the table are reported as unknown (None) rather than silently zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedParameters
from .hilbert import h0_line, h0_spinor
from .presentations import (
    ModulePresentation,
    spinor_presentation,
    spinor_sum_presentation,
)

KINDS = ("O", "S+", "S-", "S")


@dataclass(frozen=True)
class SheafSymbol:
    kind: str
    twist: int
    m: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown sheaf kind {self.kind!r}")
        if self.m < 2:
            raise UnsupportedParameters("sheaf symbols need quadric index m >= 2")

    def twisted(self, d):
        return SheafSymbol(self.kind, self.twist + d, self.m)

    def to_json_dict(self):
        return {"kind": self.kind, "twist": self.twist}

    def __str__(self):
        return f"{self.kind}({self.twist})"


def rank(sym):
    if sym.kind == "O":
        return 1
    if sym.kind == "S":
        return 2 ** sym.m
    return 2 ** (sym.m - 1)


def h0(sym, d):
    """Global sections of the symbol twisted by d."""
    k = sym.twist + d
    if sym.kind == "O":
        return h0_line(sym.m, k)
    if sym.kind == "S":
        return 2 * h0_spinor(sym.m, k)
    return h0_spinor(sym.m, k)


def dual_symbol(sym):
    """O(t) -> O(-t); spinors dualize to twist 1-t, swapping sign for odd m."""
    if sym.kind == "O":
        return SheafSymbol("O", -sym.twist, sym.m)
    if sym.kind == "S":
        return SheafSymbol("S", -sym.twist + 1, sym.m)
    flip = sym.m % 2 == 1
    kind = sym.kind
    if flip:
        kind = "S-" if kind == "S+" else "S+"
    return SheafSymbol(kind, -sym.twist + 1, sym.m)


def reference_hom_ext(src, tgt, i):
    """Reference dimension of Hom (i=0) or Ext^1 (i=1), or None when the
    table does not cover the pair.

    Covered: endomorphisms and cross Homs of untwisted spinors, Hom of a
    spinor into its own negative twists, Ext^1 between spinors at twist -1,
    and Ext^1 of the spinor sum into all of its twists.
    """
    if src.m != tgt.m:
        raise ValueError("symbols on different quadrics")
    if i not in (0, 1):
        raise ValueError("only degrees 0 and 1 are tabulated")
    t = tgt.twist - src.twist
    ks, kt = src.kind, tgt.kind
    spin = ("S+", "S-")
    if i == 0:
        if ks in spin and kt in spin:
            if t == 0:
                return 1 if ks == kt else 0
            if t < 0 and ks == kt:
                return 0
        return None
    if ks in spin and kt in spin and t == -1:
        return 0 if ks == kt else 1
    if ks == "S" and kt == "S":
        return 2 if t == -1 else 0
    return None


def symbol_presentation(sym, p):
    """Graded module presentation with the symbol's sections as Hilbert data."""
    if sym.kind == "O":
        return ModulePresentation.free_module(p, sym.m, sym.twist)
    if sym.kind == "S+":
        return spinor_presentation(p, sym.m, "+", sym.twist)
    if sym.kind == "S-":
        return spinor_presentation(p, sym.m, "-", sym.twist)
    return spinor_sum_presentation(p, sym.m, sym.twist)
