"""Checks on the 6-dimensional quadric (index m = 3), where dualizing and
the coordinate swap behave differently than at m = 2."""

from qfrob.bundles import SheafSymbol
from qfrob.homcalc import ext1_dim, graded_hom_dim, stable_hom_dim
from qfrob.hilbert import h0_spinor
from qfrob.oracle import support_prediction
from qfrob.presentations import (
    ModulePresentation,
    spinor_presentation,
    spinor_sum_presentation,
)
from qfrob.pushforward import decompose


def test_hom_table_m3():
    p, m = 3, 3
    plus = spinor_presentation(p, m, "+")
    minus = spinor_presentation(p, m, "-")
    assert graded_hom_dim(plus, plus, 0) == 1
    assert graded_hom_dim(minus, minus, 0) == 1
    assert graded_hom_dim(plus, minus, 0) == 0
    assert graded_hom_dim(minus, plus, 0) == 0
    assert graded_hom_dim(plus, plus.twist(-1), 0) == 0


def test_ext_table_m3():
    p, m = 3, 3
    plus = spinor_presentation(p, m, "+")
    minus = spinor_presentation(p, m, "-")
    ssum = spinor_sum_presentation(p, m)
    assert ext1_dim(plus, minus.twist(-1), 0) == 1
    assert ext1_dim(minus, plus.twist(-1), 0) == 1
    assert ext1_dim(plus, plus.twist(-1), 0) == 0
    assert ext1_dim(ssum, ssum, 0) == 0
    assert ext1_dim(ssum, ssum.twist(-1), 0) == 2


def test_duality_closed_form_m3():
    p, m = 3, 3
    minus = spinor_presentation(p, m, "-")
    for t in (0, 1, 2):
        free = ModulePresentation.free_module(p, m, t)
        assert graded_hom_dim(minus, free, 0) == h0_spinor(m, t + 1)
        assert stable_hom_dim(minus, free, 0) == 0


def test_pushforward_of_minus_m_line_only_m3():
    ms = decompose(SheafSymbol("O", -3, 3), 1, 3)
    assert ms.spinor_support() == ()
    assert ms.rank_total() == 3 ** 6


def test_spinor_levels_m3():
    for j in (-3, -2):
        pred = support_prediction("S", 3, 3, 1, j)
        assert pred.spinor_support_twists() == (j,)
        ms = decompose(SheafSymbol("S", j, 3), 1, 3)
        assert ms.spinor_support() == (j,)
        assert ms.spinor_plus[j] == ms.spinor_minus[j] > 0


def test_hom_table_m4():
    # Rank-8 spinor modules in ten variables: the same endomorphism and
    # cross-Hom pattern must come out of the block solver.
    p, m = 3, 4
    plus = spinor_presentation(p, m, "+")
    minus = spinor_presentation(p, m, "-")
    assert graded_hom_dim(plus, plus, 0) == 1
    assert graded_hom_dim(plus, minus, 0) == 0
    assert ext1_dim(plus, minus.twist(-1), 0) == 1
    assert ext1_dim(plus, plus.twist(-1), 0) == 0
