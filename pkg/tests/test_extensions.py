import pytest

from qfrob.errors import MalformedShape, PreconditionFailed
from qfrob.extensions import (
    ExtensionShape,
    analyze_extension_shape,
    forces_balanced_split,
    forcing_holds_for,
)


def _shape(m, alpha, beta, ap, am, bp, bm, rho):
    return ExtensionShape(
        m=m, alpha=alpha, beta=beta,
        alpha_plus=ap, alpha_minus=am, beta_plus=bp, beta_minus=bm, rho=rho,
    )


def test_split_iff_no_line_copies():
    balanced = _shape(2, 3, 2, 3, 3, 2, 2, 0)
    out = analyze_extension_shape(balanced)
    assert out == {"rho": 0, "splits": True}

    with_lines = _shape(2, 3, 2, 3, 3, 2, 2 - 1, 2)
    out2 = analyze_extension_shape(with_lines)
    assert out2 == {"rho": 2, "splits": False}


def test_zero_extension_splits():
    empty = _shape(2, 0, 0, 0, 0, 0, 0, 0)
    assert analyze_extension_shape(empty)["splits"] is True


def test_rank_balance_enforced():
    with pytest.raises(MalformedShape):
        analyze_extension_shape(_shape(2, 1, 1, 1, 1, 1, 1, 3))
    with pytest.raises(MalformedShape):
        analyze_extension_shape(_shape(2, 1, 0, 1, 1, 0, 0, -1))


def test_forcing_examples():
    invertible = ((2, 1), (1, 2))
    assert forces_balanced_split(invertible, 3, 3, 3) is True
    assert forces_balanced_split(invertible, 1, 2, 1) is False
    all_equal = ((2, 2), (2, 2))
    assert forces_balanced_split(all_equal, 1, 0, 2) is True
    assert forces_balanced_split(all_equal, 1, 0, 1) is False


def test_forcing_precondition():
    with pytest.raises(PreconditionFailed):
        forces_balanced_split(((0, 0), (0, 0)), 1, 1, 1)
    with pytest.raises(PreconditionFailed):
        forces_balanced_split(((1, 2), (3, 4)), 1, 1, 1)


def test_forcing_holds_for_dichotomy_and_degenerate():
    assert forcing_holds_for(((10, 1), (1, 10))) is True
    assert forcing_holds_for(((3, 3), (3, 3))) is True
    # Singular symmetric with unequal entries: kernel (2, -1) sums to 1.
    assert forcing_holds_for(((1, 2), (2, 4))) is False
    assert forcing_holds_for(((0, 0), (0, 5))) is False


def _kernel_membership(u, x):
    (a, b), (c, d) = u
    return a * x[0] + b * x[1] == 0 and c * x[0] + d * x[1] == 0


def test_forcing_exhaustive_small_grid():
    # Spot version of the exhaustive suite: entries <= 3, counts <= 3.
    for a in range(4):
        for b in range(4):
            for d in range(4):
                u = ((a, b), (b, d))
                if not any((a, b, d)):
                    continue
                for alpha in range(4):
                    for ap in range(4):
                        for am in range(4):
                            x = (alpha - ap, alpha - am)
                            expect = _kernel_membership(u, x) and ap + am == 2 * alpha
                            assert forces_balanced_split(u, alpha, ap, am) == expect
