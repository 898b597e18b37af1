import pytest

from qfrob.errors import UnsupportedParameters
from qfrob.ring import (
    MultiPoly,
    PrimeField,
    monomial_weight,
    normal_form_mod_quadric,
    poly_mul,
    quadric_form,
    variable_weight,
)


def test_prime_field_validation():
    assert PrimeField(3).p == 3
    assert PrimeField(101).p == 101
    with pytest.raises(UnsupportedParameters):
        PrimeField(2)
    with pytest.raises(UnsupportedParameters):
        PrimeField(9)
    with pytest.raises(UnsupportedParameters):
        PrimeField(1)


def test_quadric_form_small_cases():
    q0 = quadric_form(3, 0)
    assert q0.terms == {(1, 1): 1}
    q1 = quadric_form(3, 1)
    assert q1.terms == {(1, 1, 0, 0): 1, (0, 0, 1, 1): 1}
    q2 = quadric_form(5, 2)
    assert q2.terms == {
        (1, 1, 0, 0, 0, 0): 1,
        (0, 0, 1, 1, 0, 0): 1,
        (0, 0, 0, 0, 1, 1): 1,
    }


@pytest.mark.parametrize("m", range(0, 8))
def test_quadric_form_shape(m):
    q = quadric_form(3, m)
    assert len(q.terms) == m + 1
    assert q.is_homogeneous() and q.homogeneous_degree() == 2
    assert all(c == 1 for c in q.terms.values())


def test_poly_mul_identity():
    q1 = quadric_form(3, 1)
    one = MultiPoly.constant(3, 4, 1)
    assert poly_mul(q1, one) == q1


def test_poly_mul_freshmans_dream():
    # Over F_3 the cube of a sum of variables is the sum of cubes.
    f = MultiPoly.variable(3, 2, 0) + MultiPoly.variable(3, 2, 1)
    cube = f * f * f
    assert cube.terms == {(3, 0): 1, (0, 3): 1}
    assert (f ** 3) == cube


def test_poly_mul_variables():
    x1 = MultiPoly.variable(3, 2, 0)
    x2 = MultiPoly.variable(3, 2, 1)
    assert (x1 * x2).terms == {(1, 1): 1}


def test_poly_mul_ring_mismatch():
    with pytest.raises(ValueError):
        poly_mul(MultiPoly.variable(3, 2, 0), MultiPoly.variable(3, 4, 0))


def test_frobenius_power_matches_actual_power():
    f = quadric_form(3, 1) + MultiPoly.variable(3, 4, 2)
    assert f.frobenius_power(3) == f ** 3
    assert f.frobenius_power(9) == f ** 9


def test_add_cancels_cleanly():
    p = 5
    a = MultiPoly(p, 2, {(1, 0): 2, (0, 1): 4})
    b = MultiPoly(p, 2, {(1, 0): 3, (0, 1): 1})
    s = a + b
    assert s.terms == {}  # 5x and 5y both vanish
    assert (a - a).is_zero()
    assert (-a + a).is_zero()


def test_normal_form_mod_quadric():
    p, m = 3, 1
    q = quadric_form(p, m)
    assert normal_form_mod_quadric(q, m).is_zero()
    # x1*x2 reduces to -(x3*x4).
    x1x2 = MultiPoly.monomial(p, 4, (1, 1, 0, 0))
    nf = normal_form_mod_quadric(x1x2, m)
    assert nf.terms == {(0, 0, 1, 1): p - 1}
    # Reduction is idempotent and q-multiples vanish.
    f = q * MultiPoly.monomial(p, 4, (2, 1, 0, 3))
    assert normal_form_mod_quadric(f, m).is_zero()
    g = MultiPoly.monomial(p, 4, (2, 2, 0, 0))
    nf_g = normal_form_mod_quadric(g, m)
    assert normal_form_mod_quadric(nf_g, m) == nf_g
    assert all(e[0] == 0 or e[1] == 0 for e in nf_g.terms)


def test_weights():
    assert variable_weight(0, 4) == (2, 0)
    assert variable_weight(1, 4) == (-2, 0)
    assert variable_weight(2, 4) == (0, 2)
    assert monomial_weight((1, 1, 0, 0), 4) == (0, 0)
    assert monomial_weight((2, 0, 1, 0), 4) == (4, 2)
    # The quadric form is weight-homogeneous of weight zero.
    q = quadric_form(3, 2)
    assert {monomial_weight(e, 6) for e in q.terms} == {(0, 0, 0)}
