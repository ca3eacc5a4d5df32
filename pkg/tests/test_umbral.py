import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dhermite import hermite as hm
from dhermite.core import ExactPoly, MomentSequence
from dhermite.umbral import (DHP_VACUUM, UmbralExpr, binomial_umbral,
                             dhp_moment, umbral_eval, umbral_expand,
                             umbral_gf_coefficient, vacuum_moment)

x = ExactPoly.monomial(ex=1)
y = ExactPoly.monomial(ey=1)
L = ExactPoly.monomial(eL=1)


def test_moment_examples():
    assert vacuum_moment(0) == 1
    assert vacuum_moment(1) == 0
    assert vacuum_moment(2) == 2 * L * y
    assert vacuum_moment(4) == 12 * L ** 2 * y ** 2
    assert dhp_moment(2) == -2 * L
    with pytest.raises(ValueError):
        vacuum_moment(-1)


@pytest.mark.parametrize("s", range(21))
def test_moment_parity_and_shape(s):
    assert vacuum_moment(2 * s + 1).is_zero()
    even = vacuum_moment(2 * s)
    assert even.terms == {(0, s, s): math.factorial(2 * s) // math.factorial(s)}
    assert dhp_moment(2 * s) == even.specialize(y=-1)


@pytest.mark.parametrize("s", range(8))
def test_classical_limit_of_moments(s):
    # L -> 1 recovers (2s)!/s! y^s
    assert vacuum_moment(2 * s).specialize(L=1) == ExactPoly.monomial(
        ey=s, coeff=math.factorial(2 * s) // math.factorial(s))


def test_expand_examples():
    assert umbral_expand(0) == 1
    assert umbral_expand(2) == L ** 2 * x ** 2 + 2 * L * y
    assert umbral_gf_coefficient(3) == L ** 3 * x ** 3 + 6 * L ** 2 * x * y


@pytest.mark.parametrize("n", range(16))
def test_expand_and_gf_agree(n):
    assert umbral_expand(n) == hm.bvdhp(n)
    assert umbral_gf_coefficient(n) == hm.bvdhp(n)


@pytest.mark.parametrize("n", range(16))
def test_dhp_path(n):
    assert umbral_expand(n, DHP_VACUUM).scale(x=2) == hm.dhp(n)
    assert umbral_gf_coefficient(n, DHP_VACUUM).scale(x=2) == hm.dhp(n)


@pytest.mark.parametrize("n", range(10))
def test_binomial_umbral(n):
    assert umbral_eval(binomial_umbral(L * x, n)) == hm.bvdhp(n)


def test_custom_moments():
    ones = MomentSequence(lambda k: ExactPoly.const(1), "ones")
    # (h + 1)^3 under phi_k = 1 gives 2^3
    assert umbral_eval(binomial_umbral(ExactPoly.const(1), 3), ones) == 8


coef = st.fractions(min_value=-5, max_value=5, max_denominator=7)
umb = st.lists(coef, min_size=1, max_size=6).map(
    lambda cs: UmbralExpr(tuple(ExactPoly.const(c) for c in cs)))


@settings(max_examples=100, deadline=None)
@given(umb, umb, coef)
def test_eval_is_linear(a, b, c):
    lhs = umbral_eval(a + b * ExactPoly.const(c))
    rhs = umbral_eval(a) + umbral_eval(b) * c
    assert lhs == rhs


def test_empty_expr_is_zero():
    assert umbral_eval(UmbralExpr(())) == 0
    assert UmbralExpr.power(2, ExactPoly.const(Fraction(1, 2))).coeffs[2] == Fraction(1, 2)
