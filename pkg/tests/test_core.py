import json
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dhermite.core import (DomainError, ExactPoly,
                           RepresentationError, make_param, poly_diff,
                           poly_eval)

x = ExactPoly.monomial(ex=1)
y = ExactPoly.monomial(ey=1)
L = ExactPoly.monomial(eL=1)

H2 = L * L * x * x + 2 * L * y
H3 = L ** 3 * x ** 3 + 6 * L ** 2 * x * y


def mp_L(lam):
    with mpmath.workdps(50):
        lam = mpmath.mpf(lam)
        return float(mpmath.log1p(lam) / lam)


class TestMakeParam:
    def test_zero_limit(self):
        assert make_param(0).L == 1.0

    @pytest.mark.parametrize("lam, expected", [
        (1, 0.6931471805599453),
        (-0.5, 1.3862943611198906),
    ])
    def test_examples(self, lam, expected):
        assert make_param(lam).L == pytest.approx(expected, rel=1e-15)

    @pytest.mark.parametrize("lam", [-1, -2, float("nan")])
    def test_domain(self, lam):
        with pytest.raises(DomainError):
            make_param(lam)

    @given(st.floats(min_value=-0.999, max_value=1e6).filter(lambda v: abs(v) >= 1e-4))
    def test_matches_high_precision(self, lam):
        assert make_param(lam).L == pytest.approx(mp_L(lam), rel=4 * 2.2e-16)

    @given(st.floats(min_value=-1e-4, max_value=1e-4, exclude_min=True, exclude_max=True))
    def test_series_branch(self, lam):
        p = make_param(lam)
        assert p.L > 0
        if lam != 0:
            assert p.L == pytest.approx(mp_L(lam), rel=1e-15)

    def test_frozen(self):
        p = make_param(1)
        with pytest.raises(AttributeError):
            p.L = 2.0


class TestExactPoly:
    def test_canonical_drops_zeros(self):
        p = ExactPoly({(1, 0, 0): 1, (2, 0, 0): 0})
        assert len(p) == 1
        assert (x - x).is_zero()
        assert ExactPoly({(0, 0, 0): 0}) == 0

    def test_no_negative_x_or_L(self):
        with pytest.raises(RepresentationError):
            ExactPoly({(-1, 0, 0): 1})
        with pytest.raises(RepresentationError):
            L.div_L(2)

    def test_float_coefficients_rejected(self):
        with pytest.raises(TypeError):
            ExactPoly({(0, 0, 0): 0.5})

    def test_str(self):
        assert str(H2) == "L^2*x^2 + 2*L*y"
        assert str(ExactPoly()) == "0"

    def test_json_roundtrip_and_order(self):
        p = H3 + Fraction(-3, 7) * y ** 2 * x + x.shift(ey=-2)
        recs = json.loads(p.to_json())
        keys = [(r["ex"], r["ey"], r["eL"]) for r in recs]
        assert keys == sorted(keys)
        assert set(recs[0]) == {"ex", "ey", "eL", "num", "den"}
        assert ExactPoly.from_json(p.to_json()) == p

    def test_specialize_y_zero_with_laurent(self):
        with pytest.raises(ZeroDivisionError):
            (x.shift(ey=-1)).specialize(y=0)

    def test_integrate(self):
        assert H2.integrate("x") == Fraction(1, 3) * L * L * x ** 3 + 2 * L * x * y
        with pytest.raises(RepresentationError):
            y.shift(ey=-2).integrate("y")


class TestPolyDiff:
    def test_examples(self):
        assert poly_diff(H2, "x") == 2 * L * L * x
        assert poly_diff(H2, "y") == 2 * L
        assert poly_diff(x.shift(ey=-1), "y") == -x.shift(ey=-2)

    def test_bad_variable(self):
        with pytest.raises(ValueError):
            poly_diff(H2, "L")


class TestPolyEval:
    def test_constant(self):
        assert poly_eval(ExactPoly.const(1), make_param(0.3), 5.0, -2.0) == 1.0

    @pytest.mark.parametrize("p, expected", [
        (H2, 1.866747375038092),
        (H3, 3.2157427354981380),
    ])
    def test_examples(self, p, expected):
        assert poly_eval(p, make_param(1), 1.0, 1.0) == pytest.approx(expected, rel=1e-15)

    def test_laurent_at_zero(self):
        with pytest.raises(ZeroDivisionError):
            poly_eval(x.shift(ey=-1), make_param(1), 1.0, 0.0)


# -- ring properties ------------------------------------------------------

exps = st.tuples(st.integers(0, 4), st.integers(-2, 4), st.integers(0, 4))
coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.dictionaries(exps, coeffs, max_size=8).map(ExactPoly)
pos_polys = st.dictionaries(
    exps, st.fractions(min_value=Fraction(1, 12), max_value=20, max_denominator=12),
    min_size=1, max_size=8).map(ExactPoly)


@given(polys, polys, polys)
def test_distributive(p, q, r):
    assert (p + q) * r == p * r + q * r


@given(polys, polys)
def test_leibniz(p, q):
    for v in "xy":
        assert poly_diff(p * q, v) == poly_diff(p, v) * q + p * poly_diff(q, v)


@given(polys)
def test_mixed_partials_commute(p):
    assert poly_diff(poly_diff(p, "x"), "y") == poly_diff(poly_diff(p, "y"), "x")


@given(polys)
def test_canonicalization_idempotent(p):
    once = ExactPoly(p.terms)
    assert ExactPoly(once.terms) == once == p
    assert hash(once) == hash(p)


@settings(max_examples=200)
@given(pos_polys, pos_polys,
       st.lists(st.tuples(st.floats(0.5, 2.0), st.floats(0.5, 2.0), st.floats(-0.5, 2.0)),
                min_size=5, max_size=5))
def test_eval_is_multiplicative(p, q, points):
    for xv, yv, lam in points:
        par = make_param(lam)
        lhs = poly_eval(p * q, par, xv, yv)
        rhs = poly_eval(p, par, xv, yv) * poly_eval(q, par, xv, yv)
        assert lhs == pytest.approx(rhs, rel=1e-12)
