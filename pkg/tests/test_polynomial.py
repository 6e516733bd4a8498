import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import int_polys
from sunforest.closedforms import forest_poly, oriented_forest_poly
from sunforest.polynomial import (
    ONE,
    X,
    ZERO,
    ZERO_DEGREE,
    DivisionError,
    IntPoly,
    ParseError,
    add,
    compose,
    divides,
    eval_float,
    eval_int,
    exact_div,
    format_poly,
    homogenize,
    mul,
    parse_poly,
)


def P(*coeffs):
    return IntPoly(coeffs)


class TestArithmetic:
    def test_add(self):
        assert add(P(1, 1), P(-1, 1)) == P(0, 2)
        p = P(3, 0, 5)
        assert add(p, ZERO) == p

    def test_cancellation_renormalizes(self):
        s = add(P(0, 0, 1), P(0, 0, -1))
        assert s == ZERO
        assert s.coeffs == ()
        assert s.degree == ZERO_DEGREE
        assert ZERO_DEGREE < 0

    def test_mul(self):
        assert mul(X, P(4, 1)) == P(0, 4, 1)
        assert mul(P(7, 2), ONE) == P(7, 2)
        assert mul(P(3, 1) ** 2, X) == P(0, 9, 6, 1)

    def test_normalization_strips_trailing_zeros(self):
        assert P(1, 2, 0, 0).coeffs == (1, 2)
        assert P(0, 0) == ZERO

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            IntPoly([1.5])

    def test_immutable(self):
        with pytest.raises(AttributeError):
            X.coeffs = (1,)

    def test_pow(self):
        assert P(1, 1) ** 0 == ONE
        assert (P(1, 1) ** 5).coeffs == tuple(math.comb(5, k) for k in range(6))


class TestCompose:
    def test_identity(self):
        f2 = P(0, 4, 1)
        assert compose(f2, X) == f2

    def test_f2_f2_is_f4(self):
        assert compose(P(0, 4, 1), P(0, 4, 1)) == P(0, 16, 20, 8, 1)

    def test_oriented_2_3_is_6(self):
        # (x+1)^6 - 1 by binomial coefficients
        want = IntPoly([0] + [math.comb(6, k) for k in range(1, 7)])
        assert compose(oriented_forest_poly(2), oriented_forest_poly(3)) == want


class TestDivision:
    def test_exact_div(self):
        assert exact_div(P(0, 4, 1), X) == P(4, 1)

    def test_f12_by_f3(self):
        q = exact_div(forest_poly(12), forest_poly(3))
        assert q * forest_poly(3) == forest_poly(12)

    def test_remainder_raises(self):
        with pytest.raises(DivisionError):
            exact_div(P(1, 0, 1), P(1, 1))

    def test_inexact_leading_step_raises(self):
        with pytest.raises(DivisionError):
            exact_div(P(0, 1), P(0, 2))

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            exact_div(X, ZERO)

    def test_divides(self):
        assert divides(forest_poly(4), forest_poly(8))
        assert divides(forest_poly(5), forest_poly(10))
        # -3 is a root of F_3 but F_4(-3) = 81 - 216 + 180 - 48 = -3
        assert eval_int(forest_poly(4), -3) == -3
        assert not divides(forest_poly(3), forest_poly(4))


class TestEvaluation:
    @pytest.mark.parametrize("n", range(1, 15))
    def test_zero_at_origin(self, n):
        assert eval_int(forest_poly(n), 0) == 0

    def test_values(self):
        assert eval_int(forest_poly(4), -4) == 0
        assert eval_int(forest_poly(3), 1) == 16

    def test_eval_float(self):
        assert abs(eval_float(forest_poly(3), -3.0)) < 1e-9
        assert eval_float(X, 0.0) == 0.0
        omega = 2 * (math.cos(2 * math.pi / 5) - 1)
        assert abs(eval_float(forest_poly(5), omega)) < 1e-9

    def test_call(self):
        assert P(1, 1)(3) == 4
        assert P(0, 1)(P(2, 1)) == P(2, 1)


class TestText:
    def test_parse(self):
        assert parse_poly("x^2 + 4*x").coeffs == (0, 4, 1)
        assert parse_poly("0") == ZERO
        assert parse_poly("  2x^3-x+ 7 ") == P(7, -1, 0, 2)
        assert parse_poly("x - -3") == P(3, 1)
        assert parse_poly("x + x") == P(0, 2)
        assert parse_poly("123456789012345678901234567890") == P(123456789012345678901234567890)

    @pytest.mark.parametrize(
        "text, offset",
        [("2x +", 4), ("", 0), ("x^", 2), ("x ** 2", 2), ("3 4", 2), ("y", 0), ("2*", 2)],
    )
    def test_parse_errors(self, text, offset):
        with pytest.raises(ParseError) as info:
            parse_poly(text)
        assert info.value.offset == offset

    def test_offset_is_in_bytes(self):
        with pytest.raises(ParseError) as info:
            parse_poly("é")
        assert info.value.offset == 0
        with pytest.raises(ParseError) as info:
            parse_poly("x + é")
        assert info.value.offset == 4

    def test_format(self):
        assert format_poly(P(0, 9, 6, 1)) == "x^3 + 6*x^2 + 9*x"
        assert format_poly(ZERO) == "0"
        assert format_poly(P(-1, 1)) == "x - 1"
        assert format_poly(P(1, -1)) == "-x + 1"
        assert format_poly(P(0, 0, -3)) == "-3*x^2"
        assert str(P(5)) == "5"

    def test_homogenize(self):
        assert homogenize(P(0, 4, 1), 2) == "a^2 + 4*a*b"
        assert homogenize(X, 1) == "a"
        assert homogenize(oriented_forest_poly(3), 3) == "a^3 + 3*a^2*b + 3*a*b^2"
        assert homogenize(P(2), 2, "s", "t") == "2*t^2"
        with pytest.raises(ValueError):
            homogenize(P(0, 0, 1), 1)


# properties


@given(int_polys(), int_polys())
def test_add_mul_commute(p, q):
    assert p + q == q + p
    assert p * q == q * p


@given(int_polys(4), int_polys(4), int_polys(4))
def test_associative_distributive(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=50)
@given(int_polys(4, 50), int_polys(4, 50), int_polys(4, 50))
def test_compose_associative(p, q, r):
    assert compose(p, compose(q, r)) == compose(compose(p, q), r)


@given(int_polys(), int_polys().filter(bool))
def test_exact_div_inverts_mul(q, d):
    p = d * q
    assert exact_div(p, d) == q
    assert d * exact_div(p, d) == p


@given(int_polys(8, 10**30))
def test_parse_format_roundtrip(p):
    assert parse_poly(format_poly(p)) == p


@given(int_polys().filter(bool), int_polys().filter(bool))
def test_degree_additive(p, q):
    assert (p * q).degree == p.degree + q.degree


@given(int_polys(), st.integers(-50, 50))
def test_eval_int_matches_power_sum(p, v):
    assert eval_int(p, v) == sum(c * v**k for k, c in enumerate(p.coeffs))
