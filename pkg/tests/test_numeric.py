from fractions import Fraction
from math import gcd

import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

import oracles as O
from horadam.errors import DivisionByZero, ParseError
from horadam.numeric import (
    I,
    ONE,
    ZERO,
    GaussianRational,
    add,
    as_rational,
    div,
    format_scalar,
    int_pow,
    mul,
    parse_scalar,
)
from strategies import as_pair, gaussians


def G(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


class TestExamples:
    def test_add(self):
        assert add(G("1/2"), G("1/3")) == G("5/6")
        assert add(G("1/2", "1/2"), G("1/2", "-1/2")) == ONE
        assert add(G(3, 4), ZERO) == G(3, 4)

    def test_mul(self):
        assert mul(I, I) == G(-1)
        assert mul(G(1, 1), G(1, -1)) == G(2)
        assert mul(G("2/3", 5), ONE) == G("2/3", 5)

    def test_div(self):
        assert div(ONE, I) == G(0, -1)
        assert div(G(2), G(1, 1)) == G(1, -1)
        assert div(G(7, -3), G(7, -3)) == ONE

    def test_div_by_zero(self):
        with pytest.raises(DivisionByZero):
            div(ONE, ZERO)
        with pytest.raises(ZeroDivisionError):
            G(1, 1) / 0

    def test_int_pow(self):
        assert int_pow(G(-1), 7) == G(-1)
        assert int_pow(G(5, 2), 0) == ONE
        assert int_pow(G("1/2"), -3) == G(8)
        assert int_pow(I, 4) == ONE
        assert int_pow(I, -1) == G(0, -1)
        with pytest.raises(DivisionByZero):
            int_pow(ZERO, -2)
        assert int_pow(ZERO, 0) == ONE

    def test_parse_examples(self):
        assert parse_scalar("3/2") == G("3/2")
        assert parse_scalar("-1+2i") == G(-1, 2)
        assert parse_scalar("1/3-5/7i") == G("1/3", "-5/7")


class TestCanonicalForm:
    def test_rational_reduced(self):
        x = G(Fraction(6, -4))
        assert x.re.denominator == 2 and x.re.numerator == -3
        assert G(0).re.denominator == 1

    def test_structural_equality(self):
        assert G("2/4", "-3/6") == G("1/2", "-1/2")
        assert hash(G("2/4")) == hash(G("1/2"))
        assert G(3) == 3 and G(3, 1) != 3

    def test_is_zero(self):
        assert ZERO.is_zero() and not G(0, 1).is_zero() and not G(1).is_zero()

    def test_mixed_operands(self):
        assert G(1, 1) + 1 == G(2, 1)
        assert 2 * G(1, 1) == G(2, 2)
        assert 1 / G(0, 1) == G(0, -1)
        assert G(1) - Fraction(1, 2) == G("1/2")
        assert as_rational(Fraction(3, 9)) == mpq(1, 3)

    def test_bool_rejected(self):
        with pytest.raises(TypeError):
            as_rational(True)


class TestFormat:
    @pytest.mark.parametrize(
        "value, text",
        [
            (G(0), "0"),
            (G("3/2"), "3/2"),
            (G(0, -5), "-5i"),
            (G(0, 1), "1i"),
            (G(0, -1), "-1i"),
            (G("1/3", "-5/7"), "1/3-5/7i"),
            (G(-2, 3), "-2+3i"),
        ],
    )
    def test_format(self, value, text):
        assert format_scalar(value) == text
        assert parse_scalar(text) == value


class TestParseGrammar:
    @pytest.mark.parametrize(
        "text, value",
        [("0", G(0)), ("-7", G(-7)), ("i", G(0, 1)), ("2i", G(0, 2)), ("-2/3i", G(0, "-2/3")),
         ("1+i", G(1, 1)), ("1-i", G(1, -1)), ("1+-2i", G(1, -2)), ("4/6", G("2/3"))],
    )
    def test_accepts(self, text, value):
        assert parse_scalar(text) == value

    @pytest.mark.parametrize(
        "text, position",
        [("", 0), ("1/0", 2), ("1.5", 1), ("1 + 2i", 1), ("abc", 0), ("1/", 2), ("-i", 1),
         ("2i3", 2), ("1+2", 3), ("--1", 1), ("1+2j", 3)],
    )
    def test_rejects_with_position(self, text, position):
        with pytest.raises(ParseError) as info:
            parse_scalar(text)
        assert info.value.position == position

    def test_parse_error_is_value_error(self):
        with pytest.raises(ValueError):
            parse_scalar("x")


def _oracle_eq(x, pair):
    return as_pair(x) == pair


class TestFieldProperties:
    @given(gaussians(), gaussians(), gaussians())
    def test_associative_commutative_distributive(self, x, y, z):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x + y == y + x and x * y == y * x
        assert x * (y + z) == x * y + x * z

    @given(gaussians(), gaussians())
    def test_matches_fraction_oracle(self, x, y):
        px, py = as_pair(x), as_pair(y)
        assert _oracle_eq(x + y, O.gadd(px, py))
        assert _oracle_eq(x * y, O.gmul(px, py))
        assert _oracle_eq(x - y, O.gsub(px, py))
        if not y.is_zero():
            assert _oracle_eq(x / y, O.gdiv(px, py))

    @given(gaussians(), gaussians(nonzero=True))
    def test_div_inverts_mul(self, x, y):
        assert (x * y) / y == x
        assert y * y.reciprocal() == ONE

    @given(gaussians(nonzero=True), st.integers(-64, 64))
    def test_int_pow_repeated_multiplication(self, x, n):
        expected = ONE
        for _ in range(abs(n)):
            expected = expected * x
        if n < 0:
            expected = ONE / expected
        assert int_pow(x, n) == expected
        assert int_pow(x, n) * int_pow(x, -n) == ONE

    @given(gaussians(), gaussians())
    def test_canonical_idempotent(self, x, y):
        z = x * y + x
        again = GaussianRational(z.re, z.im)
        for part in (z.re, z.im):
            assert part.denominator > 0
            assert gcd(int(part.numerator), int(part.denominator)) == 1
        assert again == z
        assert format_scalar(again) == format_scalar(z)

    @given(gaussians())
    def test_round_trip(self, x):
        assert parse_scalar(format_scalar(x)) == x
        assert format_scalar(parse_scalar(format_scalar(x))) == format_scalar(x)
