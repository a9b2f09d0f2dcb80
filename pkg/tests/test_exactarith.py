"""Exact rational and polynomial arithmetic: frozen values and algebraic
invariants."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fanodelta import (
    DomainError,
    Polynomial,
    binomial,
    derivative,
    format_rational,
    integrate_definite,
    parse_rational,
    rational,
)

nonzero_fractions = st.fractions().filter(lambda q: q != 0)

small_polys = st.builds(
    Polynomial,
    st.lists(st.fractions(max_denominator=50), min_size=0, max_size=6),
)


class TestRationalHelpers:
    def test_parse_simple_forms(self):
        assert parse_rational("3/4") == Fraction(3, 4)
        assert parse_rational("-9") == Fraction(-9)
        assert parse_rational("0.25") == Fraction(1, 4)

    def test_parse_rejects_non_rational_text(self):
        with pytest.raises(DomainError, match="not a rational"):
            parse_rational("abc")
        with pytest.raises(DomainError):
            parse_rational("1/0")

    def test_format_is_plain_fraction_text(self):
        assert format_rational(Fraction(3, 4)) == "3/4"
        assert format_rational(Fraction(-2)) == "-2"
        assert format_rational(Fraction(0)) == "0"

    @given(st.fractions())
    def test_parse_inverts_format(self, q):
        assert parse_rational(format_rational(q)) == q

    @given(nonzero_fractions, nonzero_fractions)
    def test_division_round_trip(self, a, b):
        assert (a / b) * (b / a) == 1

    def test_rational_coerces_ints_and_strings(self):
        assert rational(7) == Fraction(7)
        assert rational("5/3") == Fraction(5, 3)
        assert rational(Fraction(1, 2)) == Fraction(1, 2)


class TestBinomial:
    def test_small_table(self):
        assert binomial(4, 2) == 6
        assert binomial(10, 0) == 1
        assert binomial(10, 5) == 252

    def test_rejects_k_above_n(self):
        with pytest.raises(DomainError):
            binomial(3, 5)

    def test_rejects_negative_arguments(self):
        with pytest.raises(DomainError):
            binomial(-1, 0)
        with pytest.raises(DomainError):
            binomial(3, -2)

    @given(st.integers(min_value=0, max_value=40), st.integers(min_value=0, max_value=40))
    def test_pascal_recurrence(self, n, k):
        if k > n:
            return
        if 0 < k:
            assert binomial(n + 1, k) == binomial(n, k) + binomial(n, k - 1)


class TestPolynomialBasics:
    def test_trailing_zeros_are_stripped(self):
        p = Polynomial([1, 2, 0, 0])
        assert p.degree == 1
        assert p.coefficients == (Fraction(1), Fraction(2))

    def test_zero_polynomial(self):
        z = Polynomial.zero()
        assert z.is_zero
        assert z.degree == -1
        assert z(Fraction(5)) == 0

    def test_monomial_and_constant(self):
        assert Polynomial.monomial(3)(Fraction(2)) == 8
        assert Polynomial.monomial(2, Fraction(1, 2))(4) == 8
        assert Polynomial.constant(Fraction(7, 3)).degree == 0

    def test_shifted_power_expansion(self):
        # (1 + t)^2 = 1 + 2t + t^2
        p = Polynomial.shifted_power(1, 2)
        assert p.coefficients == (Fraction(1), Fraction(2), Fraction(1))
        # (-2 + t)^3 evaluated at 5 is 27
        assert Polynomial.shifted_power(-2, 3)(5) == 27

    def test_evaluation_uses_exact_arithmetic(self):
        p = Polynomial([Fraction(1, 3), Fraction(-1, 7), Fraction(2, 11)])
        x = Fraction(5, 13)
        assert p(x) == Fraction(1, 3) - Fraction(1, 7) * x + Fraction(2, 11) * x * x

    def test_pretty_printing(self):
        p = Polynomial([Fraction(-9, 14), 0, Fraction(13, 14), Fraction(-2, 7)])
        assert str(p) == "-2/7*t^3 + 13/14*t^2 - 9/14"
        assert str(Polynomial.zero()) == "0"

    @given(small_polys, small_polys)
    def test_addition_commutes(self, p, q):
        assert (p + q).coefficients == (q + p).coefficients

    @given(small_polys, small_polys, st.fractions(max_denominator=20))
    def test_product_evaluates_pointwise(self, p, q, x):
        assert (p * q)(x) == p(x) * q(x)

    @given(small_polys, st.integers(min_value=0, max_value=4))
    def test_power_matches_repeated_product(self, p, k):
        expected = Polynomial.constant(1)
        for _ in range(k):
            expected = expected * p
        assert (p**k).coefficients == expected.coefficients


class TestCalculus:
    def test_derivative_of_cubic(self):
        p = Polynomial([Fraction(-9, 14), 0, Fraction(13, 14), Fraction(-2, 7)])
        assert derivative(p).coefficients == (
            Fraction(0),
            Fraction(13, 7),
            Fraction(-6, 7),
        )

    def test_derivative_drops_constants(self):
        assert derivative(Polynomial.constant(5)).is_zero

    def test_square_integral(self):
        p = Polynomial.monomial(2)
        assert integrate_definite(p, 1, 3) == Fraction(26, 3)

    def test_empty_interval_integral_vanishes(self):
        p = Polynomial([1, 2, 3])
        assert integrate_definite(p, Fraction(5, 7), Fraction(5, 7)) == 0

    def test_integral_rejects_reversed_interval(self):
        with pytest.raises(DomainError):
            integrate_definite(Polynomial.monomial(1), 3, 1)

    def test_shifted_volume_integral(self):
        # B^(n+1) - (A+t)^(n+1) with n=1, A=1, B=3 over [0, B-A]:
        # 9*2 - 26/3 = 28/3, and dividing by B^(n+1) - A^(n+1) = 8 gives the
        # normalized section area 7/6.
        p = Polynomial.constant(9) - Polynomial.shifted_power(1, 2)
        raw = integrate_definite(p, 0, 2)
        assert raw == Fraction(28, 3)
        assert raw / 8 == Fraction(7, 6)

    def test_shifted_cubic_constant_integral(self):
        # A constant 27 head with the same quadratic tail lands on 136/3.
        p = Polynomial.constant(27) - Polynomial.shifted_power(1, 2)
        assert integrate_definite(p, 0, 2) == Fraction(136, 3)

    @given(
        small_polys,
        st.fractions(max_denominator=12),
        st.fractions(max_denominator=12),
        st.fractions(max_denominator=12),
    )
    def test_integral_is_additive_over_adjacent_intervals(self, p, a, b, c):
        lo, mid, hi = sorted([a, b, c])
        whole = integrate_definite(p, lo, hi)
        split = integrate_definite(p, lo, mid) + integrate_definite(p, mid, hi)
        assert whole == split

    @given(small_polys)
    def test_derivative_inverts_antiderivative(self, p):
        assert p.antiderivative().derivative().coefficients == p.coefficients

    @settings(max_examples=25)
    @given(st.integers(min_value=0, max_value=50))
    def test_antiderivative_round_trip_high_degree(self, k):
        p = Polynomial.monomial(k, Fraction(3, 7))
        assert p.antiderivative().derivative().coefficients == p.coefficients
