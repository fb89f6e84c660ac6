from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supercong.poly import (
    NotDivisible,
    PoleAtPoint,
    Poly,
    RatFunc,
    eval_with_cancellation,
    pochhammer_poly,
    poly_arith,
    poly_div_exact,
    poly_gcd,
)
from supercong.sequences import pochhammer

X = Poly.variable()

small_polys = st.lists(
    st.fractions(min_value=-9, max_value=9, max_denominator=4), min_size=0, max_size=5
).map(Poly)


class TestPolyBasics:
    def test_trailing_zeros_trimmed(self):
        assert Poly((1, 2, 0, 0)) == Poly((1, 2))
        assert Poly((0, 0)).is_zero()

    def test_degree(self):
        assert Poly((5,)).degree == 0
        assert (X * X).degree == 2
        assert Poly().degree == -math.inf

    def test_product_of_conjugates(self):
        assert (X + 1) * (X - 1) == X * X - 1

    def test_cancellation_to_zero(self):
        assert (X * X - 1) + (1 - X * X) == Poly()

    def test_monomial_product(self):
        assert (2 * X) * (3 * X * X) == Poly((0, 0, 0, 6))

    def test_named_ops(self):
        assert poly_arith(X, X, "add") == 2 * X
        assert poly_arith(X, X, "sub") == Poly()
        assert poly_arith(X, X, "mul") == X * X
        with pytest.raises(ValueError):
            poly_arith(X, X, "div")

    def test_evaluate_horner(self):
        p = 3 * X * X * X - X + Fraction(1, 2)
        x0 = Fraction(2, 3)
        assert p.evaluate(x0) == 3 * x0**3 - x0 + Fraction(1, 2)

    def test_immutable(self):
        with pytest.raises(AttributeError):
            X.coeffs = ()


class TestExactDivision:
    def test_difference_of_squares(self):
        assert poly_div_exact(X * X - 1, X - 1) == X + 1

    def test_common_monomial(self):
        assert poly_div_exact(X * X + X, X) == X + 1

    def test_not_divisible(self):
        with pytest.raises(NotDivisible):
            poly_div_exact(X * X + 1, X - 1)

    def test_zero_dividend(self):
        assert poly_div_exact(Poly(), X - 1) == Poly()

    @given(small_polys, small_polys)
    @settings(max_examples=100, deadline=None)
    def test_round_trip(self, a, b):
        if b.is_zero():
            return
        assert poly_div_exact(a * b, b) == a

    @given(small_polys, small_polys)
    @settings(max_examples=60, deadline=None)
    def test_divmod_invariant(self, a, b):
        if b.is_zero():
            return
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.degree < b.degree


class TestGcd:
    def test_shared_factor(self):
        a = (X - 1) * (X + 2)
        b = (X - 1) * (X - 3)
        assert poly_gcd(a, b) == X - 1

    def test_coprime(self):
        g = poly_gcd(X + 1, X - 1)
        assert g.degree == 0

    def test_gcd_is_monic(self):
        g = poly_gcd(2 * (X - 1) * (X - 1), 4 * (X - 1))
        assert g == X - 1


class TestPochhammerPoly:
    def test_shifted_product(self):
        assert pochhammer_poly(X, 2) == X * X + X

    def test_three_around_zero(self):
        assert pochhammer_poly(X - 1, 3) == X * X * X - X  # (x-1) x (x+1)

    def test_empty(self):
        assert pochhammer_poly(X, 0) == Poly((1,))

    def test_rejects_higher_degree(self):
        with pytest.raises(ValueError):
            pochhammer_poly(X * X, 2)

    def test_agrees_with_scalar_pochhammer(self):
        rng = random.Random(20931)
        points = [Fraction(rng.randint(-40, 40), rng.randint(1, 9)) for _ in range(20)]
        for shift in (0, Fraction(5, 2), -3):
            base = X + shift
            for k in (0, 1, 2, 7, 30):
                as_poly = pochhammer_poly(base, k)
                for x0 in points:
                    assert as_poly.evaluate(x0) == pochhammer(x0 + shift, k)


class TestRatFunc:
    def test_denominator_made_monic(self):
        f = RatFunc(4 * X, 2 * X + 2)
        assert f.den == X + 1
        assert f.num == 2 * X

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            RatFunc(X, Poly())

    def test_reduced_cancels_gcd(self):
        f = RatFunc((X - 1) * (X + 1), (X - 1) * (X + 2)).reduced()
        assert f.num == X + 1
        assert f.den == X + 2
        assert poly_gcd(f.num, f.den).degree == 0


class TestEvalWithCancellation:
    def test_removable_singularity(self):
        assert eval_with_cancellation(RatFunc(X * X - 1, X - 1), 1) == 2

    def test_plain_evaluation(self):
        assert eval_with_cancellation(RatFunc(X - 3, X - 1), 2) == -1

    def test_pole_detected(self):
        with pytest.raises(PoleAtPoint):
            eval_with_cancellation(RatFunc(X + 1, (X - 1) * (X - 1)), 1)

    def test_zero_numerator(self):
        assert eval_with_cancellation(RatFunc(Poly(), X - 1), 1) == 0

    def test_double_cancellation(self):
        f = RatFunc((X - 2) * (X - 2) * (X + 1), (X - 2) * (X - 2) * (X + 3))
        assert eval_with_cancellation(f, 2) == Fraction(3, 5)

    @given(small_polys, small_polys, st.fractions(min_value=-5, max_value=5, max_denominator=3))
    @settings(max_examples=80, deadline=None)
    def test_agrees_with_direct_evaluation(self, num, den, x0):
        if den.is_zero() or den.evaluate(x0) == 0:
            return
        f = RatFunc(num, den)
        assert eval_with_cancellation(f, x0) == num.evaluate(x0) / den.evaluate(x0)


class TestLimitInstances:
    def test_second_limit_by_hand_at_n2(self):
        # numerator (x-1) x (1/2-x)(3/2-x), denominator (x-1) x (x+1) (3/2-x)(5/2-x):
        # after one cancellation the value at 1 is (-1/2) / 3 = -1/6
        num = (X - 1) * X * (Fraction(1, 2) - X) * (Fraction(3, 2) - X)
        den = (X - 1) * X * (X + 1) * (Fraction(3, 2) - X) * (Fraction(5, 2) - X)
        n = 2
        assert eval_with_cancellation(RatFunc(num, den), 1) == Fraction(-1, 6)
        assert Fraction(-1, n * (n - 1) * (2 * n - 1)) == Fraction(-1, 6)
