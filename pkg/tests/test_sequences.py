from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from supercong.exact import primes_in
from supercong.sequences import (
    SeqCache,
    binomial,
    central_catalan_summand,
    euler_number,
    fermat_quotient2,
    harmonic,
    odd_square_harmonic,
    pochhammer,
)


def product_pochhammer(a: Fraction, k: int) -> Fraction:
    """Plain-product oracle, no shortcuts."""
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer(Fraction(1, 2), 0) == 1

    def test_negative_half(self):
        assert pochhammer(Fraction(-1, 2), 2) == Fraction(-1, 4)

    def test_hits_zero(self):
        assert pochhammer(-3, 5) == 0

    def test_rejects_negative_index(self):
        with pytest.raises(ValueError):
            pochhammer(1, -1)

    @given(
        st.fractions(min_value=-50, max_value=50, max_denominator=6),
        st.integers(0, 12),
        st.integers(0, 12),
    )
    @settings(max_examples=80, deadline=None)
    def test_addition_law(self, a, j, k):
        assert pochhammer(a, j + k) == pochhammer(a, j) * pochhammer(a + j, k)

    def test_ratio_facts_up_to_200(self):
        half = Fraction(1, 2)
        for k in range(201):
            assert pochhammer(half, k) / pochhammer(1, k) == Fraction(binomial(2 * k, k), 4**k)
            assert pochhammer(-half, k) / pochhammer(half, k) == Fraction(1, 1 - 2 * k)
            assert pochhammer(Fraction(1, 4), k) * pochhammer(Fraction(3, 4), k) / pochhammer(
                1, k
            ) ** 2 == Fraction(binomial(4 * k, 2 * k) * binomial(2 * k, k), 64**k)
            assert pochhammer(half, k) / pochhammer(Fraction(3, 2), k) == Fraction(1, 2 * k + 1)


class TestBinomial:
    @pytest.mark.parametrize("n,k,expected", [(4, 2, 6), (8, 4, 70), (5, 7, 0), (5, -1, 0), (0, 0, 1)])
    def test_values(self, n, k, expected):
        assert binomial(n, k) == expected

    def test_product_oracle(self):
        # direct falling-factorial quotient
        n, k = 8, 4
        num = den = 1
        for i in range(k):
            num *= n - i
            den *= i + 1
        assert binomial(n, k) == num // den == 70


class TestHarmonic:
    def test_empty(self):
        assert harmonic(0) == 0
        assert harmonic(0, 3) == 0

    def test_first_order(self):
        assert harmonic(2) == Fraction(3, 2)

    def test_second_order(self):
        assert harmonic(3, 2) == Fraction(1) + Fraction(1, 4) + Fraction(1, 9) == Fraction(49, 36)

    def test_cache_consistency(self):
        # ask out of order; prefix rows must not corrupt
        assert harmonic(10) == sum(Fraction(1, j) for j in range(1, 11))
        assert harmonic(4) == sum(Fraction(1, j) for j in range(1, 5))
        assert harmonic(25, 2) == sum(Fraction(1, j * j) for j in range(1, 26))


class TestOddSquareHarmonic:
    def test_values(self):
        assert odd_square_harmonic(0) == 0
        assert odd_square_harmonic(2) == Fraction(10, 9)
        assert odd_square_harmonic(3) == Fraction(1) + Fraction(1, 9) + Fraction(1, 25) == Fraction(259, 225)

    @pytest.mark.parametrize("k", [0, 1, 2, 5, 17, 50])
    def test_harmonic_split(self, k):
        assert odd_square_harmonic(k) == harmonic(2 * k, 2) - harmonic(k, 2) / 4


class TestFermatQuotient:
    @pytest.mark.parametrize("p,expected", [(5, 3), (7, 9), (11, 93)])
    def test_values(self, p, expected):
        assert fermat_quotient2(p) == expected

    def test_integral_for_all_primes_to_199(self):
        for p in primes_in(3, 199):
            q = fermat_quotient2(p)
            assert q * p == 2 ** (p - 1) - 1

    def test_rejects_non_prime(self):
        with pytest.raises(ValueError):
            fermat_quotient2(9)
        with pytest.raises(ValueError):
            fermat_quotient2(2)


class TestEulerNumbers:
    @pytest.mark.parametrize("n,expected", [(0, 1), (2, -1), (4, 5), (6, -61), (8, 1385)])
    def test_small_values(self, n, expected):
        assert euler_number(n) == expected

    def test_odd_indices_vanish(self):
        assert all(euler_number(n) == 0 for n in range(1, 40, 2))

    def test_against_sympy(self):
        for n in range(0, 60):
            assert euler_number(n) == int(sympy.euler(n))

    def test_recurrence_directly(self):
        # sum over even j of C(2m, j) E_j must vanish for each m >= 1
        for n in range(2, 60, 2):
            total = sum(binomial(n, j) * euler_number(j) for j in range(0, n + 1, 2))
            assert total == 0

    def test_large_index_integral(self):
        value = euler_number(196)
        assert isinstance(value, int)
        assert value != 0


class TestCatalanSummand:
    @pytest.mark.parametrize(
        "k,expected", [(0, Fraction(1)), (1, Fraction(1, 16)), (2, Fraction(21, 1024))]
    )
    def test_values(self, k, expected):
        assert central_catalan_summand(k) == expected

    def test_catalan_number_factor(self):
        # binomial(4k, 2k) / (2k+1) is the Catalan number of index 2k
        for k in range(10):
            catalan = binomial(4 * k, 2 * k) - binomial(4 * k, 2 * k + 1)
            assert central_catalan_summand(k) == Fraction(
                catalan * binomial(2 * k, k), 64**k
            )


class TestSeqCache:
    def test_cached_equals_recomputed(self):
        cache = SeqCache()
        calls = []

        def compute():
            calls.append(1)
            return Fraction(22, 7)

        first = cache.get_or_compute("x", 3, compute)
        second = cache.get_or_compute("x", 3, compute)
        assert first == second == Fraction(22, 7)
        assert len(calls) == 1
        assert len(cache) == 1

    def test_distinct_keys(self):
        cache = SeqCache()
        cache.get_or_compute("a", 1, lambda: 10)
        assert cache.get_or_compute("b", 1, lambda: 20) == 20
        assert cache.get_or_compute("a", 1, lambda: 99) == 10
