"""Closed-form counters, exact probabilities, and decimal rendering.

Identities under test, with k half the sojourn time of a length-2n path:

  all paths      C(2k, k) C(2n-2k, n-k)          sums to 4**n
  bridges        C(2n, n) / (n+1) for every k    the uniform row
  positive end   (k/n) C(2k, k) C(2n-2k, n-k)    sums to 2**(2n-1)
  decomposed     sum of 2 Cat(n-l) C(2l-2, l-1) over l in [1, k]

Spot values are frozen from exhaustive enumeration (see test_enumeration).
"""

from decimal import Decimal, ROUND_HALF_EVEN, localcontext
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sojourn import (
    PathClass,
    binomial,
    conditional_positive_probability,
    count_all,
    count_bridges,
    count_bridges_by_sojourn,
    count_by_sojourn,
    count_positive_end_by_sojourn,
    count_positive_end_by_sojourn_sum,
    decimal_string,
    sojourn_pmf,
)
from sojourn.closed_form import ExactDivisionError, _exact_div

half_indices = st.integers(1, 120).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(0, n)))


class TestBinomial:
    def test_examples(self):
        assert binomial(4, 2) == 6
        assert binomial(0, 0) == 1
        assert binomial(4, 5) == 0
        assert binomial(4, -1) == 0

    def test_negative_upper_index_rejected(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)

    @given(st.integers(0, 200), st.integers(-5, 205))
    def test_pascal_recurrence(self, a, b):
        assert binomial(a + 1, b) == binomial(a, b) + binomial(a, b - 1)


class TestTotals:
    def test_count_all(self):
        assert count_all(0) == 1
        assert count_all(4) == 16
        with pytest.raises(ValueError):
            count_all(-1)

    def test_count_bridges(self):
        assert count_bridges(2) == 2
        assert count_bridges(4) == 6
        assert count_bridges(3) == 0
        assert count_bridges(0) == 1


class TestCountBySojourn:
    def test_frozen_cells(self):
        assert count_by_sojourn(2, 0) == 6
        assert count_by_sojourn(2, 1) == 4
        assert count_by_sojourn(2, 2) == 6
        assert count_by_sojourn(0, 0) == 1

    def test_range_errors(self):
        with pytest.raises(ValueError):
            count_by_sojourn(2, 3)
        with pytest.raises(ValueError):
            count_by_sojourn(2, -1)
        with pytest.raises(ValueError):
            count_by_sojourn(-1, 0)

    @given(half_indices)
    def test_reflection_symmetry(self, nk):
        n, k = nk
        assert count_by_sojourn(n, k) == count_by_sojourn(n, n - k)

    @given(st.integers(1, 120))
    def test_row_sums_to_all_paths(self, n):
        assert sum(count_by_sojourn(n, k) for k in range(n + 1)) == 4 ** n


class TestBridgesBySojourn:
    def test_frozen_cells(self):
        assert count_bridges_by_sojourn(2, 0) == 2
        assert count_bridges_by_sojourn(2, 1) == 2
        assert count_bridges_by_sojourn(2, 2) == 2
        assert count_bridges_by_sojourn(3, 2) == 5

    @given(half_indices)
    def test_row_is_uniform(self, nk):
        n, k = nk
        assert count_bridges_by_sojourn(n, k) == count_bridges_by_sojourn(n, 0)

    @given(st.integers(1, 120))
    def test_row_sums_to_bridge_total(self, n):
        row = sum(count_bridges_by_sojourn(n, k) for k in range(n + 1))
        assert row == binomial(2 * n, n)


class TestPositiveEndBySojourn:
    def test_frozen_cells(self):
        assert count_positive_end_by_sojourn(1, 1) == 2
        assert count_positive_end_by_sojourn(2, 0) == 0
        assert count_positive_end_by_sojourn(2, 1) == 2
        assert count_positive_end_by_sojourn(2, 2) == 6
        assert count_positive_end_by_sojourn(3, 1) == 4
        assert count_positive_end_by_sojourn(3, 2) == 8

    @given(half_indices)
    def test_integrality_of_the_k_over_n_tilt(self, nk):
        # (k/n) C(2k,k) C(2n-2k,n-k) must divide exactly; _exact_div would
        # raise otherwise, so surviving the call is the assertion
        n, k = nk
        value = count_positive_end_by_sojourn(n, k)
        assert value * n == k * count_by_sojourn(n, k)

    @given(half_indices)
    def test_dominated_by_the_unconditioned_count(self, nk):
        n, k = nk
        positive = count_positive_end_by_sojourn(n, k)
        everyone = count_by_sojourn(n, k)
        assert positive <= everyone
        assert (positive == everyone) == (k == n)

    @given(st.integers(1, 120))
    def test_row_sums_to_half_of_all_paths(self, n):
        row = sum(count_positive_end_by_sojourn(n, k) for k in range(n + 1))
        assert row == 2 ** (2 * n - 1)


class TestDecomposedSum:
    def test_frozen_cells(self):
        assert count_positive_end_by_sojourn_sum(2, 1) == 2
        assert count_positive_end_by_sojourn_sum(3, 1) == 4
        assert count_positive_end_by_sojourn_sum(3, 2) == 8
        assert count_positive_end_by_sojourn_sum(5, 1) == 28

    def test_range_errors(self):
        with pytest.raises(ValueError):
            count_positive_end_by_sojourn_sum(3, 0)
        with pytest.raises(ValueError):
            count_positive_end_by_sojourn_sum(0, 1)

    @given(st.integers(1, 300).flatmap(
        lambda n: st.tuples(st.just(n), st.integers(1, n))))
    def test_agrees_with_the_direct_formula(self, nk):
        n, k = nk
        assert count_positive_end_by_sojourn_sum(n, k) == \
            count_positive_end_by_sojourn(n, k)


class TestConditionalProbability:
    def test_examples(self):
        assert conditional_positive_probability(10, 7) == Fraction(7, 10)
        assert conditional_positive_probability(5, 0) == 0
        assert conditional_positive_probability(5, 5) == 1

    def test_seventy_percent_headline(self):
        for n in (10, 20, 50, 100, 200):
            assert conditional_positive_probability(n, 7 * n // 10) == Fraction(7, 10)

    def test_range_errors(self):
        with pytest.raises(ValueError):
            conditional_positive_probability(0, 0)
        with pytest.raises(ValueError):
            conditional_positive_probability(5, 6)

    @given(half_indices)
    def test_equals_k_over_n_in_lowest_terms(self, nk):
        n, k = nk
        probability = conditional_positive_probability(n, k)
        assert probability == Fraction(k, n)
        assert probability.denominator <= n

    @given(half_indices.filter(lambda nk: nk[1] > 0))
    def test_matches_the_count_ratio(self, nk):
        n, k = nk
        ratio = Fraction(count_positive_end_by_sojourn(n, k), count_by_sojourn(n, k))
        assert conditional_positive_probability(n, k) == ratio


class TestSojournPmf:
    def test_frozen_pmfs(self):
        assert sojourn_pmf(1, PathClass.ALL) == {0: Fraction(1, 2), 1: Fraction(1, 2)}
        assert sojourn_pmf(2, PathClass.BRIDGE) == {
            0: Fraction(1, 3), 1: Fraction(1, 3), 2: Fraction(1, 3)}
        assert sojourn_pmf(2, PathClass.POSITIVE_END) == {
            0: 0, 1: Fraction(1, 4), 2: Fraction(3, 4)}

    @pytest.mark.parametrize("path_class", list(PathClass))
    def test_sums_to_one(self, path_class):
        for n in (1, 2, 3, 7, 20, 40):
            assert sum(sojourn_pmf(n, path_class).values()) == 1

    def test_rejects_nonpositive_n(self):
        with pytest.raises(ValueError):
            sojourn_pmf(0, PathClass.ALL)


class TestExactDivision:
    def test_exact_quotient(self):
        assert _exact_div(12, 4) == 3

    def test_remainder_raises(self):
        with pytest.raises(ExactDivisionError):
            _exact_div(13, 4)


class TestDecimalString:
    def test_examples(self):
        assert decimal_string(Fraction(7, 10)) == "0.7"
        assert decimal_string(Fraction(1, 4)) == "0.25"
        assert decimal_string(Fraction(1, 3)) == "0.333333333333"
        assert decimal_string(Fraction(2, 3)) == "0.666666666667"
        assert decimal_string(Fraction(0)) == "0"
        assert decimal_string(Fraction(1)) == "1"
        assert decimal_string(7) == "7"

    def test_half_even_rounding(self):
        assert decimal_string(Fraction(125, 1000), digits=2) == "0.12"
        assert decimal_string(Fraction(375, 1000), digits=2) == "0.38"
        assert decimal_string(Fraction(25, 100), digits=1) == "0.2"
        assert decimal_string(Fraction(35, 100), digits=1) == "0.4"

    def test_carry_across_the_leading_digit(self):
        assert decimal_string(Fraction(999999999999995, 10 ** 15)) == "1"
        assert decimal_string(Fraction(9999, 10000), digits=3) == "1"

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            decimal_string(Fraction(-1, 2))
        with pytest.raises(ValueError):
            decimal_string(Fraction(1, 2), digits=0)

    @given(st.integers(0, 10 ** 9), st.integers(1, 10 ** 9), st.integers(1, 20))
    def test_matches_the_decimal_module(self, numerator, denominator, digits):
        with localcontext() as context:
            context.prec = digits
            context.rounding = ROUND_HALF_EVEN
            reference = Decimal(numerator) / Decimal(denominator)
        expected = format(reference.normalize(), "f")
        assert decimal_string(Fraction(numerator, denominator), digits) == expected
