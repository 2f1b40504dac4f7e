"""Limit-law CDFs, the quadrature cross-check, and KS distances.

Claims exercised here:
  * closed-form CDFs hit their anchors: F(0) = 0, F(1) = 1, arcsine
    F(1/2) = 1/2, mp-positive F(1/2) = 1/2 - 1/pi
  * the adaptive-Simpson route (no shared code) reproduces each CDF
  * the even mixture of the two conditioned laws is the arcsine law
  * exact finite-length CDFs approach their limits; frozen KS values pin
    the rate, which shrinks like 1/sqrt(n)
"""

import math
from fractions import Fraction

import pytest

from sojourn import (
    LimitLaw,
    PathClass,
    StepCdf,
    cdf,
    cdf_quadrature,
    density,
    finite_n_cdf,
    ks_distance,
)

ALL_LAWS = list(LimitLaw)


class TestClosedFormCdf:
    @pytest.mark.parametrize("law", ALL_LAWS)
    def test_anchors(self, law):
        assert cdf(law, 0.0) == 0.0
        assert cdf(law, 1.0) == pytest.approx(1.0, abs=1e-15)

    def test_frozen_midpoints(self):
        assert cdf(LimitLaw.ARCSINE, 0.5) == pytest.approx(0.5, abs=1e-15)
        assert cdf(LimitLaw.MP_POSITIVE, 0.5) == pytest.approx(
            0.5 - 1.0 / math.pi, abs=1e-15)
        assert cdf(LimitLaw.MP_NEGATIVE, 0.5) == pytest.approx(
            0.5 + 1.0 / math.pi, abs=1e-15)

    @pytest.mark.parametrize("law", ALL_LAWS)
    def test_domain_errors(self, law):
        for r in (-0.1, 1.1):
            with pytest.raises(ValueError):
                cdf(law, r)

    @pytest.mark.parametrize("law", ALL_LAWS)
    def test_nondecreasing_on_a_dense_grid(self, law):
        points = 10_000
        previous = 0.0
        for i in range(points + 1):
            value = cdf(law, i / points)
            assert value >= previous - 1e-15
            previous = value

    def test_mixture_recovers_the_arcsine_law(self):
        for i in range(2001):
            r = i / 2000
            mixture = 0.5 * cdf(LimitLaw.MP_POSITIVE, r) + \
                0.5 * cdf(LimitLaw.MP_NEGATIVE, r)
            assert abs(mixture - cdf(LimitLaw.ARCSINE, r)) <= 1e-12


class TestDensity:
    def test_all_densities_cross_at_one_half(self):
        for law in ALL_LAWS:
            assert density(law, 0.5) == pytest.approx(2.0 / math.pi, abs=1e-15)

    def test_mp_positive_grows_toward_one(self):
        assert density(LimitLaw.MP_POSITIVE, 0.99) > density(LimitLaw.MP_POSITIVE, 0.5)

    @pytest.mark.parametrize("law", ALL_LAWS)
    def test_endpoints_rejected(self, law):
        for r in (0.0, 1.0, -0.5, 1.5):
            with pytest.raises(ValueError):
                density(law, r)

    @pytest.mark.parametrize("law", ALL_LAWS)
    def test_density_is_the_cdf_derivative(self, law):
        h = 1e-7
        for r in (0.2, 0.5, 0.8):
            numeric = (cdf(law, r + h) - cdf(law, r - h)) / (2 * h)
            assert numeric == pytest.approx(density(law, r), rel=1e-5)


class TestQuadrature:
    @pytest.mark.parametrize("law", ALL_LAWS)
    def test_matches_the_closed_form(self, law):
        for i in range(41):
            r = i / 40
            assert abs(cdf_quadrature(law, r) - cdf(law, r)) <= 1e-9

    def test_tolerance_validation(self):
        with pytest.raises(ValueError):
            cdf_quadrature(LimitLaw.ARCSINE, 0.5, tol=0.0)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            cdf_quadrature(LimitLaw.ARCSINE, -0.1)


class TestStepCdf:
    def test_from_counts(self):
        step = StepCdf.from_counts(2, (6, 4, 6))
        assert step.support == (0, Fraction(1, 2), 1)
        assert step.cumulative == (Fraction(3, 8), Fraction(5, 8), 1)

    def test_from_counts_validation(self):
        with pytest.raises(ValueError):
            StepCdf.from_counts(2, (1, 2))          # wrong cell count
        with pytest.raises(ValueError):
            StepCdf.from_counts(2, (0, 0, 0))       # empty histogram
        with pytest.raises(ValueError):
            StepCdf.from_counts(2, (1, -1, 1))      # negative cell
        with pytest.raises(ValueError):
            StepCdf.from_counts(0, (1,))

    def test_direct_construction_validation(self):
        with pytest.raises(ValueError):
            StepCdf(support=(), cumulative=())
        with pytest.raises(ValueError):
            StepCdf(support=(Fraction(1, 2), Fraction(1, 2)), cumulative=(0, 1))
        with pytest.raises(ValueError):
            StepCdf(support=(0, 1), cumulative=(Fraction(1, 2), Fraction(1, 4)))
        with pytest.raises(ValueError):
            StepCdf(support=(0, 1), cumulative=(Fraction(1, 2), Fraction(3, 4)))
        with pytest.raises(ValueError):
            StepCdf(support=(0, 2), cumulative=(Fraction(1, 2), 1))

    def test_finite_n_examples(self):
        bridge = finite_n_cdf(2, PathClass.BRIDGE)
        assert bridge.cumulative == (Fraction(1, 3), Fraction(2, 3), 1)
        everyone = finite_n_cdf(1, PathClass.ALL)
        assert everyone.cumulative == (Fraction(1, 2), 1)
        positive = finite_n_cdf(2, PathClass.POSITIVE_END)
        assert positive.cumulative == (0, Fraction(1, 4), 1)
        assert positive.path_class is PathClass.POSITIVE_END


class TestKsDistance:
    def test_point_mass_at_one_is_distance_one(self):
        point = StepCdf(support=(1,), cumulative=(1,))
        assert ks_distance(point, LimitLaw.ARCSINE) == 1.0

    def test_left_limits_count(self):
        # the gap just below the jump at 1 (0.9) beats both right-side gaps
        step = StepCdf(support=(Fraction(1, 2), 1),
                       cumulative=(Fraction(1, 10), 1))
        assert ks_distance(step, LimitLaw.ARCSINE) == pytest.approx(0.9, abs=1e-15)

    def test_frozen_finite_n_distances(self):
        pairs = [
            (PathClass.POSITIVE_END, LimitLaw.MP_POSITIVE,
             {10: 0.352394, 100: 0.112697, 1000: 0.035678}),
            (PathClass.ALL, LimitLaw.ARCSINE,
             {10: 0.176197, 100: 0.056348, 1000: 0.017839}),
        ]
        for path_class, law, frozen in pairs:
            for n, expected in frozen.items():
                distance = ks_distance(finite_n_cdf(n, path_class), law)
                assert distance == pytest.approx(expected, abs=5e-7)

    def test_distance_shrinks_with_n(self):
        for path_class, law in [
            (PathClass.POSITIVE_END, LimitLaw.MP_POSITIVE),
            (PathClass.ALL, LimitLaw.ARCSINE),
        ]:
            distances = [ks_distance(finite_n_cdf(n, path_class), law)
                         for n in (10, 100, 1000)]
            assert distances[0] > distances[1] > distances[2]
