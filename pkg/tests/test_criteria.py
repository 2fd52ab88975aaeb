"""Tests for the critical width and mass, regime classification and reduction times."""

import math

import pytest

from gravicol.collapse.criteria import (
    EXACT_WIDTH_FACTOR,
    Regime,
    balance_solve,
    classify,
    critical_mass,
    critical_width,
    regime_for_ratio,
)
from gravicol.collapse.reduction import critical_spec, estimate_reduction
from gravicol.errors import BracketFailure, NonPositiveMass, NumericalError
from gravicol.particle import ParticleSpec
from gravicol.units import PrefactorMode, planck_units

PLANCK_MASS = 2.176434e-8


class TestCriticalScales:
    def test_paper_width_constant_is_one(self, natural):
        assert critical_width(2.0, natural, PrefactorMode.PAPER) == 1.0 / 8.0

    def test_exact_width_factor(self):
        assert EXACT_WIDTH_FACTOR == pytest.approx(1.25331, rel=1e-5)
        assert EXACT_WIDTH_FACTOR == pytest.approx(math.sqrt(math.pi / 2.0), rel=1e-15)

    @pytest.mark.parametrize("mode", list(PrefactorMode))
    def test_mass_and_width_are_inverse(self, mode, natural):
        for sigma0 in (0.1, 1.0, 37.0):
            m_c = critical_mass(sigma0, natural, mode)
            assert critical_width(m_c, natural, mode) == pytest.approx(sigma0, rel=1e-14)

    def test_si_critical_mass_at_100nm(self, si):
        assert critical_mass(1e-7, si) == pytest.approx(1.186e-17, rel=1e-3)

    def test_si_critical_width_at_planck_mass(self, si):
        assert critical_width(PLANCK_MASS, si) == pytest.approx(1.616255e-35, rel=1e-4)

    def test_bad_mass_rejected(self, natural):
        with pytest.raises(NonPositiveMass):
            critical_width(0.0, natural)


class TestBalanceSolve:
    @pytest.mark.parametrize("mass", [0.3, 1.0, 4.0])
    def test_numeric_balance_matches_exact_width(self, mass, natural):
        expected = critical_width(mass, natural, PrefactorMode.EXACT)
        assert balance_solve(mass, natural) == pytest.approx(expected, rel=1e-6)

    def test_si_balance(self, si):
        mass = 1e-17
        assert balance_solve(mass, si) == pytest.approx(critical_width(mass, si, PrefactorMode.EXACT), rel=1e-6)

    def test_paper_member_is_order_of_magnitude(self, natural):
        ratio = balance_solve(1.0, natural) / critical_width(1.0, natural, PrefactorMode.PAPER)
        assert 1.0 < ratio < 10.0

    def test_width_falls_as_inverse_mass_cubed(self, natural):
        assert balance_solve(1.0, natural) / balance_solve(2.0, natural) == pytest.approx(8.0, rel=1e-6)

    @pytest.mark.parametrize("mass", [0.0, -1.0])
    def test_non_positive_mass(self, mass, natural):
        with pytest.raises(NonPositiveMass):
            balance_solve(mass, natural)

    def test_stable_under_tighter_tolerance(self, natural):
        loose = balance_solve(1.0, natural)
        tight = balance_solve(1.0, natural, xtol=1e-15, rtol=1e-13)
        assert tight == pytest.approx(loose, rel=1e-8)


class TestClassify:
    def test_critical_point_is_transition(self, natural):
        report = classify(ParticleSpec(1.0, 1.0), natural, PrefactorMode.PAPER)
        assert report.regime is Regime.TRANSITION
        assert report.ratio == 1.0
        assert report.m_c == 1.0
        assert report.sigma_c == 1.0

    def test_heavy_and_light(self, natural):
        assert classify(ParticleSpec(2.0, 1.0), natural).regime is Regime.GRAVITY_DOMINANT
        assert classify(ParticleSpec(0.5, 1.0), natural).regime is Regime.QUANTUM_DOMINANT

    def test_exact_mode_shifts_the_threshold(self, natural):
        spec = ParticleSpec(1.0, 1.0)
        exact = classify(spec, natural, PrefactorMode.EXACT)
        assert exact.m_c == pytest.approx(EXACT_WIDTH_FACTOR ** (1.0 / 3.0), rel=1e-14)
        assert exact.regime is Regime.QUANTUM_DOMINANT

    @pytest.mark.parametrize(
        "ratio, regime",
        [
            (1.04, Regime.TRANSITION),
            (0.96, Regime.TRANSITION),
            (1.06, Regime.GRAVITY_DOMINANT),
            (0.94, Regime.QUANTUM_DOMINANT),
        ],
    )
    def test_band(self, ratio, regime):
        assert regime_for_ratio(ratio, band=0.05) is regime

    def test_zero_band(self):
        assert regime_for_ratio(1.0, band=0.0) is Regime.TRANSITION
        assert regime_for_ratio(1.0 + 1e-12, band=0.0) is Regime.GRAVITY_DOMINANT

    @pytest.mark.parametrize("mode", list(PrefactorMode))
    @pytest.mark.parametrize("mass", [1e-18, 1e-17, 2.2e-17, 1e-16])
    def test_ratio_is_unit_invariant(self, mode, mass, si, natural):
        planck = planck_units(si)
        sigma0 = 1e-7
        in_si = classify(ParticleSpec(mass, sigma0), si, mode)
        in_natural = classify(ParticleSpec(mass / planck.mass, sigma0 / planck.length), natural, mode)
        assert in_natural.ratio == pytest.approx(in_si.ratio, rel=1e-12)
        assert in_natural.regime is in_si.regime
        assert in_natural.sigma_c / (sigma0 / planck.length) == pytest.approx(in_si.sigma_c / sigma0, rel=1e-12)

    def test_report_serializes_enum_values(self, natural):
        data = classify(ParticleSpec(1.0, 1.0), natural).to_dict()
        assert data["regime"] == "transition"
        assert data["mode"] == "paper"


class TestReductionTimes:
    def test_routes_agree_at_critical_width(self, rng, natural):
        for mass in rng.uniform(0.1, 10.0, size=20):
            estimate = estimate_reduction(critical_spec(float(mass), natural), natural)
            expected = 1.0 / float(mass) ** 5
            assert estimate.objective_time == pytest.approx(expected, rel=1e-12)
            assert estimate.fall_time == pytest.approx(expected, rel=1e-12)
            assert estimate.uncertainty_time == pytest.approx(expected, rel=1e-12)

    def test_planck_mass_reduction_time(self, si):
        estimate = estimate_reduction(critical_spec(PLANCK_MASS, si), si)
        assert estimate.fall_time == pytest.approx(5.39e-44, rel=5e-3)
        assert estimate.objective_time == pytest.approx(estimate.fall_time, rel=1e-12)

    def test_exact_mode_fall_time(self, natural):
        spec = ParticleSpec(1.0, 1.0)
        paper = estimate_reduction(spec, natural, PrefactorMode.PAPER)
        exact = estimate_reduction(spec, natural, PrefactorMode.EXACT)
        assert exact.fall_time / paper.fall_time == pytest.approx(math.sqrt(2.0 * math.pi), rel=1e-14)

    def test_to_dict(self, natural):
        data = estimate_reduction(ParticleSpec(1.0, 1.0), natural).to_dict()
        assert data["regime"] == "transition"
        assert set(data) >= {"sigma_c", "m_c", "fall_time", "objective_time", "uncertainty_time"}


def test_bracket_failure_records_interval():
    error = BracketFailure("no sign change", interval=(1.0, 2.0), module="gravicol.x", tolerance=1e-6)
    assert isinstance(error, NumericalError)
    assert error.interval == (1.0, 2.0)
    assert "[gravicol.x]" in str(error)
