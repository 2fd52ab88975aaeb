"""Tests for radial quadrature and ensemble averages."""

import math
import time

import pytest

from gravicol.ensemble.averages import (
    ENCLOSED_AT_SIGMA0,
    averaged_forces,
    balance_ratio_closed_form,
    enclosed_probability,
    enclosed_probability_closed_form,
    field_estimates,
    mean_grav_acceleration,
    mean_quantum_acceleration,
    mean_radius_closed_form,
    mean_square_velocity,
    radial_moment,
    signed_mean_accelerations,
)
from gravicol.ensemble.quadrature import (
    QuadratureResult,
    QuadratureSpec,
    integrate_interval,
    integrate_radial,
)
from gravicol.errors import InvalidSettings, MaxSubdivisionsExceeded, NumericalError
from gravicol.particle import ParticleSpec
from gravicol.units import PrefactorMode


class TestAveragedForces:
    def test_match_closed_forms_at_random_points(self, random_specs, natural):
        start = time.perf_counter()
        for spec in random_specs:
            forces = averaged_forces(spec, natural)
            assert forces.mean_quantum_accel == pytest.approx(forces.closed_form_quantum, rel=1e-8)
            assert forces.mean_grav_accel == pytest.approx(forces.closed_form_grav, rel=1e-8)
        assert time.perf_counter() - start < 1.0

    def test_closed_form_values(self, natural):
        spec = ParticleSpec(1.0, 1.0)
        assert mean_quantum_acceleration(spec, natural) == pytest.approx(0.5 * math.sqrt(2.0 / math.pi), rel=1e-8)
        assert mean_grav_acceleration(spec, natural) == pytest.approx(1.0 / math.pi, rel=1e-8)

    def test_si_inputs(self, si):
        spec = ParticleSpec(mass=1e-17, sigma0=1e-7)
        forces = averaged_forces(spec, si)
        assert forces.mean_quantum_accel == pytest.approx(forces.closed_form_quantum, rel=1e-8)
        assert forces.mean_grav_accel == pytest.approx(forces.closed_form_grav, rel=1e-8)

    def test_ratio_matches_closed_form(self, natural):
        spec = ParticleSpec(1.7, 0.6)
        assert averaged_forces(spec, natural).ratio == pytest.approx(balance_ratio_closed_form(spec, natural), rel=1e-8)

    def test_signed_averages_keep_directions(self, natural):
        spec = ParticleSpec(1.0, 1.0)
        quantum, grav = signed_mean_accelerations(spec, natural)
        assert quantum == pytest.approx(mean_quantum_acceleration(spec, natural), rel=1e-10)
        assert grav == pytest.approx(-mean_grav_acceleration(spec, natural), rel=1e-10)

    def test_to_dict_keys(self, natural):
        keys = set(averaged_forces(ParticleSpec(1.0, 1.0), natural).to_dict())
        assert keys == {"mean_quantum_accel", "mean_grav_accel", "closed_form_quantum", "closed_form_grav", "ratio"}


class TestEnclosedProbability:
    def test_inside_one_width(self, natural):
        value = enclosed_probability(ParticleSpec(1.0, 1.0), 1.0)
        assert value == pytest.approx(ENCLOSED_AT_SIGMA0, abs=1e-9)
        assert value == pytest.approx(0.198748, abs=1e-6)

    def test_scales_with_width(self):
        assert enclosed_probability(ParticleSpec(1.0, 3.0), 3.0) == pytest.approx(ENCLOSED_AT_SIGMA0, abs=1e-9)

    @pytest.mark.parametrize("x", [0.25, 0.5, 2.0, 4.0])
    def test_matches_erf_form(self, x):
        assert enclosed_probability(ParticleSpec(1.0, 1.0), x) == pytest.approx(
            enclosed_probability_closed_form(x), abs=1e-9
        )

    def test_limits(self):
        spec = ParticleSpec(1.0, 1.0)
        assert enclosed_probability(spec, 0.0) == 0.0
        assert enclosed_probability(spec, 1e3) == pytest.approx(1.0, abs=1e-10)


class TestMoments:
    def test_normalization(self):
        assert radial_moment(ParticleSpec(1.0, 2.0), 0) == pytest.approx(1.0, rel=1e-10)

    def test_mean_radius(self):
        spec = ParticleSpec(1.0, 2.0)
        assert radial_moment(spec, 1) == pytest.approx(mean_radius_closed_form(spec), rel=1e-10)
        assert mean_radius_closed_form(ParticleSpec(1.0, 1.0)) == pytest.approx(1.59577, rel=1e-5)

    def test_second_moment(self):
        assert radial_moment(ParticleSpec(1.0, 0.5), 2) == pytest.approx(0.75, rel=1e-10)


class TestVelocitiesAndFields:
    def test_mean_square_velocity_paper(self):
        spec = ParticleSpec(1.0, 1.0)
        assert mean_square_velocity(spec, 2.0, 3.0) == pytest.approx(36.0)

    def test_mean_square_velocity_exact_weights_inner_mass(self):
        spec = ParticleSpec(1.0, 1.0)
        exact = mean_square_velocity(spec, 2.0, 3.0, PrefactorMode.EXACT)
        assert exact == pytest.approx(36.0 * ENCLOSED_AT_SIGMA0, rel=1e-9)

    def test_field_estimates(self, natural):
        estimates = field_estimates(ParticleSpec(2.0, 1.0), natural)
        assert estimates.order_of_magnitude == 2.0
        assert estimates.ensemble_mean == pytest.approx(2.0 / math.pi)
        assert estimates.peak_local == pytest.approx(2.0 * math.sqrt(2.0 / math.pi) * math.exp(-0.5))
        assert estimates.footnote_quoted == pytest.approx(4.0 * math.sqrt(2.0 / math.pi))


class TestQuadratureMachinery:
    def test_spec_validation(self):
        with pytest.raises(InvalidSettings):
            QuadratureSpec(rel_tol=1e-16)
        with pytest.raises(InvalidSettings):
            QuadratureSpec(truncation_radius=4.0)
        with pytest.raises(InvalidSettings):
            QuadratureSpec(max_subdivisions=0)

    def test_gaussian_integral(self):
        result = integrate_interval(lambda x: math.exp(-x * x), 0.0, 10.0)
        assert result.converged
        assert result.unwrap() == pytest.approx(0.5 * math.sqrt(math.pi), rel=1e-12)

    def test_radial_normalization(self):
        shell = lambda x: math.sqrt(2.0 / math.pi) * x * x * math.exp(-0.5 * x * x)  # noqa: E731
        assert integrate_radial(shell).unwrap() == pytest.approx(1.0, rel=1e-10)

    def test_subdivision_limit_raises(self):
        tight = QuadratureSpec(max_subdivisions=1)
        result = integrate_interval(lambda x: math.sin(50.0 * x) ** 2, 0.0, 10.0, tight)
        assert not result.converged
        with pytest.raises(MaxSubdivisionsExceeded) as excinfo:
            result.unwrap(module="tests", tolerance=1e-10)
        assert "[tests]" in str(excinfo.value)
        assert "tolerance 1e-10" in str(excinfo.value)

    def test_other_failures_are_numerical_errors(self):
        result = QuadratureResult(value=1.0, error=1.0, converged=False, subdivisions=3, message="roundoff")
        with pytest.raises(NumericalError):
            result.unwrap()
