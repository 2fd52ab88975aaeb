"""Tests for the falling and static observer frames."""

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from gravicol.collapse.frames import (
    FrameTransform,
    einsteinian_from_newtonian,
    einsteinian_phase,
    energy_difference,
    energy_pair,
    energy_velocity_relation,
    from_accelerated_frame,
    newtonian_from_einsteinian,
    newtonian_phase,
    nonlinear_phase_at,
    to_accelerated_frame,
    uncertainty_reduction_time,
)
from gravicol.errors import NonPositiveInput
from gravicol.packet.wavepacket import ComplexAmplitude, packet_state, wavefunction
from gravicol.particle import ParticleSpec


class TestCoordinates:
    def test_forward_and_inverse(self, rng):
        for _ in range(10):
            x, g = rng.normal(size=3), rng.normal(size=3)
            t = float(rng.uniform(0.0, 3.0))
            x_prime, t_prime = to_accelerated_frame(x, t, g)
            back, t_back = from_accelerated_frame(x_prime, t_prime, g)
            assert t_prime == t_back == t
            assert_allclose(back, x, rtol=1e-13, atol=1e-13)

    def test_falling_origin(self):
        transform = FrameTransform(g=np.array([0.0, 0.0, 9.8]), t=2.0)
        x_prime, _ = transform.forward([0.0, 0.0, 0.0])
        assert_allclose(x_prime, [0.0, 0.0, -19.6])


class TestPhaseMaps:
    def test_phase_round_trip(self, rng):
        for _ in range(20):
            S = float(rng.normal(scale=10.0))
            x_prime = rng.normal(size=3)
            t_prime = float(rng.uniform(0.0, 2.0))
            mass = float(rng.uniform(0.1, 10.0))
            g = rng.normal(size=3)
            decomposition = newtonian_phase(S, x_prime, t_prime, mass, g)
            back = einsteinian_phase(decomposition.newtonian_phase, x_prime, t_prime, mass, g)
            assert back == pytest.approx(S, rel=1e-12, abs=1e-12)

    def test_decomposition_terms(self):
        decomposition = newtonian_phase(0.0, [0.0, 0.0, 1.0], 2.0, 3.0, [0.0, 0.0, 1.0])
        assert decomposition.linear_term == pytest.approx(-6.0)
        assert decomposition.cubic_term == pytest.approx(8.0)
        assert decomposition.newtonian_phase == pytest.approx(2.0)

    def test_wave_function_maps_compose_to_identity(self, natural):
        spec = ParticleSpec(1.2, 0.9)
        g = np.array([0.0, 0.0, 1.5])
        t = 0.8
        x = np.array([0.3, -0.2, 0.5])
        psi = wavefunction(packet_state(spec, t, g, natural), x)

        phi = einsteinian_from_newtonian(psi, x, t, spec.mass, g, natural)
        x_prime, t_prime = to_accelerated_frame(x, t, g)
        back = newtonian_from_einsteinian(phi, x_prime, t_prime, spec.mass, g, natural)

        assert back.modulus == psi.modulus
        assert back.phase == pytest.approx(psi.phase, rel=1e-12, abs=1e-12)

    def test_maps_leave_modulus_alone(self, natural):
        psi = ComplexAmplitude(0.4, 1.0)
        phi = einsteinian_from_newtonian(psi, [0.0, 0.0, 1.0], 1.0, 1.0, 2.0, natural)
        assert phi.modulus == 0.4
        assert phi.phase != psi.phase


class TestEnergies:
    @pytest.mark.parametrize("t", [0.1, 1.0, 3.0])
    def test_energy_difference_matches_numeric_derivative(self, t):
        mass, g = 2.0, np.array([0.0, 0.0, 1.3])
        pair = energy_pair(-0.7, mass, g, t)
        assert pair.E == 0.7
        assert pair.difference == pytest.approx(energy_difference(mass, g, t), rel=1e-12)
        assert pair.difference == pytest.approx(-1.5 * mass * 1.69 * t * t, rel=1e-12)
        assert pair.E_prime_numeric == pytest.approx(pair.E_prime, rel=1e-6)

    def test_fixed_position_variant(self):
        pair = energy_pair(0.0, 1.0, 2.0, 1.0, x_prime=[0.0, 0.0, 0.0])
        assert pair.E_prime == pytest.approx(-4.0)
        assert pair.E_prime_numeric == pytest.approx(-4.0, rel=1e-6)

    def test_no_difference_at_release(self):
        pair = energy_pair(-1.0, 1.0, 9.8, 0.0)
        assert pair.difference == 0.0


class TestUncertaintyRoute:
    @pytest.mark.parametrize("mass, g", [(1.0, 1.0), (0.2, 7.0), (5.0, 0.01)])
    def test_nonlinear_phase_is_one_at_tau(self, mass, g, natural):
        tau = uncertainty_reduction_time(mass, g, natural)
        assert nonlinear_phase_at(mass, g, tau, natural) == pytest.approx(1.0, rel=1e-12)

    def test_si_scale(self, si):
        tau = uncertainty_reduction_time(1e-17, 9.8, si)
        assert tau == pytest.approx((si.hbar / (1e-17 * 96.04)) ** (1.0 / 3.0), rel=1e-14)

    def test_zero_field_rejected(self, natural):
        with pytest.raises(NonPositiveInput):
            uncertainty_reduction_time(1.0, 0.0, natural)

    def test_energy_velocity_relation(self):
        relation = energy_velocity_relation(mass=3.0, g=2.0, sigma0=0.5)
        assert relation.tau == pytest.approx(math.sqrt(0.5))
        assert relation.mean_square_velocity == pytest.approx(2.0)
        assert abs(relation.energy_difference) == pytest.approx(relation.kinetic_form, rel=1e-12)
