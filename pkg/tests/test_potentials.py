"""Tests for the quantum and self-gravitational fields."""

import math

import numpy as np
import pytest

from gravicol.ensemble.averages import enclosed_probability_closed_form
from gravicol.errors import NegativeRadius
from gravicol.packet.potentials import (
    FieldKind,
    field,
    force_balance_radius,
    force_from_potential,
    grav_force,
    grav_force_scale,
    grav_potential,
    mean_field_potential,
    quantum_force,
    quantum_force_scale,
    quantum_potential,
    quantum_potential_from_laplacian,
)
from gravicol.particle import ParticleSpec

SPECS = [ParticleSpec(1.0, 1.0), ParticleSpec(0.3, 2.5), ParticleSpec(7.0, 0.2)]

# Outside ~0.05σ₀ the finite-difference Laplacian keeps 1e-8; √6σ₀ is Q's root.
LAPLACIAN_RADII = [0.0, 0.05, 0.3, 0.9, 1.0, 1.7, 2.0]

GRADIENT_RADII = [0.01, 0.2, 0.5, 1.0, 1.5, 2.5, 4.0]


@pytest.mark.parametrize("spec", SPECS)
@pytest.mark.parametrize("x", LAPLACIAN_RADII)
def test_quantum_potential_matches_laplacian(spec, x, natural):
    r = x * spec.sigma0
    assert quantum_potential_from_laplacian(spec, r, natural) == pytest.approx(
        quantum_potential(spec, r, natural), rel=1e-8
    )


@pytest.mark.parametrize("spec", SPECS)
@pytest.mark.parametrize("x", GRADIENT_RADII)
def test_forces_are_negative_gradients(spec, x, natural):
    r = x * spec.sigma0
    q_scale = quantum_force_scale(spec, natural)
    g_scale = grav_force_scale(spec, natural)

    numeric_q = force_from_potential(quantum_potential, spec, r, natural)
    numeric_g = force_from_potential(grav_potential, spec, r, natural)

    assert numeric_q / q_scale == pytest.approx(quantum_force(spec, r, natural) / q_scale, rel=1e-8, abs=1e-10)
    assert numeric_g / g_scale == pytest.approx(grav_force(spec, r, natural) / g_scale, rel=1e-8, abs=1e-10)


def test_gradient_check_in_si(si):
    spec = ParticleSpec(mass=1e-17, sigma0=1e-7)
    r = 0.8e-7
    scale = grav_force_scale(spec, si)
    numeric = force_from_potential(grav_potential, spec, r, si)
    assert numeric / scale == pytest.approx(grav_force(spec, r, si) / scale, rel=1e-8, abs=1e-10)


class TestClosedForms:
    def test_quantum_potential_at_center(self, natural):
        assert quantum_potential(ParticleSpec(1.0, 1.0), 0.0, natural) == pytest.approx(0.75)

    def test_quantum_potential_root(self, natural):
        assert quantum_potential(ParticleSpec(1.0, 1.0), math.sqrt(6.0), natural) == pytest.approx(0.0, abs=1e-15)

    def test_grav_potential_is_zero_at_center_and_rising(self, natural):
        spec = ParticleSpec(2.0, 1.0)
        values = [grav_potential(spec, r, natural) for r in np.linspace(0.0, 5.0, 11)]
        assert values[0] == 0.0
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_force_directions(self, natural):
        spec = ParticleSpec(1.0, 1.0)
        for r in (0.1, 1.0, 3.0):
            assert quantum_force(spec, r, natural) > 0
            assert grav_force(spec, r, natural) < 0
        assert quantum_force(spec, 0.0, natural) == 0.0
        assert grav_force(spec, 0.0, natural) == 0.0

    def test_negative_radius_rejected(self, natural):
        with pytest.raises(NegativeRadius):
            quantum_force(ParticleSpec(1.0, 1.0), -1.0, natural)

    def test_field_binding(self, natural):
        spec = ParticleSpec(1.5, 0.7)
        bound = field(spec, FieldKind.GRAV_FORCE, natural)
        assert bound(0.4) == grav_force(spec, 0.4, natural)
        assert bound.kind is FieldKind.GRAV_FORCE


class TestForceBalanceRadius:
    def test_forces_cancel_at_balance_radius(self, natural):
        spec = ParticleSpec(2.0, 1.0)
        r_star = force_balance_radius(spec, natural)
        assert r_star is not None
        total = quantum_force(spec, r_star, natural) + grav_force(spec, r_star, natural)
        assert total / quantum_force_scale(spec, natural) == pytest.approx(0.0, abs=1e-12)

    def test_no_crossing_for_light_particles(self, natural):
        assert force_balance_radius(ParticleSpec(0.5, 1.0), natural) is None


class TestMeanFieldPotential:
    def test_center_value(self, natural):
        spec = ParticleSpec(1.0, 1.0)
        assert mean_field_potential(spec, 0.0, natural) == pytest.approx(-math.sqrt(2.0 / math.pi), rel=1e-15)

    def test_continuous_at_center(self, natural):
        spec = ParticleSpec(1.0, 1.0)
        assert mean_field_potential(spec, 1e-8, natural) == pytest.approx(
            mean_field_potential(spec, 0.0, natural), rel=1e-12
        )

    def test_point_mass_limit(self, natural):
        spec = ParticleSpec(3.0, 0.5)
        assert mean_field_potential(spec, 10.0, natural) == pytest.approx(-9.0 / 10.0, rel=1e-14)

    @pytest.mark.parametrize("r", [0.3, 1.0, 2.0])
    def test_gradient_is_enclosed_mass_attraction(self, r, natural):
        spec = ParticleSpec(1.0, 1.0)
        numeric = force_from_potential(mean_field_potential, spec, r, natural)
        expected = -enclosed_probability_closed_form(r) / r**2
        assert numeric == pytest.approx(expected, rel=1e-7)
