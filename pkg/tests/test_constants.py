"""Tests for unit presets, Planck scales and particle inputs."""

import math

import pytest

from gravicol.errors import NonPositiveLength, NonPositiveMass, ValidationError
from gravicol.particle import ParticleSpec
from gravicol.units import (
    PhysicalConstants,
    PrefactorMode,
    UnitKind,
    UnitSystem,
    make_units,
    parse_mode,
    planck_units,
    sn_dimensionless_scale,
)
from gravicol.units.constants import C_SI, G_SI, HBAR_SI, KB_SI


class TestUnitSystems:
    def test_natural_preset_is_all_ones(self, natural):
        assert (natural.hbar, natural.G, natural.kB) == (1.0, 1.0, 1.0)
        assert natural.kind is UnitKind.NATURAL_TEST

    def test_si_preset_uses_codata_values(self, si):
        assert si.hbar == HBAR_SI == 1.054571817e-34
        assert si.G == G_SI == 6.67430e-11
        assert si.kB == KB_SI == 1.380649e-23
        assert si.c == C_SI == 299792458.0

    def test_string_kinds_accepted(self):
        assert make_units("si").kind is UnitKind.SI
        assert make_units("natural").kind is UnitKind.NATURAL_TEST

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValidationError):
            make_units("cgs")

    def test_natural_kind_requires_unit_constants(self):
        with pytest.raises(ValidationError):
            UnitSystem(kind=UnitKind.NATURAL_TEST, constants=PhysicalConstants(2.0, 1.0, 1.0, 1.0))

    def test_with_c_only_changes_c(self, si):
        slow = si.with_c(1.0)
        assert slow.c == 1.0
        assert slow.hbar == si.hbar and slow.G == si.G

    def test_to_dict_names_kind(self, natural):
        assert natural.to_dict()["kind"] == "natural"

    def test_parse_mode(self):
        assert parse_mode("paper") is PrefactorMode.PAPER
        assert parse_mode(PrefactorMode.EXACT) is PrefactorMode.EXACT
        with pytest.raises(ValidationError):
            parse_mode("rough")


class TestPlanckUnits:
    def test_si_planck_scales(self, si):
        planck = planck_units(si)
        assert planck.mass == pytest.approx(2.176434e-8, rel=1e-6)
        assert planck.length == pytest.approx(1.616255e-35, rel=1e-5)
        assert planck.time == pytest.approx(5.391247e-44, rel=1e-5)
        assert planck.temperature == pytest.approx(1.416784e32, rel=1e-5)

    def test_natural_planck_scales_are_one(self, natural):
        planck = planck_units(natural)
        assert planck.to_dict() == {"mass": 1.0, "length": 1.0, "time": 1.0, "temperature": 1.0}


class TestScaling:
    def test_natural_unit_mass_has_unit_scales(self, natural):
        scale = sn_dimensionless_scale(ParticleSpec(1.0, 1.0), natural)
        assert scale.to_dict() == {"length": 1.0, "time": 1.0, "energy": 1.0}

    def test_energy_time_product_is_hbar(self, si):
        scale = sn_dimensionless_scale(ParticleSpec(1e-17, 1e-7), si)
        assert scale.energy * scale.time == pytest.approx(si.hbar, rel=1e-12)

    def test_length_scales_as_inverse_mass_cubed(self, natural):
        a = sn_dimensionless_scale(ParticleSpec(1.0, 1.0), natural)
        b = sn_dimensionless_scale(ParticleSpec(2.0, 1.0), natural)
        assert a.length / b.length == pytest.approx(8.0, rel=1e-15)

    def test_round_trip_helpers(self, natural):
        scale = sn_dimensionless_scale(ParticleSpec(0.5, 1.0), natural)
        assert scale.from_dimensionless_length(scale.to_dimensionless_length(3.0)) == pytest.approx(3.0)
        assert scale.from_dimensionless_time(scale.to_dimensionless_time(2.0)) == pytest.approx(2.0)


class TestParticleSpec:
    @pytest.mark.parametrize("mass", [0.0, -1.0, math.nan, math.inf])
    def test_rejects_bad_mass(self, mass):
        with pytest.raises(NonPositiveMass):
            ParticleSpec(mass=mass, sigma0=1.0)

    @pytest.mark.parametrize("sigma0", [0.0, -1e-9, math.nan])
    def test_rejects_bad_width(self, sigma0):
        with pytest.raises(NonPositiveLength):
            ParticleSpec(mass=1.0, sigma0=sigma0)

    def test_validation_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            ParticleSpec(mass=-1.0, sigma0=1.0)

    def test_copies(self):
        spec = ParticleSpec(1.0, 2.0)
        assert spec.with_mass(3.0) == ParticleSpec(3.0, 2.0)
        assert spec.with_sigma0(5.0).to_dict() == {"mass": 1.0, "sigma0": 5.0}
        assert spec.mass == 1.0
