"""Shared fixtures."""

import numpy as np
import pytest

from gravicol.units import UnitKind, make_units


@pytest.fixture
def natural():
    """ħ = G = k_B = c = 1."""
    return make_units(UnitKind.NATURAL_TEST)


@pytest.fixture
def si():
    return make_units(UnitKind.SI)


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)


@pytest.fixture
def random_specs(rng):
    """Twenty (m, σ₀) pairs drawn from [0.1, 10]²."""
    from gravicol.particle import ParticleSpec

    pairs = rng.uniform(0.1, 10.0, size=(20, 2))
    return [ParticleSpec(mass=float(m), sigma0=float(s)) for m, s in pairs]
