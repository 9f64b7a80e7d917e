import math

import numpy as np
import pytest

from ncab.fields import SolenoidField
from ncab.phase import ExperimentParams
from ncab.vector_calc import Vec3


@pytest.fixture
def params():
    return ExperimentParams()


@pytest.fixture
def solenoid():
    return SolenoidField(a=5.0, B0=10.0)


def random_exterior_points(n, a=5.0, seed=1234, rmax=60.0, zmax=10.0):
    """Points with cylindrical radius in (1.2 a, rmax)."""
    rng = np.random.default_rng(seed)
    rho = rng.uniform(1.2 * a, rmax, n)
    phi = rng.uniform(0.0, 2.0 * math.pi, n)
    z = rng.uniform(-zmax, zmax, n)
    return [Vec3(r * math.cos(f), r * math.sin(f), zz) for r, f, zz in zip(rho, phi, z)]


@pytest.fixture
def exterior_points():
    return random_exterior_points(100)
