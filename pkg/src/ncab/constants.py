"""Physical constants and length / inverse-energy conversions.

All internal computations are SI. Energy scales (GeV, TeV) only appear in
the conversion helpers below.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError

# CODATA 2018
HBAR = 1.054571817e-34          # J s
E_CHARGE = 1.602176634e-19      # C
C_LIGHT = 299792458.0           # m / s
M_ELECTRON = 9.1093837015e-31   # kg

# Flux quantum as quoted alongside the closed-form phase (close to h/2e).
PHI0_QUOTED = 2.06e-15          # T m^2

GEV_IN_JOULE = E_CHARGE * 1e9


@dataclass(frozen=True)
class PhysicalConstants:
    """Immutable constant table.

    ``lambda_e`` (h / m_e c) and ``hbar_c`` (GeV m) are derived from the
    other fields, so overriding e.g. ``m_e`` keeps them consistent.
    """

    hbar: float = HBAR
    e_charge: float = E_CHARGE
    c: float = C_LIGHT
    m_e: float = M_ELECTRON
    phi0: float = PHI0_QUOTED
    lambda_e: float = field(init=False)
    hbar_c: float = field(init=False)

    def __post_init__(self):
        for name in ("hbar", "e_charge", "c", "m_e", "phi0"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise DomainError(f"{name} must be positive and finite, got {value!r}")
        h = 2.0 * math.pi * self.hbar
        object.__setattr__(self, "lambda_e", h / (self.m_e * self.c))
        object.__setattr__(self, "hbar_c", self.hbar * self.c / (self.e_charge * 1e9))


DEFAULT_CONSTANTS = PhysicalConstants()


def length_to_inverse_energy(length_m: float, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Convert a length in metres to GeV^-1 (natural units, hbar = c = 1)."""
    if not length_m >= 0:
        raise DomainError(f"length must be non-negative, got {length_m!r}")
    return length_m / constants.hbar_c


def inverse_energy_to_length(inv_gev: float, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    if not inv_gev >= 0:
        raise DomainError(f"inverse energy must be non-negative, got {inv_gev!r}")
    return inv_gev * constants.hbar_c


def sqrt_theta_to_energy_scale(sqrt_theta_m: float, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Energy scale in TeV associated with a noncommutativity length sqrt(theta)."""
    if not sqrt_theta_m > 0:
        raise DomainError(f"sqrt(theta) must be positive, got {sqrt_theta_m!r}")
    return constants.hbar_c / sqrt_theta_m / 1e3


def energy_scale_to_sqrt_theta(energy_tev: float, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Inverse of :func:`sqrt_theta_to_energy_scale`; returns metres."""
    if not energy_tev > 0:
        raise DomainError(f"energy scale must be positive, got {energy_tev!r}")
    return constants.hbar_c / (energy_tev * 1e3)
