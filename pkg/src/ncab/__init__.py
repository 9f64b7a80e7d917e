"""Noncommutative corrections to Aharonov-Bohm type interferometric phases."""

from .constants import DEFAULT_CONSTANTS, PhysicalConstants
from .errors import ConvergenceError, DomainError, InvariantError, NCABError, RegionError, ValidationError
from .vector_calc import Vec3, cross

__all__ = [
    "DEFAULT_CONSTANTS",
    "PhysicalConstants",
    "Vec3",
    "cross",
    "NCABError",
    "DomainError",
    "RegionError",
    "ValidationError",
    "ConvergenceError",
    "InvariantError",
]
__version__ = "0.1.0"
