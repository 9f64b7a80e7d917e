"""Closed-form electromagnetic configurations with analytic derivatives.

Every field object exposes

* ``kind``: ``"electric"`` or ``"magnetic"``
* ``contains(p)``: whether ``p`` is in the region where the field is defined
* ``field_at(p)``: E (V/m) or B (T) at ``p``

Magnetic configurations built from a potential also expose
``vector_potential(p)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, Union

import numpy as np

from .errors import DomainError, RegionError
from .vector_calc import EZ, ZERO, ScalarField, Vec3, VectorField, cross

FieldKind = Literal["electric", "magnetic"]


@dataclass(frozen=True)
class SolenoidField:
    """Infinite solenoid of radius ``a`` along the z axis, exterior region only.

    The exterior potential in Coulomb gauge is
    ``A = (B0 a^2 / 2 rho^2) (-y, x, 0)``; the magnetic field vanishes there.
    """

    a: float
    B0: float
    kind: FieldKind = field(default="magnetic", init=False)

    def __post_init__(self):
        if not (math.isfinite(self.a) and self.a > 0):
            raise DomainError(f"radius must be positive, got {self.a!r}")
        if not math.isfinite(self.B0):
            raise DomainError(f"B0 must be finite, got {self.B0!r}")

    def flux(self) -> float:
        return math.pi * self.a ** 2 * self.B0

    @property
    def strength(self) -> float:
        """Potential coefficient ``B0 a^2 / 2`` (T m^2)."""
        return 0.5 * self.B0 * self.a ** 2

    def contains(self, p: Vec3) -> bool:
        return math.hypot(p.x, p.y) > self.a

    def _rho2(self, p: Vec3) -> float:
        rho2 = p.x * p.x + p.y * p.y
        if not rho2 > self.a * self.a:
            raise RegionError(
                f"point {p} is inside the solenoid (rho={math.sqrt(rho2):g} <= a={self.a:g}); "
                "only the exterior potential is modelled"
            )
        return rho2

    def vector_potential(self, p: Vec3) -> Vec3:
        k = self.strength / self._rho2(p)
        return Vec3(-k * p.y, k * p.x, 0.0)

    def potential_jacobian(self, p: Vec3) -> np.ndarray:
        """Analytic ``J[i, j] = dA_i / dx_j`` in the exterior."""
        rho2 = self._rho2(p)
        k = self.strength / (rho2 * rho2)
        x, y = p.x, p.y
        return np.array(
            [
                [2.0 * k * x * y, -k * (x * x - y * y), 0.0],
                [-k * (x * x - y * y), -2.0 * k * x * y, 0.0],
                [0.0, 0.0, 0.0],
            ]
        )

    def grad_Ax(self, p: Vec3) -> Vec3:
        return Vec3.of(self.potential_jacobian(p)[0])

    def curl_potential(self, p: Vec3) -> Vec3:
        self._rho2(p)
        return ZERO

    def field_at(self, p: Vec3) -> Vec3:
        return self.curl_potential(p)

    def potential_field(self) -> VectorField:
        return VectorField(self.vector_potential, domain=self.contains)

    def potential_component(self, i: int) -> ScalarField:
        return ScalarField(
            lambda p: self.vector_potential(p)[i],
            domain=self.contains,
            grad=lambda p: Vec3.of(self.potential_jacobian(p)[i]),
        )


@dataclass(frozen=True)
class UniformField:
    """Homogeneous E or B field, e.g. between capacitor plates."""

    kind: FieldKind
    value: Vec3

    def __post_init__(self):
        if self.kind not in ("electric", "magnetic"):
            raise DomainError(f"kind must be 'electric' or 'magnetic', got {self.kind!r}")

    def contains(self, p: Vec3) -> bool:
        return True

    def field_at(self, p: Vec3) -> Vec3:
        return self.value


@dataclass(frozen=True)
class LinearField:
    """Field that varies affinely in space, ``F(p) = value + gradient @ p``.

    Not a source-free Maxwell field in general; it exists to build
    configurations with a prescribed non-zero divergence.
    """

    kind: FieldKind
    value: Vec3
    gradient: tuple  # 3x3, row i holds dF_i/dx_j

    def __post_init__(self):
        if self.kind not in ("electric", "magnetic"):
            raise DomainError(f"kind must be 'electric' or 'magnetic', got {self.kind!r}")
        g = np.asarray(self.gradient, dtype=float)
        if g.shape != (3, 3) or not np.all(np.isfinite(g)):
            raise DomainError("gradient must be a finite 3x3 matrix")
        object.__setattr__(self, "gradient", tuple(map(tuple, g.tolist())))

    def contains(self, p: Vec3) -> bool:
        return True

    def field_at(self, p: Vec3) -> Vec3:
        return self.value + Vec3.of(np.asarray(self.gradient) @ p.as_array())


@dataclass(frozen=True)
class TkachukField:
    """Two oppositely polarised wires, potential ``A_T = z A_AB``.

    ``inner`` supplies the ordinary AB potential. The magnetic field is
    ``B = z (curl A_AB) - A_AB x z_hat``.
    """

    inner: SolenoidField
    kind: FieldKind = field(default="magnetic", init=False)

    def contains(self, p: Vec3) -> bool:
        return self.inner.contains(p)

    def vector_potential(self, p: Vec3) -> Vec3:
        return self.inner.vector_potential(p) * p.z

    def field_at(self, p: Vec3) -> Vec3:
        a_ab = self.inner.vector_potential(p)
        return self.inner.curl_potential(p) * p.z - cross(a_ab, EZ)

    def potential_field(self) -> VectorField:
        return VectorField(self.vector_potential, domain=self.contains)


FieldConfig = Union[SolenoidField, UniformField, LinearField, TkachukField]


def solenoid_vector_potential(f: SolenoidField, p: Vec3) -> Vec3:
    return f.vector_potential(p)


def solenoid_grad_Ax(f: SolenoidField, p: Vec3) -> Vec3:
    return f.grad_Ax(p)


def tkachuk_B(f: TkachukField, p: Vec3) -> Vec3:
    return f.field_at(p)
