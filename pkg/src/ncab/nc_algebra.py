"""First-order Moyal star product, Bopp shift and the NC kinetic vector.

Everything here is truncated at first order in theta. Complex values are
plain Python ``complex``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .constants import DEFAULT_CONSTANTS
from .errors import DomainError
from .fields import SolenoidField
from .vector_calc import ScalarField, Vec3, grad_fd


@dataclass(frozen=True)
class ThetaMatrix:
    """Antisymmetric noncommutativity matrix with a single independent entry.

    ``theta_ij = +theta`` and ``theta_ji = -theta`` for ``plane = (i, j)``.
    The default plane (0, 1) corresponds to the vector form ``theta * z_hat``.
    """

    theta: float
    plane: Tuple[int, int] = (0, 1)

    def __post_init__(self):
        if not (math.isfinite(self.theta) and self.theta >= 0):
            raise DomainError(f"theta must be finite and non-negative, got {self.theta!r}")
        i, j = self.plane
        if i == j or not {i, j} <= {0, 1, 2}:
            raise DomainError(f"plane must be two distinct axes in 0..2, got {self.plane!r}")

    def matrix(self) -> np.ndarray:
        m = np.zeros((3, 3))
        i, j = self.plane
        m[i, j] = self.theta
        m[j, i] = -self.theta
        return m

    def __getitem__(self, ij: Tuple[int, int]) -> float:
        i, j = ij
        if (i, j) == self.plane:
            return self.theta
        if (j, i) == self.plane:
            return -self.theta
        return 0.0

    @property
    def vector(self) -> Vec3:
        """Dual vector with ``theta_ij = eps_ijk theta_k``."""
        m = self.matrix()
        return Vec3(m[1, 2], m[2, 0], m[0, 1])

    def scaled(self, factor: float) -> "ThetaMatrix":
        return ThetaMatrix(self.theta * factor, self.plane)


def _gradient(f, p: Vec3) -> Vec3:
    if isinstance(f, ScalarField):
        if not f.contains(p):
            raise DomainError(f"point {p} is outside the field domain")
        return f.gradient(p)
    return grad_fd(f, p)


def _poisson_bracket(grad_f: Vec3, grad_g: Vec3, th: ThetaMatrix) -> float:
    i, j = th.plane
    return th.theta * (grad_f[i] * grad_g[j] - grad_f[j] * grad_g[i])


def star_product_first_order(f, g, p: Vec3, th: ThetaMatrix) -> complex:
    """``(f * g)(p) = f g + (i/2) theta_ij d_i f d_j g + O(theta^2)``.

    ``f`` and ``g`` are :class:`ScalarField` objects (analytic gradient used
    when present) or plain callables (finite differences).
    """
    gf, gg = _gradient(f, p), _gradient(g, p)
    return complex(f(p) * g(p), 0.5 * _poisson_bracket(gf, gg, th))


def star_commutator(f, g, p: Vec3, th: ThetaMatrix) -> complex:
    """``f * g - g * f``; equals ``i theta_ij`` for coordinate functions."""
    return star_product_first_order(f, g, p, th) - star_product_first_order(g, f, p, th)


def bopp_shift(x: Vec3, p_mom: Vec3, th: ThetaMatrix, hbar: float = DEFAULT_CONSTANTS.hbar) -> Vec3:
    """NC position ``x_i - theta_ij p_j / (2 hbar)``."""
    shift = th.matrix() @ p_mom.as_array() / (2.0 * hbar)
    i, j = th.plane
    out = list(x)
    out[i] -= shift[i]
    out[j] -= shift[j]
    return Vec3(*out)


def nc_coupling_correction(field: SolenoidField, p: Vec3, p_mom: Vec3, q: float, th: ThetaMatrix) -> Vec3:
    """The NC term ``-(q/2) theta_lj p_l d_j A_i`` on its own."""
    J = field.potential_jacobian(p)
    return Vec3.of(-0.5 * q * (J @ (th.matrix().T @ p_mom.as_array())))


def nc_kinetic_vector(field: SolenoidField, p: Vec3, p_mom: Vec3, q: float, th: ThetaMatrix) -> Vec3:
    """Components ``p_i - q A_i - (q/2) theta_lj p_l d_j A_i``.

    ``p_mom`` is used as given; whether it is canonical or kinetic only
    matters at second order in theta.
    """
    minimal = p_mom - field.vector_potential(p) * q
    return minimal + nc_coupling_correction(field, p, p_mom, q, th)
