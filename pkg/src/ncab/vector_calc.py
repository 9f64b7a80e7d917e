"""Three-vectors and finite-difference differential operators.

The finite-difference operators are deliberately independent of every
analytic derivative in :mod:`ncab.fields`; tests use them as the oracle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Union

import numpy as np

from .errors import DomainError


@dataclass(frozen=True, slots=True)
class Vec3:
    """Cartesian three-vector. The physical unit is implied by context."""

    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        for c in (self.x, self.y, self.z):
            if not math.isfinite(c):
                raise DomainError(f"Vec3 components must be finite, got {(self.x, self.y, self.z)}")

    @classmethod
    def of(cls, values: Iterable[float]) -> "Vec3":
        x, y, z = (float(v) for v in values)
        return cls(x, y, z)

    def __iter__(self):
        yield self.x
        yield self.y
        yield self.z

    def __getitem__(self, k: int) -> float:
        return (self.x, self.y, self.z)[k]

    def __add__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Vec3":
        return Vec3(-self.x, -self.y, -self.z)

    def __mul__(self, s: float) -> "Vec3":
        return Vec3(self.x * s, self.y * s, self.z * s)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> "Vec3":
        return Vec3(self.x / s, self.y / s, self.z / s)

    def dot(self, other: "Vec3") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: "Vec3") -> "Vec3":
        return cross(self, other)

    def norm(self) -> float:
        return math.sqrt(self.dot(self))

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    def __array__(self, dtype=None, copy=None):
        return self.as_array() if dtype is None else self.as_array().astype(dtype)


ZERO = Vec3()
EX, EY, EZ = Vec3(1.0, 0.0, 0.0), Vec3(0.0, 1.0, 0.0), Vec3(0.0, 0.0, 1.0)
_BASIS = (EX, EY, EZ)


def cross(u: Vec3, v: Vec3) -> Vec3:
    """Right-handed cross product ``u x v``."""
    return Vec3(
        u.y * v.z - u.z * v.y,
        u.z * v.x - u.x * v.z,
        u.x * v.y - u.y * v.x,
    )


Value = Union[float, Vec3]


@dataclass(frozen=True)
class ScalarField:
    """A scalar function of position with a declared domain.

    ``grad`` is an optional analytic gradient. Operations that need
    derivatives use it when present and fall back to :func:`grad_fd`.
    """

    fn: Callable[[Vec3], float]
    domain: Optional[Callable[[Vec3], bool]] = None
    grad: Optional[Callable[[Vec3], Vec3]] = None

    def __call__(self, p: Vec3) -> float:
        return self.fn(p)

    def contains(self, p: Vec3) -> bool:
        return True if self.domain is None else bool(self.domain(p))

    def gradient(self, p: Vec3, h: Optional[float] = None) -> Vec3:
        if self.grad is not None:
            return self.grad(p)
        return grad_fd(self, p, h)


@dataclass(frozen=True)
class VectorField:
    """A vector function of position with a declared domain."""

    fn: Callable[[Vec3], Vec3]
    domain: Optional[Callable[[Vec3], bool]] = None

    def __call__(self, p: Vec3) -> Vec3:
        return self.fn(p)

    def contains(self, p: Vec3) -> bool:
        return True if self.domain is None else bool(self.domain(p))


def coordinate(k: int) -> ScalarField:
    """The coordinate function ``p -> p[k]`` with its exact gradient."""
    e = _BASIS[k]
    return ScalarField(lambda p: p[k], grad=lambda p: e)


def default_step(p: Vec3) -> float:
    return 1e-3 * max(1.0, p.norm())


def _contains(f, p: Vec3) -> bool:
    contains = getattr(f, "contains", None)
    return True if contains is None else contains(p)


def _partial(f, p: Vec3, k: int, h: float) -> np.ndarray:
    """Richardson-extrapolated central difference along axis ``k``."""
    e = _BASIS[k]
    for s in (h, -h):
        if not _contains(f, p + e * s):
            raise DomainError(f"finite-difference stencil leaves the field domain at {p} (h={h:g})")

    def central(step):
        fp = np.asarray(f(p + e * step), dtype=float)
        fm = np.asarray(f(p - e * step), dtype=float)
        return (fp - fm) / (2.0 * step)

    d_h = central(h)
    d_h2 = central(0.5 * h)
    return (4.0 * d_h2 - d_h) / 3.0


def _check_point(f, p: Vec3, h: Optional[float]) -> float:
    if not _contains(f, p):
        raise DomainError(f"point {p} is outside the field domain")
    if h is None:
        h = default_step(p)
    if not h > 0:
        raise DomainError(f"step must be positive, got {h!r}")
    return h


def grad_fd(f, p: Vec3, h: Optional[float] = None) -> Vec3:
    """Gradient of a scalar field by fourth-order finite differences."""
    h = _check_point(f, p, h)
    return Vec3(*(float(_partial(f, p, k, h)) for k in range(3)))


def jacobian_fd(F, p: Vec3, h: Optional[float] = None) -> np.ndarray:
    """Matrix ``J[i, j] = dF_i / dx_j`` by fourth-order finite differences."""
    h = _check_point(F, p, h)
    cols = [_partial(F, p, k, h) for k in range(3)]
    return np.column_stack(cols)


def divergence_fd(F, p: Vec3, h: Optional[float] = None) -> float:
    J = jacobian_fd(F, p, h)
    return float(J[0, 0] + J[1, 1] + J[2, 2])


def curl_fd(F, p: Vec3, h: Optional[float] = None) -> Vec3:
    J = jacobian_fd(F, p, h)
    return Vec3(J[2, 1] - J[1, 2], J[0, 2] - J[2, 0], J[1, 0] - J[0, 1])
