"""Parametrised interferometric paths.

Every path is parametrised by ``t`` in ``[0, 1]``. ``tangent_at`` is the
derivative ``dr/dt`` (not a unit vector), so ``F(r(t)) . r'(t) dt`` is the
line-integral measure. ``breakpoints`` lists the parameter values where the
tangent may be discontinuous; quadrature splits there.
"""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

from .errors import DomainError
from .vector_calc import Vec3


def _check_t(t: float) -> float:
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"path parameter must lie in [0, 1], got {t!r}")
    return t


@dataclass(frozen=True)
class StraightSegment:
    start: Vec3
    end: Vec3

    def __post_init__(self):
        if self.start == self.end:
            raise DomainError("segment endpoints must differ")

    @property
    def length(self) -> float:
        return (self.end - self.start).norm()

    @property
    def breakpoints(self) -> Tuple[float, ...]:
        return (0.0, 1.0)

    def point_at(self, t: float) -> Vec3:
        _check_t(t)
        if t == 1.0:
            return self.end
        return self.start + (self.end - self.start) * t

    def tangent_at(self, t: float) -> Vec3:
        _check_t(t)
        return self.end - self.start

    def reversed(self) -> "StraightSegment":
        return StraightSegment(self.end, self.start)


@dataclass(frozen=True)
class CircularArc:
    """Arc in the plane ``z = center.z``, counter-clockwise when
    ``angle_end > angle_start``."""

    center: Vec3
    radius: float
    angle_start: float = 0.0
    angle_end: float = 2.0 * math.pi

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise DomainError(f"radius must be positive, got {self.radius!r}")
        if self.angle_start == self.angle_end:
            raise DomainError("arc must span a non-zero angle")

    @property
    def sweep(self) -> float:
        return self.angle_end - self.angle_start

    @property
    def length(self) -> float:
        return abs(self.sweep) * self.radius

    @property
    def breakpoints(self) -> Tuple[float, ...]:
        return (0.0, 1.0)

    def point_at(self, t: float) -> Vec3:
        _check_t(t)
        phi = self.angle_start + self.sweep * t
        c = self.center
        return Vec3(c.x + self.radius * math.cos(phi), c.y + self.radius * math.sin(phi), c.z)

    def tangent_at(self, t: float) -> Vec3:
        _check_t(t)
        phi = self.angle_start + self.sweep * t
        s = self.sweep * self.radius
        return Vec3(-s * math.sin(phi), s * math.cos(phi), 0.0)

    def reversed(self) -> "CircularArc":
        return CircularArc(self.center, self.radius, self.angle_end, self.angle_start)


@dataclass(frozen=True)
class Polyline:
    """Piecewise-linear path, parametrised proportionally to arc length.

    At an interior vertex the right-hand (outgoing) tangent is returned.
    """

    vertices: Tuple[Vec3, ...]

    def __init__(self, vertices: Sequence[Vec3]):
        verts = tuple(vertices)
        if len(verts) < 2:
            raise DomainError("a polyline needs at least two vertices")
        for u, v in zip(verts, verts[1:]):
            if u == v:
                raise DomainError(f"consecutive polyline vertices coincide at {u}")
        object.__setattr__(self, "vertices", verts)

    @property
    def _lengths(self) -> Tuple[float, ...]:
        return tuple((v - u).norm() for u, v in zip(self.vertices, self.vertices[1:]))

    @property
    def length(self) -> float:
        return math.fsum(self._lengths)

    @property
    def breakpoints(self) -> Tuple[float, ...]:
        total = self.length
        acc, out = 0.0, [0.0]
        for seg in self._lengths[:-1]:
            acc += seg
            out.append(acc / total)
        out.append(1.0)
        return tuple(out)

    def _locate(self, t: float):
        bps = self.breakpoints
        k = min(bisect.bisect_right(bps, t) - 1, len(self.vertices) - 2)
        return k, bps[k], bps[k + 1]

    def point_at(self, t: float) -> Vec3:
        _check_t(t)
        if t == 1.0:
            return self.vertices[-1]
        k, t0, t1 = self._locate(t)
        u, v = self.vertices[k], self.vertices[k + 1]
        return u + (v - u) * ((t - t0) / (t1 - t0))

    def tangent_at(self, t: float) -> Vec3:
        _check_t(t)
        k, t0, t1 = self._locate(t)
        u, v = self.vertices[k], self.vertices[k + 1]
        return (v - u) / (t1 - t0)

    def reversed(self) -> "Polyline":
        return Polyline(self.vertices[::-1])


PathSpec = Union[StraightSegment, CircularArc, Polyline]


def point_at(path: PathSpec, t: float) -> Vec3:
    return path.point_at(t)


def tangent_at(path: PathSpec, t: float) -> Vec3:
    return path.tangent_at(t)


def open_segment(x0: float, y0: float) -> StraightSegment:
    """The open path ``y = y0`` from ``x = -x0`` to ``x = +x0``."""
    return StraightSegment(Vec3(-x0, y0, 0.0), Vec3(x0, y0, 0.0))
