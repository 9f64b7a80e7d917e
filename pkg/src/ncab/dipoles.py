"""NC terms of the dipole (Aharonov-Casher / He-McKellar-Wilkens) phases.

With ``G = m x E`` (AC) or ``G = d x B`` (HMW, Tkachuk), the NC part of the
dipole phase has a velocity term ``theta . [v x grad.(G)] . dr`` and a
quadratic term ``theta . [G x grad.(G)] . dr``, each with prefactor ``M/2``
(``M`` the dipole mass) and sign ``(+, -)`` for AC, ``(-, +)`` for HMW.

The operator written ``grad.(G)`` admits two readings, both computed:

divergence reading
    the scalar ``div G`` multiplies the magnitude of the remaining structure:
    ``(M/2) div G |theta| |v| |dr|`` and ``(M/2) div G |theta| |G| |dr|``.
component reading
    ``sum_i theta . (v x grad G_i) dr_i`` and
    ``sum_i theta . (G x grad G_i) dr_i``, i.e. the open-path NC integrand
    with ``G`` in place of ``A``.

The null / not-null verdict keys on the divergence reading only.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Optional, Tuple

from . import quadrature
from .constants import DEFAULT_CONSTANTS
from .errors import ValidationError
from .fields import FieldConfig, LinearField, SolenoidField, TkachukField, UniformField
from .nc_algebra import ThetaMatrix
from .paths import PathSpec, StraightSegment
from .vector_calc import EZ, Vec3, cross, divergence_fd, jacobian_fd

DipoleKind = Literal["AC", "HMW", "Tkachuk"]

NULL_TOL = 1e-10

_SIGNS = {"AC": (1.0, -1.0), "HMW": (-1.0, 1.0), "Tkachuk": (-1.0, 1.0)}


@dataclass(frozen=True)
class DipoleConfig:
    kind: DipoleKind
    dipole: Vec3
    field: FieldConfig
    path: PathSpec
    mass: float
    speed: float

    def __post_init__(self):
        if self.kind not in _SIGNS:
            raise ValidationError(f"kind must be one of {sorted(_SIGNS)}, got {self.kind!r}")
        want = "electric" if self.kind == "AC" else "magnetic"
        if self.field.kind != want:
            raise ValidationError(f"{self.kind} configuration needs a {want} field, got {self.field.kind}")
        if self.kind == "Tkachuk" and not isinstance(self.field, TkachukField):
            raise ValidationError("Tkachuk configuration needs a TkachukField")
        if not self.mass > 0:
            raise ValidationError("dipole mass must be positive")
        if not self.speed >= 0:
            raise ValidationError("speed must be non-negative")

    def contains(self, p: Vec3) -> bool:
        return self.field.contains(p)


def interaction_vector(cfg: DipoleConfig, p: Vec3) -> Vec3:
    """``m x E`` for AC, ``d x B`` otherwise."""
    return cross(cfg.dipole, cfg.field.field_at(p))


class _Interaction:
    """``G`` as a field object usable by the finite-difference operators."""

    def __init__(self, cfg: DipoleConfig):
        self.cfg = cfg

    def __call__(self, p: Vec3) -> Vec3:
        return interaction_vector(self.cfg, p)

    def contains(self, p: Vec3) -> bool:
        return self.cfg.contains(p)


def divergence_of_interaction(cfg: DipoleConfig, p: Vec3, h: Optional[float] = None) -> float:
    return divergence_fd(_Interaction(cfg), p, h)


def length_scale(p: Vec3) -> float:
    return max(p.norm(), 1.0)


@dataclass(frozen=True)
class DipoleTerms:
    divergence_velocity: float
    divergence_quadratic: float
    component_velocity: float
    component_quadratic: float
    velocity_scale: float
    quadratic_scale: float

    @property
    def divergence_reading(self) -> Tuple[float, float]:
        return self.divergence_velocity, self.divergence_quadratic

    @property
    def component_reading(self) -> Tuple[float, float]:
        return self.component_velocity, self.component_quadratic


def _integrate_path(path: PathSpec, f, abs_tol: float, rel_tol: float) -> float:
    bps = path.breakpoints
    return math.fsum(quadrature.integrate(f, lo, hi, rel_tol, abs_tol)[0] for lo, hi in zip(bps, bps[1:]))


def nc_dipole_terms(cfg: DipoleConfig, th: ThetaMatrix, rel_tol: float = 1e-10) -> DipoleTerms:
    """Both NC terms under both readings, integrated along ``cfg.path``.

    ``velocity_scale`` and ``quadratic_scale`` are the same integrals with
    ``|div G|`` replaced by ``|G| / L`` (``L`` the local length scale); they
    set the absolute quadrature tolerance and normalise the verdict.
    """
    G = _Interaction(cfg)
    s_vel, s_quad = _SIGNS[cfg.kind]
    half_m = 0.5 * cfg.mass
    tvec = th.vector
    tmag = th.theta
    path = cfg.path

    def kinematics(t):
        r = path.point_at(t)
        dr = path.tangent_at(t)
        speed_len = dr.norm()
        v = dr * (cfg.speed / speed_len)
        return r, dr, v, speed_len

    def vel_scale(t):
        r, _, _, dl = kinematics(t)
        return half_m * tmag * cfg.speed * G(r).norm() / length_scale(r) * dl

    def quad_scale(t):
        r, _, _, dl = kinematics(t)
        return half_m * tmag * G(r).norm() ** 2 / length_scale(r) * dl

    scale_v = _integrate_path(path, vel_scale, 0.0, 1e-6) if tmag else 0.0
    scale_q = _integrate_path(path, quad_scale, 0.0, 1e-6) if tmag else 0.0

    def div_vel(t):
        r, _, _, dl = kinematics(t)
        return s_vel * half_m * divergence_fd(G, r) * tmag * cfg.speed * dl

    def div_quad(t):
        r, _, _, dl = kinematics(t)
        return s_quad * half_m * divergence_fd(G, r) * tmag * G(r).norm() * dl

    def comp(t, quadratic):
        r, dr, v, _ = kinematics(t)
        J = jacobian_fd(G, r)
        lead = G(r) if quadratic else v
        total = 0.0
        for i in range(3):
            total += tvec.dot(cross(lead, Vec3.of(J[i]))) * dr[i]
        return (s_quad if quadratic else s_vel) * half_m * total

    def run(f, scale):
        if scale == 0.0:
            return 0.0
        return _integrate_path(path, f, rel_tol * scale, rel_tol)

    return DipoleTerms(
        divergence_velocity=run(div_vel, scale_v),
        divergence_quadratic=run(div_quad, scale_q),
        component_velocity=run(lambda t: comp(t, False), scale_v),
        component_quadratic=run(lambda t: comp(t, True), scale_q),
        velocity_scale=scale_v,
        quadratic_scale=scale_q,
    )


@dataclass(frozen=True)
class NullityReport:
    name: str
    kind: str
    verdict: str
    max_scaled_divergence: float
    scaled_divergence_integrals: Tuple[float, float]
    terms: DipoleTerms
    n_samples: int

    @property
    def is_null(self) -> bool:
        return self.verdict == "null"


def _scaled(value: float, scale: float) -> float:
    if scale == 0.0:
        return 0.0 if value == 0.0 else math.inf
    return abs(value) / scale


def nullity_report(cfg: DipoleConfig, th: ThetaMatrix, name: str = "", n_samples: int = 33,
                   tol: float = NULL_TOL) -> NullityReport:
    """Decide whether the NC terms of ``cfg`` vanish.

    Verdict ``"null"`` iff every sampled ``|div G| L / |G|`` and both
    divergence-reading integrals (normalised by their scales) are below
    ``tol``.
    """
    samples = []
    for k in range(n_samples):
        p = cfg.path.point_at(k / (n_samples - 1))
        g = interaction_vector(cfg, p).norm()
        div = divergence_of_interaction(cfg, p)
        samples.append(_scaled(div * length_scale(p), g))
    terms = nc_dipole_terms(cfg, th)
    integrals = (
        _scaled(terms.divergence_velocity, terms.velocity_scale),
        _scaled(terms.divergence_quadratic, terms.quadratic_scale),
    )
    worst = max(samples)
    null = worst < tol and all(v < tol for v in integrals)
    return NullityReport(
        name=name or cfg.kind,
        kind=cfg.kind,
        verdict="null" if null else "not null",
        max_scaled_divergence=worst,
        scaled_divergence_integrals=integrals,
        terms=terms,
        n_samples=n_samples,
    )


# Reference configurations. Magnitudes are representative only; the
# verdicts do not depend on them.

AMU = 1.66053906660e-27
BOHR_MAGNETON = 9.2740100783e-24


def sangster_config() -> DipoleConfig:
    """Opposite magnetic moments on one path through a capacitor field, m perpendicular to E."""
    return DipoleConfig(
        kind="AC",
        dipole=Vec3(0.0, 0.0, BOHR_MAGNETON),
        field=UniformField("electric", Vec3(0.0, 3e6, 0.0)),
        path=StraightSegment(Vec3(-0.25, 0.0, 0.0), Vec3(0.25, 0.0, 0.0)),
        mass=224.0 * AMU,
        speed=250.0,
    )


def lepoutre_config() -> DipoleConfig:
    """Electric dipoles perpendicular to a uniform magnetic field (HMW)."""
    return DipoleConfig(
        kind="HMW",
        dipole=Vec3(0.0, 1e-32, 0.0),
        field=UniformField("magnetic", Vec3(0.0, 0.0, 0.014)),
        path=StraightSegment(Vec3(-0.03, 0.0, 0.0), Vec3(0.03, 0.0, 0.0)),
        mass=7.0 * AMU,
        speed=1065.0,
    )


def tkachuk_config(a: float = 5.0, B0: float = 10.0, x0: float = 30.0, y0: float = 8.0) -> DipoleConfig:
    """Dipoles along the wire axis moving in the mid-plane z = 0."""
    return DipoleConfig(
        kind="Tkachuk",
        dipole=EZ * 1e-32,
        field=TkachukField(SolenoidField(a, B0)),
        path=StraightSegment(Vec3(-x0, y0, 0.0), Vec3(x0, y0, 0.0)),
        mass=7.0 * AMU,
        speed=1065.0,
    )


def engineered_non_null_config(k: float = 1e5) -> DipoleConfig:
    """``m = m x_hat``, ``E = (0, k z, 0)`` gives ``G = (0, 0, m k z)`` and
    ``div G = m k != 0``."""
    return DipoleConfig(
        kind="AC",
        dipole=Vec3(BOHR_MAGNETON, 0.0, 0.0),
        field=LinearField("electric", Vec3(0.0, 3e6, 0.0), ((0, 0, 0), (0, 0, k), (0, 0, 0))),
        path=StraightSegment(Vec3(-0.25, 0.0, 0.0), Vec3(0.25, 0.0, 0.0)),
        mass=224.0 * AMU,
        speed=250.0,
    )


def reference_configs():
    return [
        ("Sangster AC", sangster_config()),
        ("Lepoutre HMW", lepoutre_config()),
        ("Tkachuk", tkachuk_config()),
    ]


def default_theta() -> ThetaMatrix:
    return ThetaMatrix((DEFAULT_CONSTANTS.hbar_c / 130.0) ** 2)
