"""Open-path (S-effect) phases beside an infinite solenoid.

Three routes are provided:

* :func:`s_phase_commutative` - ``(2q/hbar) int_b A . dl`` by quadrature;
* :func:`s_phase_nc_numeric` - the NC correction
  ``-(q m / 4 hbar^2) theta . int [(v x grad A_i) - (q/m)(A x grad A_i)] dx_i``
  by quadrature along any path;
* :func:`s_phase_nc_closed` - the closed form
  ``(theta/8)(Phi/Phi0)^2 {atan(x/y)/y^2 + (x/y)/(x^2+y^2) + kinetic}``
  on the straight segment ``y = y0, -x0 <= x <= x0``.

:func:`verify_closed_vs_quadrature` compares the last two term by term.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional, Tuple

from . import quadrature
from .constants import DEFAULT_CONSTANTS, PhysicalConstants
from .errors import DomainError, ValidationError
from .fields import SolenoidField
from .nc_algebra import ThetaMatrix
from .paths import PathSpec, StraightSegment, open_segment
from .vector_calc import Vec3, cross

DEFAULT_REL_TOL = 1e-10

# theta at the quoted bound sqrt(theta) = (0.13 TeV)^-1
DEFAULT_THETA = (DEFAULT_CONSTANTS.hbar_c / 130.0) ** 2


def line_integral(F, path: PathSpec, rel_tol: float = DEFAULT_REL_TOL, abs_tol: float = 0.0) -> float:
    """``int F . dl`` along ``path``, split at the path's breakpoints."""
    def integrand(t):
        return F(path.point_at(t)).dot(path.tangent_at(t))

    bps = path.breakpoints
    pieces = [quadrature.integrate(integrand, lo, hi, rel_tol, abs_tol) for lo, hi in zip(bps, bps[1:])]
    return math.fsum(v for v, _ in pieces)


@dataclass(frozen=True)
class Particle:
    mass: float
    charge: float
    speed: float

    def __post_init__(self):
        if not self.mass > 0:
            raise ValidationError(f"mass must be positive, got {self.mass!r}")
        if not math.isfinite(self.charge):
            raise ValidationError(f"charge must be finite, got {self.charge!r}")
        if not 0 <= self.speed < DEFAULT_CONSTANTS.c:
            raise ValidationError(f"speed must lie in [0, c), got {self.speed!r}")

    @classmethod
    def electron(cls, speed: float = 2e8, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> "Particle":
        """Electron with the charge magnitude ``e`` used throughout the phase formulas."""
        return cls(constants.m_e, constants.e_charge, speed)


@dataclass(frozen=True)
class ExperimentParams:
    """S-effect set-up. Defaults are the solenoid / path / beam values of the
    proposed experiment (a = 5 m, x0 = 30 m, y0 = 8 m, B0 = 10 T, v = 2e8 m/s,
    epsilon = 1e-4 rad)."""

    a: float = 5.0
    x0: float = 30.0
    y0: float = 8.0
    B0: float = 10.0
    v: float = 2e8
    epsilon: float = 1e-4
    theta: float = DEFAULT_THETA

    def __post_init__(self):
        for name in ("a", "x0", "y0", "B0", "v", "epsilon", "theta"):
            if not math.isfinite(getattr(self, name)):
                raise ValidationError(f"{name} must be finite")
        if self.a <= 0:
            raise ValidationError("radius must be positive")
        if self.B0 <= 0:
            raise ValidationError("B0 must be positive")
        if self.x0 <= 0:
            raise ValidationError("path half-length x0 must be positive")
        if abs(self.y0) <= self.a:
            raise ValidationError("path must stay outside the solenoid (|y0| > a)")
        if self.epsilon <= 0:
            raise ValidationError("epsilon must be positive")
        if self.theta < 0:
            raise ValidationError("theta must be non-negative")
        if not 0 <= self.v < DEFAULT_CONSTANTS.c:
            raise ValidationError("speed must lie in [0, c)")

    def solenoid(self) -> SolenoidField:
        return SolenoidField(self.a, self.B0)

    def segment(self) -> StraightSegment:
        return open_segment(self.x0, self.y0)

    def theta_matrix(self) -> ThetaMatrix:
        return ThetaMatrix(self.theta)

    def with_(self, **changes) -> "ExperimentParams":
        return replace(self, **changes)


@dataclass(frozen=True)
class BracketTerms:
    """The three bracket terms (m^-2) of the closed-form NC phase."""

    geom1: float
    geom2: float
    kinetic: float

    @property
    def total(self) -> float:
        return self.geom1 + self.geom2 + self.kinetic


@dataclass(frozen=True)
class PhaseBreakdown:
    commutative: float
    nc_numeric: float
    nc_closed: float
    bracket_terms: BracketTerms
    prefactor: float          # (1/8) theta (Phi/Phi0)^2
    kinetic_coefficient: float  # kinetic bracket term per unit speed

    def __post_init__(self):
        vals = (self.commutative, self.nc_numeric, self.nc_closed, self.prefactor,
                self.bracket_terms.geom1, self.bracket_terms.geom2, self.bracket_terms.kinetic)
        if not all(math.isfinite(v) for v in vals):
            raise ValidationError("phase breakdown contains non-finite values")


def s_phase_commutative(field: SolenoidField, seg: PathSpec, q: float,
                        rel_tol: float = DEFAULT_REL_TOL,
                        constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Phase difference ``(2q/hbar) int A . dl`` between ``+q`` and ``-q`` beams."""
    return 2.0 * q / constants.hbar * line_integral(field.vector_potential, seg, rel_tol)


def _unit(v: Vec3) -> Vec3:
    n = v.norm()
    if n == 0:
        raise DomainError("path tangent vanishes")
    return v / n


def nc_path_integrals(field: SolenoidField, path: PathSpec, particle: Particle, th: ThetaMatrix,
                      rel_tol: float = DEFAULT_REL_TOL) -> Tuple[float, float]:
    """``(kinetic, geometric)`` pieces of the NC integrand.

    kinetic   = sum_i int theta . (v x grad A_i) dx_i
    geometric = sum_i int theta . (A x grad A_i) dx_i

    with ``i`` over the NC-plane components and ``v`` along the local tangent.
    """
    tvec = th.vector
    plane = th.plane

    def pieces(t):
        r = path.point_at(t)
        dr = path.tangent_at(t)
        v = _unit(dr) * particle.speed
        A = field.vector_potential(r)
        J = field.potential_jacobian(r)
        kin = geo = 0.0
        for i in plane:
            grad_ai = Vec3.of(J[i])
            kin += tvec.dot(cross(v, grad_ai)) * dr[i]
            geo += tvec.dot(cross(A, grad_ai)) * dr[i]
        return kin, geo

    bps = path.breakpoints
    out = []
    for which in (0, 1):
        vals = [quadrature.integrate(lambda t: pieces(t)[which], lo, hi, rel_tol)[0]
                for lo, hi in zip(bps, bps[1:])]
        out.append(math.fsum(vals))
    return out[0], out[1]


def nc_phase_prefactor(particle: Particle, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """``-q m / (4 hbar^2)``."""
    return -particle.charge * particle.mass / (4.0 * constants.hbar ** 2)


def s_phase_nc_numeric(field: SolenoidField, seg: PathSpec, particle: Particle, th: ThetaMatrix,
                       rel_tol: float = DEFAULT_REL_TOL,
                       constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """NC correction to the open-path phase by direct quadrature."""
    if th.theta == 0:
        return 0.0
    kin, geo = nc_path_integrals(field, seg, particle, th, rel_tol)
    ratio = particle.charge / particle.mass
    return nc_phase_prefactor(particle, constants) * (kin - ratio * geo)


def kinetic_coefficient(params: ExperimentParams, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """``(8 pi / lambda_e)(Phi0 / Phi)(1 / c) x / (x^2 + y^2)``, in m^-2 per (m/s)."""
    x, y = params.x0, params.y0
    flux = math.pi * params.a ** 2 * params.B0
    return (8.0 * math.pi / constants.lambda_e) * (constants.phi0 / flux) / constants.c * x / (x * x + y * y)


def bracket_terms(params: ExperimentParams, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> BracketTerms:
    x, y = params.x0, params.y0
    return BracketTerms(
        geom1=math.atan(x / y) / (y * y),
        geom2=(x / y) / (x * x + y * y),
        kinetic=kinetic_coefficient(params, constants) * params.v,
    )


def closed_form_prefactor(params: ExperimentParams, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    flux = math.pi * params.a ** 2 * params.B0
    return params.theta / 8.0 * (flux / constants.phi0) ** 2


def s_phase_nc_closed(params: ExperimentParams, rel_tol: float = DEFAULT_REL_TOL,
                      constants: PhysicalConstants = DEFAULT_CONSTANTS,
                      particle: Optional[Particle] = None) -> PhaseBreakdown:
    """Closed-form NC phase plus the commutative and quadrature phases for
    the same set-up, bundled into one :class:`PhaseBreakdown`.

    The closed form is written for electrons (Compton wavelength); ``particle``
    only affects the two quadrature routes and defaults to an electron at
    ``params.v``.
    """
    terms = bracket_terms(params, constants)
    pref = closed_form_prefactor(params, constants)
    field = params.solenoid()
    seg = params.segment()
    particle = particle or Particle.electron(params.v, constants)
    return PhaseBreakdown(
        commutative=s_phase_commutative(field, seg, particle.charge, rel_tol, constants),
        nc_numeric=s_phase_nc_numeric(field, seg, particle, params.theta_matrix(), rel_tol, constants),
        nc_closed=pref * terms.total,
        bracket_terms=terms,
        prefactor=pref,
        kinetic_coefficient=kinetic_coefficient(params, constants),
    )


@dataclass(frozen=True)
class RatioRow:
    name: str
    numeric: float
    closed: float
    ratio: Optional[float]
    note: str = ""


@dataclass(frozen=True)
class VerificationReport:
    rows: Tuple[RatioRow, ...]

    def row(self, name: str) -> RatioRow:
        for r in self.rows:
            if r.name == name:
                return r
        raise KeyError(name)


def _ratio(num: float, den: float) -> Optional[float]:
    return None if den == 0 else num / den


def verify_closed_vs_quadrature(params: ExperimentParams, rel_tol: float = DEFAULT_REL_TOL,
                                constants: PhysicalConstants = DEFAULT_CONSTANTS,
                                particle: Optional[Particle] = None) -> VerificationReport:
    """Term-by-term comparison of the quadrature route against the closed form.

    Rows:

    ``geometric_bracket``
        geometric integral divided by ``-theta k^2`` (``k = B0 a^2 / 2``),
        against ``geom1 + geom2``. Expected ratio 1.
    ``kinetic_bracket``
        kinetic integral divided by ``-theta k v``, against the geometric
        factor ``x0 / (x0^2 + y0^2)`` of the kinetic term. Expected ratio -2
        (symmetric limits double the antiderivative).
    ``geometric_phase`` / ``kinetic_phase`` / ``total_phase``
        physical phases from both routes. The residual constant ratios are
        reported as computed.

    Ratios are ``None`` whenever the closed-form side is zero (e.g. theta = 0).
    """
    field = params.solenoid()
    seg = params.segment()
    particle = particle or Particle.electron(params.v, constants)
    th = params.theta_matrix()
    terms = bracket_terms(params, constants)
    pref = closed_form_prefactor(params, constants)
    k = field.strength

    if th.theta == 0:
        kin = geo = 0.0
    else:
        kin, geo = nc_path_integrals(field, seg, particle, th, rel_tol)

    geo_map = -th.theta * k * k
    kin_map = -th.theta * k * params.v
    geo_bracket = geo / geo_map if geo_map else 0.0
    kin_bracket = kin / kin_map if kin_map else 0.0
    kin_geometry = params.x0 / (params.x0 ** 2 + params.y0 ** 2)
    have_theta = th.theta != 0

    pf = nc_phase_prefactor(particle, constants)
    num_geo_phase = pf * (-(particle.charge / particle.mass) * geo)
    num_kin_phase = pf * kin
    closed_geo_phase = pref * (terms.geom1 + terms.geom2)
    closed_kin_phase = pref * terms.kinetic

    rows = (
        RatioRow("geometric_bracket", geo_bracket, terms.geom1 + terms.geom2,
                 _ratio(geo_bracket, terms.geom1 + terms.geom2) if have_theta else None,
                 "expected 1"),
        RatioRow("kinetic_bracket", kin_bracket, kin_geometry,
                 _ratio(kin_bracket, kin_geometry) if have_theta and params.v else None,
                 "expected -2: symmetric limits double the antiderivative"),
        RatioRow("geometric_phase", num_geo_phase, closed_geo_phase,
                 _ratio(num_geo_phase, closed_geo_phase), "residual prefactor ratio"),
        RatioRow("kinetic_phase", num_kin_phase, closed_kin_phase,
                 _ratio(num_kin_phase, closed_kin_phase), "residual prefactor ratio"),
        RatioRow("total_phase", num_geo_phase + num_kin_phase, closed_geo_phase + closed_kin_phase,
                 _ratio(num_geo_phase + num_kin_phase, closed_geo_phase + closed_kin_phase),
                 "residual prefactor ratio"),
    )
    return VerificationReport(rows)
