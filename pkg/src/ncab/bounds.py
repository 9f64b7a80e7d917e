"""Upper limits on sqrt(theta) from an experimental phase resolution."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Literal, Optional

from .constants import (
    DEFAULT_CONSTANTS,
    PhysicalConstants,
    length_to_inverse_energy,
    sqrt_theta_to_energy_scale,
)
from .errors import ValidationError
from .phase import ExperimentParams, bracket_terms

BoundMode = Literal["published", "first_term", "all_terms"]


@dataclass(frozen=True)
class BoundResult:
    sqrt_theta_m: float
    sqrt_theta_inv_gev: float
    energy_scale_tev: float
    mode: str
    params: ExperimentParams


def theta_limit(params: ExperimentParams, mode: BoundMode = "published",
                constants: PhysicalConstants = DEFAULT_CONSTANTS) -> BoundResult:
    """Limit on sqrt(theta) for phase resolution ``params.epsilon``.

    mode
        ``"published"``: ``sqrt(theta) <= [ (1/8y)(Phi/Phi0) sqrt(atan(x/y)/eps) ]^-1``,
        the published estimate.
        ``"first_term"``: solves ``(theta/8)(Phi/Phi0)^2 atan(x/y)/y^2 = eps``
        exactly. Tighter than ``"published"`` by a factor ``sqrt(8)`` in length.
        ``"all_terms"``: as ``"first_term"`` with the full bracket
        (sensitivity extension).
    """
    flux = math.pi * params.a ** 2 * params.B0
    ratio = flux / constants.phi0
    x, y, eps = params.x0, params.y0, params.epsilon
    if mode == "published":
        sqrt_theta = 1.0 / ((1.0 / (8.0 * y)) * ratio * math.sqrt(math.atan(x / y) / eps))
    elif mode in ("first_term", "all_terms"):
        terms = bracket_terms(params, constants)
        bracket = terms.geom1 if mode == "first_term" else terms.total
        sqrt_theta = math.sqrt(8.0 * eps / (ratio ** 2 * bracket))
    else:
        raise ValidationError(f"unknown bound mode {mode!r}")
    return BoundResult(
        sqrt_theta_m=sqrt_theta,
        sqrt_theta_inv_gev=length_to_inverse_energy(sqrt_theta, constants),
        energy_scale_tev=sqrt_theta_to_energy_scale(sqrt_theta, constants),
        mode=mode,
        params=params,
    )


@dataclass(frozen=True)
class BoundRow:
    scenario: str
    sqrt_theta_inv_gev: float
    ratio_to_this_work: float


# Quoted limits on sqrt(theta), GeV^-1.
QUOTED_BOUNDS = (
    ("AB effect, closed path", 1e6),
    ("AC effect, charged wire", 1e7),
    ("hydrogen atom spectrum", 1.0 / 0.16),
    ("S effect, quoted (0.13 TeV)^-1", 1.0 / 130.0),
)


def bound_comparison_table(params: Optional[ExperimentParams] = None,
                           constants: PhysicalConstants = DEFAULT_CONSTANTS) -> List[BoundRow]:
    """Quoted limits next to the computed S-effect limit, all in GeV^-1.

    ``ratio_to_this_work`` divides each row by the computed limit.
    """
    ours = theta_limit(params or ExperimentParams(), "published", constants).sqrt_theta_inv_gev
    rows = [BoundRow(name, value, value / ours) for name, value in QUOTED_BOUNDS]
    rows.append(BoundRow("S effect, computed", ours, 1.0))
    return rows
