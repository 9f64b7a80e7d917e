"""Scenario files: TOML documents with unit-suffixed keys.

Example (every key optional, defaults shown)::

    [field]
    a_m = 5.0
    B0_tesla = 10.0

    [path]
    x0_m = 30.0
    y0_m = 8.0

    [particle]
    v_m_per_s = 2.0e8
    mass_kg = 9.1093837015e-31
    charge_coulomb = 1.602176634e-19

    [nc]
    theta_m2 = 2.304e-36
    epsilon_rad = 1.0e-4

    [output]
    format = "table"      # table | csv | json
    dir = "."
    timestamp = true
    rel_tol = 1.0e-10
"""
from __future__ import annotations

import sys
from dataclasses import dataclass, field

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .constants import DEFAULT_CONSTANTS
from .errors import ValidationError
from .phase import DEFAULT_REL_TOL, ExperimentParams, Particle

FORMATS = ("table", "csv", "json")

# section -> key -> (target, type)
SCHEMA = {
    "field": {"a_m": ("a", float), "B0_tesla": ("B0", float)},
    "path": {"x0_m": ("x0", float), "y0_m": ("y0", float)},
    "particle": {
        "v_m_per_s": ("v", float),
        "mass_kg": ("mass", float),
        "charge_coulomb": ("charge", float),
    },
    "nc": {"theta_m2": ("theta", float), "epsilon_rad": ("epsilon", float)},
    "output": {
        "format": ("format", str),
        "dir": ("dir", str),
        "timestamp": ("timestamp", bool),
        "rel_tol": ("rel_tol", float),
    },
}


@dataclass(frozen=True)
class OutputOptions:
    format: str = "table"
    dir: str = "."
    timestamp: bool = True
    rel_tol: float = DEFAULT_REL_TOL

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValidationError(f"output.format must be one of {FORMATS}, got {self.format!r}")
        if not self.rel_tol > 0:
            raise ValidationError("output.rel_tol must be positive")


@dataclass(frozen=True)
class Scenario:
    params: ExperimentParams = field(default_factory=ExperimentParams)
    mass: float = DEFAULT_CONSTANTS.m_e
    charge: float = DEFAULT_CONSTANTS.e_charge
    output: OutputOptions = field(default_factory=OutputOptions)

    def particle(self) -> Particle:
        return Particle(self.mass, self.charge, self.params.v)

    def inputs(self) -> dict:
        p = self.params
        return {
            "a_m": p.a,
            "B0_tesla": p.B0,
            "x0_m": p.x0,
            "y0_m": p.y0,
            "v_m_per_s": p.v,
            "mass_kg": self.mass,
            "charge_coulomb": self.charge,
            "theta_m2": p.theta,
            "epsilon_rad": p.epsilon,
        }


def _coerce(section: str, key: str, value, kind):
    where = f"[{section}] {key}"
    if kind is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ValidationError(f"{where}: expected a number, got {value!r}")
        return float(value)
    if not isinstance(value, kind):
        raise ValidationError(f"{where}: expected {kind.__name__}, got {value!r}")
    return value


def parse_scenario(text: str) -> Scenario:
    """Parse and validate a scenario document; missing keys take defaults."""
    try:
        doc = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ValidationError(f"scenario parse error: {exc}") from exc

    values = {}
    for section, body in doc.items():
        if section not in SCHEMA:
            raise ValidationError(f"unknown section [{section}]; expected one of {sorted(SCHEMA)}")
        if not isinstance(body, dict):
            raise ValidationError(f"[{section}] must be a table")
        for key, value in body.items():
            if key not in SCHEMA[section]:
                raise ValidationError(f"unknown key {key!r} in [{section}]; expected one of {sorted(SCHEMA[section])}")
            target, kind = SCHEMA[section][key]
            values[target] = _coerce(section, key, value, kind)

    param_keys = ("a", "B0", "x0", "y0", "v", "epsilon", "theta")
    params = ExperimentParams(**{k: values[k] for k in param_keys if k in values})
    output = OutputOptions(**{k: values[k] for k in ("format", "dir", "timestamp", "rel_tol") if k in values})
    scenario = Scenario(
        params=params,
        mass=values.get("mass", DEFAULT_CONSTANTS.m_e),
        charge=values.get("charge", DEFAULT_CONSTANTS.e_charge),
        output=output,
    )
    scenario.particle()  # validates mass / charge / speed together
    return scenario


def load_scenario(path) -> Scenario:
    with open(path, encoding="utf-8") as fh:
        return parse_scenario(fh.read())
