"""Command-line front end.

Usage::

    ncab {repro,phase,bound,nullity,star-check,verify} [--scenario FILE]
         [--format table|csv|json] [--no-timestamp] [--tol REL] [--out DIR]

Exit codes: 0 success, 1 validation / parse error, 2 quadrature
non-convergence, 3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import csv
import datetime
import io
import json
import math
import os
import sys
from dataclasses import replace
from typing import Dict, List, Optional, Tuple

from .bounds import bound_comparison_table, theta_limit
from .constants import DEFAULT_CONSTANTS
from .dipoles import engineered_non_null_config, nullity_report, reference_configs
from .errors import ConvergenceError, DomainError, InvariantError, ValidationError
from .nc_algebra import ThetaMatrix, bopp_shift, star_commutator, star_product_first_order
from .phase import closed_form_prefactor, s_phase_nc_closed, verify_closed_vs_quadrature
from .scenario import FORMATS, Scenario, load_scenario
from .vector_calc import ScalarField, Vec3, coordinate

COMMANDS = ("repro", "phase", "bound", "nullity", "star-check", "verify")

UNITS = {
    "a_m": "m", "B0_tesla": "T", "x0_m": "m", "y0_m": "m", "v_m_per_s": "m/s",
    "mass_kg": "kg", "charge_coulomb": "C", "theta_m2": "m^2", "epsilon_rad": "rad",
    "flux": "T m^2", "flux_ratio": "1", "commutative": "rad", "nc_numeric": "rad",
    "nc_closed": "rad", "prefactor": "m^2", "geom1": "m^-2", "geom2": "m^-2",
    "kinetic": "m^-2", "kinetic_coefficient": "m^-2 s/m", "sqrt_theta_m": "m",
    "sqrt_theta_inv_gev": "GeV^-1", "energy_scale_tev": "TeV", "ratio_to_this_work": "1",
}


# ---------------------------------------------------------------- reports

def _phase_section(sc: Scenario) -> dict:
    p = sc.params
    b = s_phase_nc_closed(p, sc.output.rel_tol, particle=sc.particle())
    flux = math.pi * p.a ** 2 * p.B0
    return {
        "flux": {"flux": flux, "flux_ratio": flux / DEFAULT_CONSTANTS.phi0},
        "bracket_terms": {
            "geom1": b.bracket_terms.geom1,
            "geom2": b.bracket_terms.geom2,
            "kinetic": b.bracket_terms.kinetic,
            "kinetic_coefficient": b.kinetic_coefficient,
        },
        "phases": {
            "commutative": b.commutative,
            "nc_numeric": b.nc_numeric,
            "nc_closed": b.nc_closed,
            "prefactor": b.prefactor,
        },
    }


def _bound_section(sc: Scenario) -> dict:
    bounds = []
    for mode in ("published", "first_term", "all_terms"):
        r = theta_limit(sc.params, mode)
        bounds.append({
            "mode": mode,
            "sqrt_theta_m": r.sqrt_theta_m,
            "sqrt_theta_inv_gev": r.sqrt_theta_inv_gev,
            "energy_scale_tev": r.energy_scale_tev,
        })
    comparison = [
        {"scenario": row.scenario, "sqrt_theta_inv_gev": row.sqrt_theta_inv_gev,
         "ratio_to_this_work": row.ratio_to_this_work}
        for row in bound_comparison_table(sc.params)
    ]
    return {"bounds": bounds, "comparison": comparison}


def _check_bound_consistency(sc: Scenario) -> None:
    """Substituting the limits back into the first bracket term must give
    8 eps (published estimate) and eps (exact inversion)."""
    p = sc.params
    for mode, expected in (("published", 8.0), ("first_term", 1.0)):
        r = theta_limit(p, mode)
        phase = closed_form_prefactor(p.with_(theta=r.sqrt_theta_m ** 2)) * (
            math.atan(p.x0 / p.y0) / p.y0 ** 2)
        if abs(phase / p.epsilon - expected) > 1e-6 * expected:
            raise InvariantError(f"bound mode {mode!r}: phase/eps = {phase / p.epsilon!r}, expected {expected}")


def _verify_section(sc: Scenario) -> dict:
    report = verify_closed_vs_quadrature(sc.params, sc.output.rel_tol, particle=sc.particle())
    return {"verify": [
        {"name": r.name, "numeric": r.numeric, "closed": r.closed, "ratio": r.ratio, "note": r.note}
        for r in report.rows
    ]}


def _nullity_section(sc: Scenario) -> dict:
    th = sc.params.theta_matrix()
    configs = reference_configs() + [("engineered control", engineered_non_null_config())]
    out = []
    for name, cfg in configs:
        r = nullity_report(cfg, th, name)
        t = r.terms
        out.append({
            "name": name,
            "kind": r.kind,
            "verdict": r.verdict,
            "max_scaled_divergence": r.max_scaled_divergence,
            "scaled_velocity_integral": r.scaled_divergence_integrals[0],
            "scaled_quadratic_integral": r.scaled_divergence_integrals[1],
            "divergence_velocity": t.divergence_velocity,
            "divergence_quadratic": t.divergence_quadratic,
            "component_velocity": t.component_velocity,
            "component_quadratic": t.component_quadratic,
        })
    for row in out[:3]:
        if row["verdict"] != "null":
            raise InvariantError(f"{row['name']}: expected a null NC contribution")
    return {"nullity": out}


def star_checks(theta: float) -> List[dict]:
    """Identity suite for the star product and the Bopp shift."""
    th = ThetaMatrix(theta)
    p = Vec3(1.3, -0.7, 0.4)
    x, y = coordinate(0), coordinate(1)
    f = ScalarField(lambda r: r.x ** 2 * r.y + math.sin(r.y))
    x2 = ScalarField(lambda r: r.x ** 2)
    mom = Vec3(2.0e-24, -1.0e-24, 3.0e-24)
    checks = []

    def add(name, value, expected, ok):
        checks.append({"name": name, "value": value, "expected": expected, "pass": bool(ok)})

    c = star_commutator(x, y, p, th)
    add("commutator_xy_imag", c.imag, theta, c == complex(0.0, theta))
    ff = star_product_first_order(f, f, p, th)
    add("self_product_minus_square", abs(ff - f(p) ** 2), 0.0, ff == complex(f(p) ** 2, 0.0))
    c1, c2 = star_commutator(f, y, p, th), star_commutator(y, f, p, th)
    add("commutator_antisymmetry", abs(c1 + c2), 0.0, c1 == -c2)
    c3 = star_commutator(x2, y, p, th)
    want = 2.0 * p.x * theta
    add("commutator_x2_y_imag", c3.imag, want, abs(c3.imag - want) <= 1e-8 * abs(want))
    s0 = bopp_shift(p, mom, ThetaMatrix(0.0))
    add("bopp_identity_theta0", (s0 - p).norm(), 0.0, s0 == p)
    s1 = bopp_shift(p, Vec3(), th)
    add("bopp_identity_p0", (s1 - p).norm(), 0.0, s1 == p)
    s2 = bopp_shift(p, mom, th)
    add("bopp_preserves_z", s2.z - p.z, 0.0, s2.z == p.z)
    return checks


def _star_section(sc: Scenario) -> dict:
    return {"star_check": star_checks(sc.params.theta)}


def build_report(command: str, sc: Scenario) -> dict:
    body: Dict[str, object] = {"inputs": sc.inputs()}
    if command == "phase":
        body.update(_phase_section(sc))
    elif command == "bound":
        body.update(_bound_section(sc))
    elif command == "verify":
        body.update(_verify_section(sc))
    elif command == "nullity":
        body.update(_nullity_section(sc))
    elif command == "star-check":
        body.update(_star_section(sc))
    elif command == "repro":
        body.update(_phase_section(sc))
        body["magnitudes"] = {
            k: math.floor(math.log10(abs(v))) if v else None
            for k, v in body["bracket_terms"].items() if k != "kinetic_coefficient"
        }
        body.update(_bound_section(sc))
        _check_bound_consistency(sc)
        body.update(_verify_section(sc))
        body.update(_nullity_section(sc))
        body.update(_star_section(sc))
    else:
        raise ValidationError(f"unknown command {command!r}")
    return body


# ---------------------------------------------------------------- output

def _fmt(value) -> str:
    if value is None:
        return "N/A"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value + 0.0:.16e}"  # + 0.0 folds -0.0 into 0.0
    return str(value)


def long_rows(body: dict) -> List[Tuple[str, str, str, str, str]]:
    """Flatten a report into ``(section, item, quantity, value, unit)`` rows."""
    rows = []
    for section, content in body.items():
        if isinstance(content, dict):
            for k, v in content.items():
                rows.append((section, "", k, _fmt(v), UNITS.get(k, "")))
        else:
            for entry in content:
                label_key = next(k for k in ("name", "mode", "scenario") if k in entry)
                for k, v in entry.items():
                    if k == label_key:
                        continue
                    rows.append((section, entry[label_key], k, _fmt(v), UNITS.get(k, "")))
    return rows


def render_csv(body: dict, timestamp: Optional[str]) -> str:
    buf = io.StringIO()
    if timestamp:
        buf.write(f"# generated_at: {timestamp}\r\n")
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(("section", "item", "quantity", "value", "unit"))
    w.writerows(long_rows(body))
    return buf.getvalue()


def render_json(command: str, body: dict, timestamp: Optional[str]) -> str:
    obj = {"command": command, "generated_at": timestamp}
    obj.update(body)
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def render_table(command: str, body: dict, timestamp: Optional[str]) -> str:
    lines = []
    if timestamp:
        lines.append(f"# generated_at: {timestamp}")
    lines.append(f"== {command} ==")
    current = None
    for section, item, quantity, value, unit in long_rows(body):
        if section != current:
            lines.append(f"\n[{section}]")
            current = section
        label = f"{item} :: {quantity}" if item else quantity
        try:
            value = f"{float(value):.6g}"
        except ValueError:
            pass
        lines.append(f"  {label:<58} {value:>16} {unit}")
    return "\n".join(lines) + "\n"


def render(fmt: str, command: str, body: dict, timestamp: Optional[str]) -> str:
    if fmt == "csv":
        return render_csv(body, timestamp)
    if fmt == "json":
        return render_json(command, body, timestamp)
    return render_table(command, body, timestamp)


def run_command(command: str, sc: Scenario, out=None) -> int:
    """Run one command, write its output, and return the exit status."""
    out = out or sys.stdout
    timestamp = (datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")
                 if sc.output.timestamp else None)
    body = build_report(command, sc)
    out.write(render(sc.output.format, command, body, timestamp))
    if command == "repro":
        os.makedirs(sc.output.dir, exist_ok=True)
        with open(os.path.join(sc.output.dir, "repro.csv"), "w", encoding="utf-8", newline="") as fh:
            fh.write(render_csv(body, timestamp))
        with open(os.path.join(sc.output.dir, "repro.json"), "w", encoding="utf-8") as fh:
            fh.write(render_json(command, body, timestamp))
    if "star_check" in body and not all(c["pass"] for c in body["star_check"]):
        failed = [c["name"] for c in body["star_check"] if not c["pass"]]
        raise InvariantError(f"star-product identities failed: {failed}")
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(message)


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ncab", description="NC corrections to Aharonov-Bohm type phases")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--scenario", help="TOML scenario file (defaults: the S-effect proposal)")
    p.add_argument("--format", choices=FORMATS, help="output format (default: table)")
    p.add_argument("--no-timestamp", action="store_true", help="omit the generation timestamp")
    p.add_argument("--tol", type=float, help="relative quadrature tolerance")
    p.add_argument("--out", help="output directory for repro.csv / repro.json")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = make_parser().parse_args(argv)
        sc = load_scenario(args.scenario) if args.scenario else Scenario()
        opts = sc.output
        changes = {}
        if args.format:
            changes["format"] = args.format
        if args.no_timestamp:
            changes["timestamp"] = False
        if args.tol is not None:
            changes["rel_tol"] = args.tol
        if args.out:
            changes["dir"] = args.out
        sc = replace(sc, output=replace(opts, **changes))
        return run_command(args.command, sc)
    except (ValidationError, DomainError, OSError) as exc:
        print(f"ncab: error: {exc}", file=sys.stderr)
        return 1
    except ConvergenceError as exc:
        print(f"ncab: quadrature did not converge: {exc} "
              f"(estimate {exc.estimate!r}, error bound {exc.error_bound!r})", file=sys.stderr)
        return 2
    except InvariantError as exc:
        print(f"ncab: invariant violated: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
