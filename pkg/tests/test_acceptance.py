"""The ten acceptance criteria, one test each.

Every test prints a single ``PASS`` / ``FAIL`` line (visible with ``-s``).
"""
import functools
import math
import time

import numpy as np
import pytest

from conftest import random_exterior_points
from ncab import cli
from ncab.bounds import theta_limit
from ncab.constants import inverse_energy_to_length
from ncab.dipoles import default_theta, engineered_non_null_config, nullity_report, reference_configs
from ncab.fields import SolenoidField
from ncab.nc_algebra import ThetaMatrix, bopp_shift, star_commutator, star_product_first_order
from ncab.paths import CircularArc, open_segment
from ncab.phase import ExperimentParams, Particle, bracket_terms, s_phase_nc_closed, s_phase_nc_numeric
from ncab.quadrature import integrate
from ncab.vector_calc import ScalarField, Vec3, coordinate, curl_fd, divergence_fd, grad_fd

pytestmark = pytest.mark.acceptance


def criterion(number, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"\nACCEPTANCE {number:>2} FAIL  {title}")
                raise
            print(f"\nACCEPTANCE {number:>2} PASS  {title}")
        return run
    return wrap


DEFAULTS = ExperimentParams(a=5.0, x0=30.0, y0=8.0, B0=10.0, epsilon=1e-4)


@criterion(1, "bound gives 0.13 TeV within 10%, under 1 s")
def test_01_bound_reproduction():
    start = time.perf_counter()
    res = theta_limit(DEFAULTS)
    elapsed = time.perf_counter() - start
    assert abs(res.energy_scale_tev - 0.13) <= 0.10 * 0.13
    assert elapsed < 1.0


@criterion(2, "bracket magnitudes 1e-2, 1e-3, 1e-7")
def test_02_bracket_magnitudes():
    t = bracket_terms(DEFAULTS.with_(v=2e8))
    assert 1.8e-2 <= t.geom1 <= 2.3e-2
    assert 3.5e-3 <= t.geom2 <= 4.3e-3
    assert 1e-8 <= t.kinetic <= 1e-6


@criterion(3, "quadrature matches antiderivatives at 50 random (x0, y)")
def test_03_antiderivative_oracle():
    rng = np.random.default_rng(2024)
    for x0, y in zip(rng.uniform(0.1, 200.0, 50), rng.uniform(5.01, 100.0, 50)):
        geo, _ = integrate(lambda x: y / (x * x + y * y) ** 2, -x0, x0)
        kin, _ = integrate(lambda x: (x * x - y * y) / (x * x + y * y) ** 2, -x0, x0)
        geo_exact = math.atan(x0 / y) / y ** 2 + (x0 / y) / (x0 ** 2 + y ** 2)
        kin_exact = -2 * x0 / (x0 ** 2 + y ** 2)
        assert abs(geo - geo_exact) <= 1e-8 * abs(geo_exact)
        assert abs(kin - kin_exact) <= 1e-8 * abs(kin_exact)


@criterion(4, "circulation of A around r = 2a equals the flux")
def test_04_flux_consistency():
    sol = SolenoidField(5.0, 10.0)
    circle = CircularArc(Vec3(), 10.0)
    bps = circle.breakpoints
    total = math.fsum(
        integrate(lambda t: sol.vector_potential(circle.point_at(t)).dot(circle.tangent_at(t)), lo, hi)[0]
        for lo, hi in zip(bps, bps[1:])
    )
    flux = math.pi * 25.0 * 10.0
    assert abs(total - flux) <= 1e-8 * flux


@criterion(5, "analytic grad A_x matches finite differences; div A and curl A vanish")
def test_05_derivative_oracle():
    sol = SolenoidField(5.0, 10.0)
    ax = sol.potential_component(0)
    for p in random_exterior_points(100, seed=77):
        analytic = sol.grad_Ax(p)
        fd = grad_fd(ax, p)
        assert (analytic - fd).norm() <= 1e-6 * analytic.norm()
        A = sol.potential_field()
        scale = sol.vector_potential(p).norm() / p.norm()
        assert abs(divergence_fd(A, p)) <= 1e-8 * scale
        assert curl_fd(A, p).norm() <= 1e-8 * scale


@criterion(6, "star commutator, Bopp shift limits, f * f = f^2")
def test_06_nc_algebra():
    th = ThetaMatrix(2.3e-36)
    x, y = coordinate(0), coordinate(1)
    p = Vec3(1.3, -0.7, 2.0)
    assert star_commutator(x, y, p, th) == complex(0.0, th.theta)
    r, mom = Vec3(3.0, -4.0, 1.0), Vec3(1e-24, 2e-24, 0.0)
    assert bopp_shift(r, mom, ThetaMatrix(0.0)) == r
    assert bopp_shift(r, Vec3(), th) == r
    f = ScalarField(lambda q: q.x ** 2 * q.y + math.sin(q.z))
    ff = star_product_first_order(f, f, p, th)
    assert ff == complex(f(p) ** 2, 0.0)


@criterion(7, "three dipole configurations null, engineered one not")
def test_07_nullity_suite():
    th = default_theta()
    for name, cfg in reference_configs():
        rep = nullity_report(cfg, th, name)
        assert rep.verdict == "null", name
        assert rep.max_scaled_divergence < 1e-10
        assert all(v < 1e-10 for v in rep.scaled_divergence_integrals)
    assert nullity_report(engineered_non_null_config(), th).verdict == "not null"


@criterion(8, "1e6 GeV^-1 is about 2e-10 m")
def test_08_unit_conversion():
    assert 1.9e-10 <= inverse_energy_to_length(1e6) <= 2.1e-10


@criterion(9, "NC phase linear in theta, bound scales as sqrt(eps)")
def test_09_scaling():
    sol, seg, part = SolenoidField(5.0, 10.0), open_segment(30.0, 8.0), Particle.electron(2e8)
    base_th = 1e-36
    base = s_phase_nc_numeric(sol, seg, part, ThetaMatrix(base_th))
    closed = s_phase_nc_closed(DEFAULTS.with_(theta=base_th)).nc_closed
    for factor in (1e-3, 0.1, 2.0, 10.0, 1e4):
        th = base_th * factor
        assert s_phase_nc_numeric(sol, seg, part, ThetaMatrix(th)) == pytest.approx(factor * base, rel=1e-12)
        assert s_phase_nc_closed(DEFAULTS.with_(theta=th)).nc_closed == pytest.approx(factor * closed, rel=1e-12)
    b0 = theta_limit(DEFAULTS).sqrt_theta_m
    for factor in (1e-4, 1e-2, 0.5, 3.0, 1e2):
        b = theta_limit(DEFAULTS.with_(epsilon=1e-4 * factor)).sqrt_theta_m
        assert b == pytest.approx(b0 * math.sqrt(factor), rel=1e-12)


@criterion(10, "repro output byte-identical across runs, under 5 s")
def test_10_determinism(tmp_path, capsys):
    outputs = []
    for name in ("one", "two"):
        d = tmp_path / name
        start = time.perf_counter()
        rc = cli.main(["repro", "--no-timestamp", "--format", "csv", "--out", str(d)])
        elapsed = time.perf_counter() - start
        stdout = capsys.readouterr().out
        assert rc == 0
        assert elapsed < 5.0
        outputs.append((stdout, (d / "repro.csv").read_bytes(), (d / "repro.json").read_bytes()))
    assert outputs[0] == outputs[1]
