import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from ncab import quadrature
from ncab.errors import ConvergenceError, DomainError
from ncab.paths import CircularArc, StraightSegment
from ncab.phase import line_integral
from ncab.vector_calc import Vec3


def test_kronrod_weights_integrate_polynomials_exactly():
    # 15-point Kronrod is exact through degree 22, embedded Gauss through 13
    for deg in range(0, 23):
        exact = 0.0 if deg % 2 else 2.0 / (deg + 1)
        assert float(quadrature.K_WEIGHTS @ quadrature.NODES ** deg) == pytest.approx(exact, abs=1e-14)
    for deg in range(0, 14):
        exact = 0.0 if deg % 2 else 2.0 / (deg + 1)
        assert float(quadrature.G_WEIGHTS @ quadrature.NODES ** deg) == pytest.approx(exact, abs=1e-14)


@pytest.mark.parametrize(
    "f, a, b",
    [
        (math.exp, 0.0, 3.0),
        (lambda x: 1.0 / (1e-2 + x * x), -1.0, 1.0),
        (lambda x: math.sqrt(x), 0.0, 1.0),
        (lambda x: math.cos(40 * x), 0.0, 2.0),
    ],
)
def test_against_mpmath(f, a, b):
    value, err = quadrature.integrate(f, a, b, rel_tol=1e-11)
    ref = float(mpmath.quad(lambda x: f(float(x)), [a, (a + b) / 2, b]))
    assert value == pytest.approx(ref, rel=1e-10)
    assert err <= 1e-10 * abs(ref)


def test_zero_integrand():
    assert quadrature.integrate(lambda x: 0.0, -1.0, 5.0) == (0.0, 0.0)
    assert line_integral(lambda p: Vec3(), StraightSegment(Vec3(), Vec3(1, 2, 3))) == 0.0


def test_deterministic_bitwise():
    f = lambda x: math.sin(x) / (1.1 + math.cos(3 * x))
    assert quadrature.integrate(f, 0.0, 7.0) == quadrature.integrate(f, 0.0, 7.0)


def test_non_convergence_reports_estimate():
    with pytest.raises(ConvergenceError) as info:
        quadrature.integrate(lambda x: 1.0 / abs(x - 0.3) ** 1.05 if x != 0.3 else 1e300, 0.0, 1.0, max_depth=12)
    assert math.isfinite(info.value.estimate)
    assert info.value.error_bound > 0


def test_non_finite_integrand_is_a_domain_error():
    with pytest.raises(DomainError):
        quadrature.integrate(lambda x: math.inf, 0.0, 1.0)


def test_gradient_theorem():
    f = lambda p: p.x ** 2 * p.y
    grad = lambda p: Vec3(2 * p.x * p.y, p.x ** 2, 0.0)
    for path in (StraightSegment(Vec3(-3, 1, 0), Vec3(4, 7, 2)), CircularArc(Vec3(1, 1, 0), 3.0, 0.2, 2.5)):
        expected = f(path.point_at(1.0)) - f(path.point_at(0.0))
        assert line_integral(grad, path) == pytest.approx(expected, rel=1e-10)


@settings(max_examples=30, deadline=None)
@given(st.floats(0.1, 10.0), st.floats(-5.0, 5.0), st.floats(0.1, 20.0))
def test_gaussian_against_erf(width, centre, half):
    f = lambda x: math.exp(-((x - centre) / width) ** 2)
    a, b = centre - half, centre + half * 0.5
    exact = 0.5 * math.sqrt(math.pi) * width * (math.erf((b - centre) / width) - math.erf((a - centre) / width))
    assert quadrature.integrate(f, a, b)[0] == pytest.approx(exact, rel=1e-10)
