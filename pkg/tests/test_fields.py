import math

import numpy as np
import pytest

from ncab.errors import DomainError, RegionError
from ncab.fields import (
    LinearField,
    SolenoidField,
    TkachukField,
    UniformField,
    solenoid_grad_Ax,
    solenoid_vector_potential,
    tkachuk_B,
)
from ncab.paths import CircularArc
from ncab.phase import line_integral
from ncab.vector_calc import EZ, Vec3, cross, curl_fd, divergence_fd, grad_fd


def test_flux(solenoid):
    assert solenoid.flux() == pytest.approx(785.3981633974483, rel=1e-15)


@pytest.mark.parametrize("a, B0", [(0.0, 1.0), (-1.0, 1.0), (1.0, math.inf)])
def test_invalid_solenoid(a, B0):
    with pytest.raises(DomainError):
        SolenoidField(a, B0)


def test_potential_values(solenoid):
    A = solenoid_vector_potential(solenoid, Vec3(0.0, 8.0, 0.0))
    assert A.x == pytest.approx(-15.625, rel=1e-15)
    assert A.y == 0.0
    A = solenoid_vector_potential(solenoid, Vec3(30.0, 8.0, 0.0))
    assert A.x == pytest.approx(-1.037344398340249, rel=1e-14)
    assert solenoid_vector_potential(solenoid, Vec3(12.0, 0.0, 0.0)).x == 0.0


def test_interior_rejected(solenoid):
    with pytest.raises(RegionError):
        solenoid.vector_potential(Vec3(3.0, 3.0, 0.0))
    with pytest.raises(RegionError):
        solenoid.vector_potential(Vec3(5.0, 0.0, 0.0))


def test_grad_ax_reproduces_kinetic_cross_product(solenoid):
    v = 2e8
    p = Vec3(0.0, 8.0, 0.0)
    w = cross(Vec3(v, 0, 0), solenoid_grad_Ax(solenoid, p))
    assert w.x == 0 and w.y == 0
    assert w.z == pytest.approx(1.953125 * v, rel=1e-14)


def test_grad_ax_reproduces_potential_cross_product(solenoid):
    p = Vec3(0.0, 8.0, 0.0)
    w = cross(solenoid.vector_potential(p), solenoid.grad_Ax(p))
    assert w.z == pytest.approx(-30.517578125, rel=1e-14)


def test_kinetic_cross_product_general_point(solenoid):
    # -B0 a^2 v / 2 (x^2 - y^2) / (x^2 + y^2)^2
    x, y, v = 13.0, -7.0, 3.0
    w = cross(Vec3(v, 0, 0), solenoid.grad_Ax(Vec3(x, y, 0)))
    assert w.z == pytest.approx(-10 * 25 * v / 2 * (x * x - y * y) / (x * x + y * y) ** 2, rel=1e-13)


def test_diagonal_point_has_no_kinetic_term(solenoid):
    w = cross(Vec3(1.0, 0, 0), solenoid.grad_Ax(Vec3(9.0, 9.0, 0.0)))
    assert w.z == pytest.approx(0.0, abs=1e-16)


def test_analytic_gradients_match_finite_differences(solenoid, exterior_points):
    for p in exterior_points:
        J = solenoid.potential_jacobian(p)
        for i in range(2):
            fd = grad_fd(lambda r: solenoid.vector_potential(r)[i], p)
            np.testing.assert_allclose(fd.as_array(), J[i], rtol=1e-6, atol=1e-6 * np.abs(J[i]).max())


def test_coulomb_gauge_and_zero_exterior_field(solenoid, exterior_points):
    A = solenoid.potential_field()
    for p in exterior_points:
        scale = solenoid.vector_potential(p).norm() / p.norm()
        assert abs(divergence_fd(A, p)) <= 1e-8 * scale
        assert curl_fd(A, p).norm() <= 1e-8 * scale


@pytest.mark.parametrize("radius", [6.0, 10.0, 40.0])
def test_flux_consistency(solenoid, radius):
    circle = CircularArc(Vec3(0, 0, 1.5), radius)
    assert line_integral(solenoid.vector_potential, circle) == pytest.approx(solenoid.flux(), rel=1e-10)


def test_tkachuk_field_midplane():
    tk = TkachukField(SolenoidField(5.0, 10.0))
    p = Vec3(30.0, 8.0, 0.0)
    A = tk.inner.vector_potential(p)
    assert tkachuk_B(tk, p) == -cross(A, EZ)


def test_tkachuk_field_matches_curl_of_potential():
    tk = TkachukField(SolenoidField(5.0, 10.0))
    for p in (Vec3(30.0, 8.0, 0.0), Vec3(-12.0, 9.0, 2.5), Vec3(7.0, -20.0, -4.0)):
        B = tkachuk_B(tk, p)
        np.testing.assert_allclose(curl_fd(tk.potential_field(), p).as_array(), B.as_array(),
                                   rtol=1e-6, atol=1e-6 * B.norm())


def test_tkachuk_field_decays():
    tk = TkachukField(SolenoidField(5.0, 10.0))
    near, far = tk.field_at(Vec3(10, 0, 0)).norm(), tk.field_at(Vec3(1e4, 0, 0)).norm()
    assert far == pytest.approx(near * 10 / 1e4, rel=1e-12)


def test_uniform_and_linear_fields():
    u = UniformField("electric", Vec3(0, 3, 0))
    assert u.field_at(Vec3(100, -4, 2)) == Vec3(0, 3, 0)
    lin = LinearField("electric", Vec3(0, 1, 0), ((0, 0, 0), (0, 0, 2), (0, 0, 0)))
    assert lin.field_at(Vec3(5, 5, 3)) == Vec3(0, 7, 0)
    with pytest.raises(DomainError):
        UniformField("gravitational", Vec3())
