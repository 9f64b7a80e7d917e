import math

import pytest

from ncab.constants import (
    DEFAULT_CONSTANTS,
    energy_scale_to_sqrt_theta,
    inverse_energy_to_length,
    length_to_inverse_energy,
    sqrt_theta_to_energy_scale,
)
from ncab.errors import ValidationError
from ncab.phase import bracket_terms
from ncab.bounds import QUOTED_BOUNDS, bound_comparison_table, theta_limit

SQRT_THETA_M = 1.46652516810e-18
ENERGY_TEV = 0.134554104


def _back_substitute(params, sqrt_theta):
    t = bracket_terms(params)
    flux_ratio = math.pi * params.a ** 2 * params.B0 / DEFAULT_CONSTANTS.phi0
    return sqrt_theta ** 2 / 8 * flux_ratio ** 2 * t.geom1


class TestPublishedBound:
    def test_energy_scale(self, params):
        res = theta_limit(params)
        assert res.energy_scale_tev == pytest.approx(0.13, rel=0.10)
        assert res.energy_scale_tev == pytest.approx(ENERGY_TEV, rel=1e-8)
        assert res.sqrt_theta_m == pytest.approx(SQRT_THETA_M, rel=1e-9)
        assert res.sqrt_theta_inv_gev == pytest.approx(7.43195e-3, rel=1e-5)
        assert res.mode == "published"

    def test_published_mode_back_substitutes_to_eight_eps(self, params):
        assert _back_substitute(params, theta_limit(params).sqrt_theta_m) == pytest.approx(8 * params.epsilon, rel=1e-10)

    def test_first_term_back_substitutes_to_eps(self, params):
        res = theta_limit(params, "first_term")
        assert _back_substitute(params, res.sqrt_theta_m) == pytest.approx(params.epsilon, rel=1e-6)
        assert theta_limit(params).sqrt_theta_m / res.sqrt_theta_m == pytest.approx(math.sqrt(8), rel=1e-12)

    def test_all_terms_is_tighter(self, params):
        assert theta_limit(params, "all_terms").sqrt_theta_m < theta_limit(params, "first_term").sqrt_theta_m

    def test_unknown_mode(self, params):
        with pytest.raises(ValidationError):
            theta_limit(params, "nope")


class TestScaling:
    @pytest.mark.parametrize("factor", [0.01, 0.5, 4.0, 100.0])
    def test_sqrt_epsilon(self, params, factor):
        base = theta_limit(params).sqrt_theta_m
        scaled = theta_limit(params.with_(epsilon=params.epsilon * factor)).sqrt_theta_m
        assert scaled == pytest.approx(base * math.sqrt(factor), rel=1e-12)

    def test_monotone_in_B0(self, params):
        vals = [theta_limit(params.with_(B0=b)).sqrt_theta_m for b in (1, 2, 5, 10, 20)]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_monotone_in_radius(self, params):
        vals = [theta_limit(params.with_(a=a)).sqrt_theta_m for a in (1, 2, 4, 7)]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_monotone_in_y(self, params):
        vals = [theta_limit(params.with_(y0=y)).sqrt_theta_m for y in (6, 8, 12, 20)]
        assert all(a < b for a, b in zip(vals, vals[1:]))


class TestUnits:
    @pytest.mark.parametrize("length", [1e-20, 1.46e-18, 1e-10, 3.0])
    def test_length_round_trip(self, length):
        assert inverse_energy_to_length(length_to_inverse_energy(length)) == pytest.approx(length, rel=1e-12)

    @pytest.mark.parametrize("tev", [0.01, 0.13, 10.0])
    def test_energy_round_trip(self, tev):
        assert sqrt_theta_to_energy_scale(energy_scale_to_sqrt_theta(tev)) == pytest.approx(tev, rel=1e-12)

    def test_known_conversion(self):
        assert inverse_energy_to_length(1e6) == pytest.approx(1.97327e-10, rel=1e-5)


class TestComparisonTable:
    def test_rows(self, params):
        rows = bound_comparison_table(params)
        assert len(rows) == len(QUOTED_BOUNDS) + 1
        assert rows[-1].scenario == "S effect, computed"
        assert rows[-1].ratio_to_this_work == 1.0
        ours = theta_limit(params).sqrt_theta_inv_gev
        for r in rows:
            assert r.ratio_to_this_work == pytest.approx(r.sqrt_theta_inv_gev / ours, rel=1e-14)

    def test_chaichian_ratio(self, params):
        row = bound_comparison_table(params)[0]
        assert row.sqrt_theta_inv_gev == 1e6
        assert row.ratio_to_this_work == pytest.approx(1.3455e8, rel=1e-3)

    def test_quoted_same_order_as_computed(self, params):
        rows = {r.scenario: r for r in bound_comparison_table(params)}
        quoted = rows["S effect, quoted (0.13 TeV)^-1"]
        assert 0.9 < quoted.ratio_to_this_work < 1.1
