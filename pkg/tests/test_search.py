import math

import numpy as np
import pytest
from numpy import testing as npt

from bench import chsh_bound, chsh_s, max_chsh, max_violation, max_violation_closed_form, signaling_delta
from bench.search import coordinate_ascent, correlation_grid
from core import PRESETS, MediumPosition, PTMediumParams


def test_coordinate_ascent_finds_smooth_maximum():
    def objective(x):
        return -((x[0] - 0.3) ** 2) - (x[1] + 0.2) ** 2

    point, value = coordinate_ascent(objective, [0.0, 0.0], step=0.5)
    npt.assert_allclose(point, [0.3, -0.2], atol=1e-6)
    assert value == pytest.approx(0.0, abs=1e-10)


def test_coordinate_ascent_never_decreases():
    def objective(x):
        return math.cos(3 * x[0]) * math.sin(2 * x[1])

    start = [0.1, 0.6]
    _, value = coordinate_ascent(objective, start, step=0.1)
    assert value >= objective(start)


def test_correlation_grid():
    medium = PTMediumParams.from_sin_alpha(0.3)
    grid = correlation_grid(medium, grid_resolution=8, max_workers=2)
    assert grid.shape == (8, 8)
    angles = math.pi * np.arange(8) / 8
    factor = (1 - 0.3**2) / (1 + 0.3**2)
    expected = np.outer(np.sin(2 * angles), np.sin(2 * angles)) * factor
    npt.assert_allclose(grid, expected, atol=1e-12)


@pytest.mark.parametrize("sin_alpha", [0.0, 0.1, 0.3, 0.5, 0.7])
def test_max_chsh_reaches_bound(sin_alpha):
    medium = PTMediumParams.from_sin_alpha(sin_alpha)
    result = max_chsh(medium)
    assert result.s_max == pytest.approx(chsh_bound(medium), abs=1e-3)
    assert result.s_max <= 2.0 + 1e-9
    assert result.grid_s_max <= result.s_max + 1e-12
    for angle in (result.phi_1, result.beta_1, result.phi_2, result.beta_2):
        assert 0.0 <= angle < math.pi
    reevaluated = chsh_s(result.phi_1, result.beta_1, result.phi_2, result.beta_2, medium)
    assert reevaluated == pytest.approx(result.s_max, abs=1e-9)


def test_max_chsh_hermitian_attains_classical_bound():
    result = max_chsh(PTMediumParams(eta1=1.0, phi1=0.0, eta2=3.0, phi2=0.5))
    assert result.s_max == pytest.approx(2.0, abs=1e-4)


def test_max_chsh_fig2():
    result = max_chsh(PRESETS["fig2"])
    assert result.s_max == pytest.approx(1.99746, abs=1e-3)
    assert result.s_max <= 2.0


def test_max_chsh_is_independent_of_worker_count():
    medium = PTMediumParams.from_sin_alpha(0.4)
    serial = max_chsh(medium, grid_resolution=12, max_workers=1)
    threaded = max_chsh(medium, grid_resolution=12, max_workers=4)
    assert serial == threaded


def test_max_violation_example():
    medium = PTMediumParams.from_sin_alpha(0.5)
    result = max_violation(medium)
    assert result.delta_max == pytest.approx(0.8, abs=1e-8)
    assert result.grid_delta_max <= result.delta_max + 1e-12
    assert signaling_delta(medium, result.beta, result.setting_a, result.setting_b) == pytest.approx(
        result.delta_max, abs=1e-12
    )


@pytest.mark.parametrize("phi2", [0.0, 0.6, 1.2])
def test_max_violation_matches_closed_form(phi2):
    medium = PTMediumParams.from_sin_alpha(0.3, phi2=phi2)
    assert max_violation(medium, grid_resolution=24).delta_max == pytest.approx(
        max_violation_closed_form(medium), abs=1e-8
    )


def test_max_violation_hermitian():
    assert max_violation(PTMediumParams(eta1=1.0, phi1=0.0, eta2=2.0)).delta_max <= 1e-12


def test_max_violation_fig2():
    assert max_violation(PRESETS["fig2"]).delta_max == pytest.approx(0.05038, abs=1e-4)


def test_max_violation_medium_before_beam_splitter():
    result = max_violation(PRESETS["fig2"], grid_resolution=16, medium_position=MediumPosition.BEFORE_BS)
    assert result.delta_max <= 1e-10
