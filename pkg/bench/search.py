"""
Maximization of the CHSH-like quantity and of the no-signaling violation over the
measurement settings: a coarse grid search followed by coordinate-ascent refinement.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from bench.analysis import chsh_c, chsh_s, probabilities, signaling_delta
from bench.matrix import run_bench
from core import Bench, ExperimentSettings, MediumPosition, PTMediumParams
from core.util import angle_grid, parallel_map, wrap_angle

__logger = logging.getLogger(__name__)

DEFAULT_GRID_RESOLUTION = 50
REFINE_TOLERANCE = 1e-12
REFINE_XATOL = 1e-10
MAX_SWEEPS = 50


@dataclass(frozen=True)
class ChshMaximum:
    """
    Largest CHSH-like value found and the settings reaching it (angles wrapped into [0, pi)).
    """

    s_max: float
    phi_1: float
    beta_1: float
    phi_2: float
    beta_2: float
    grid_s_max: float  # best value on the coarse grid, before refinement


@dataclass(frozen=True)
class ViolationMaximum:
    """
    Largest change of P_A(h) between two beam-splitter settings, with the HWP angle and
    the setting pair reaching it (angles wrapped into [0, pi)).
    """

    delta_max: float
    beta: float
    setting_a: float
    setting_b: float
    grid_delta_max: float


def coordinate_ascent(
    objective: Callable[[Sequence[float]], float],
    start: Sequence[float],
    step: float,
    tolerance: float = REFINE_TOLERANCE,
    max_sweeps: int = MAX_SWEEPS,
) -> Tuple[List[float], float]:
    """
    Maximize a smooth objective one coordinate at a time, searching each coordinate
    within +-step of its current value with bounded Brent minimization.

    Args:
        objective: Function of the coordinate vector to maximize
        start: Initial coordinates, typically the best grid point
        step: Half-width of every one-dimensional search bracket
        tolerance: Stop when a full sweep improves the objective by no more than this
        max_sweeps: Upper bound on the number of sweeps

    Returns:
        The refined coordinates and the objective value there
    """
    x: List[float] = list(start)
    best: float = objective(x)

    for sweep in range(max_sweeps):
        previous = best
        for index in range(len(x)):

            def negated(value: float, index: int = index) -> float:
                trial = list(x)
                trial[index] = value
                return -objective(trial)

            result = minimize_scalar(
                negated,
                bounds=(x[index] - step, x[index] + step),
                method="bounded",
                options={"xatol": REFINE_XATOL},
            )
            if -result.fun > best:
                x[index] = float(result.x)
                best = float(-result.fun)
        __logger.debug(f"Sweep {sweep}: objective {best!r}")
        if best - previous <= tolerance:
            return x, best

    __logger.warning(f"Coordinate ascent stopped after {max_sweeps} sweeps without converging")
    return x, best


def correlation_grid(
    medium: PTMediumParams,
    grid_resolution: int = DEFAULT_GRID_RESOLUTION,
    medium_position: MediumPosition = MediumPosition.AFTER_BS,
    bench: Optional[Bench] = None,
    max_workers: Optional[int] = None,
) -> np.ndarray:
    """
    Correlation C(phi_i, beta_j) on the grid k*pi/grid_resolution in both angles.

    Returns:
        Array c with c[i, j] = C(phi_i, beta_j)
    """
    angles = angle_grid(grid_resolution)

    def row(phi: float) -> List[float]:
        return [chsh_c(phi, beta, medium, medium_position, bench) for beta in angles]

    return np.array(parallel_map(row, list(angles), max_workers))


def max_chsh(
    medium: PTMediumParams,
    grid_resolution: int = DEFAULT_GRID_RESOLUTION,
    medium_position: MediumPosition = MediumPosition.AFTER_BS,
    bench: Optional[Bench] = None,
    max_workers: Optional[int] = None,
) -> ChshMaximum:
    """
    Maximize S(phi_1, beta_1, phi_2, beta_2) over all four settings.
    Grid ties resolve to the lowest grid index in (phi_1, beta_1, phi_2, beta_2) order.

    Args:
        medium: The medium constants
        grid_resolution: Grid points per angle over [0, pi)
        medium_position: Where the medium sits relative to the BS
        bench: Bench implementation; the closed-form matrix bench if None
        max_workers: Worker cap for the grid evaluation

    Returns:
        The refined maximum and its settings

    Raises:
        BrokenPhaseError: If the medium is outside the unbroken phase
    """
    c = correlation_grid(medium, grid_resolution, medium_position, bench, max_workers)
    angles = angle_grid(grid_resolution)
    __logger.debug(f"Searching {grid_resolution ** 4} CHSH grid points")

    best_value = -1.0
    best_index: Tuple[int, int, int, int] = (0, 0, 0, 0)
    for i1 in range(grid_resolution):
        # slab[j1, i2, j2] = |C(i1,j1) + C(i1,j2) + C(i2,j1) - C(i2,j2)|
        slab = np.abs(c[i1][:, None, None] + c[i1][None, None, :] + c.T[:, :, None] - c[None, :, :])
        flat = int(np.argmax(slab))
        if slab.flat[flat] > best_value:
            best_value = float(slab.flat[flat])
            j1, i2, j2 = np.unravel_index(flat, slab.shape)
            best_index = (i1, int(j1), int(i2), int(j2))

    i1, j1, i2, j2 = best_index
    start = [angles[i1], angles[j1], angles[i2], angles[j2]]

    def objective(x: Sequence[float]) -> float:
        return chsh_s(x[0], x[1], x[2], x[3], medium, medium_position, bench)

    refined, s_max = coordinate_ascent(objective, start, math.pi / grid_resolution)
    return ChshMaximum(
        s_max=s_max,
        phi_1=wrap_angle(refined[0]),
        beta_1=wrap_angle(refined[1]),
        phi_2=wrap_angle(refined[2]),
        beta_2=wrap_angle(refined[3]),
        grid_s_max=best_value,
    )


def max_violation(
    medium: PTMediumParams,
    grid_resolution: int = DEFAULT_GRID_RESOLUTION,
    medium_position: MediumPosition = MediumPosition.AFTER_BS,
    bench: Optional[Bench] = None,
    max_workers: Optional[int] = None,
) -> ViolationMaximum:
    """
    Maximize signaling_delta over the HWP angle and over pairs of beam-splitter settings.
    Grid ties resolve to the lowest beta index, then the lowest setting indices.

    Args:
        medium: The medium constants
        grid_resolution: Grid points per angle over [0, pi)
        medium_position: Where the medium sits relative to the BS
        bench: Bench implementation; the closed-form matrix bench if None
        max_workers: Worker cap for the grid evaluation

    Returns:
        The refined maximum, its HWP angle and its setting pair

    Raises:
        BrokenPhaseError: If the medium is outside the unbroken phase
    """
    angles = angle_grid(grid_resolution)

    def row(phi: float) -> List[float]:
        values: List[float] = []
        for beta in angles:
            settings = ExperimentSettings(bs_angle=phi, hwp_angle=beta, medium=medium, medium_position=medium_position)
            record = run_bench(settings) if bench is None else bench.run(settings)
            values.append(probabilities(record).pa_h)
        return values

    # pa_h[i, j] = P_A(h) at setting phi_i and HWP angle beta_j
    pa_h = np.array(parallel_map(row, list(angles), max_workers))
    spread = pa_h.max(axis=0) - pa_h.min(axis=0)
    j = int(np.argmax(spread))
    ia, ib = int(np.argmax(pa_h[:, j])), int(np.argmin(pa_h[:, j]))
    grid_delta = float(spread[j])

    def objective(x: Sequence[float]) -> float:
        return signaling_delta(medium, x[0], x[1], x[2], medium_position, bench)

    refined, delta_max = coordinate_ascent(objective, [angles[j], angles[ia], angles[ib]], math.pi / grid_resolution)
    return ViolationMaximum(
        delta_max=delta_max,
        beta=wrap_angle(refined[0]),
        setting_a=wrap_angle(refined[1]),
        setting_b=wrap_angle(refined[2]),
        grid_delta_max=grid_delta,
    )
