"""
Quantify the error of neglecting diffraction: compare detection statistics of the
matrix bench with those of the paraxial bench.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

from bench import MatrixBench, probabilities
from core import ExperimentSettings, ProbabilityTable, PTMediumParams, TransverseField
from optics import derive
from paraxial.bench import ParaxialBench
from paraxial.solver import split_step_propagate

__logger = logging.getLogger(__name__)

# Generic settings with r, t and sin(2 beta) all away from 0 and 1
DEFAULT_BS_ANGLE = math.pi / 3
DEFAULT_HWP_ANGLE = math.pi / 8


@dataclass(frozen=True)
class DiscrepancyReport:
    """
    Detection statistics of one medium with and without diffraction.
    """

    rayleigh_ratio: float  # k w^2 / L
    include_diffraction: bool
    k: float
    waist: float
    medium_width: Optional[float]
    matrix: ProbabilityTable
    paraxial: ProbabilityTable

    @property
    def max_discrepancy(self) -> float:
        return max(abs(a - b) for a, b in zip(self.matrix.joint(), self.paraxial.joint()))


def default_settings(medium: PTMediumParams) -> ExperimentSettings:
    return ExperimentSettings(bs_angle=DEFAULT_BS_ANGLE, hwp_angle=DEFAULT_HWP_ANGLE, medium=medium)


def validate_matrix_model(
    medium: PTMediumParams,
    rayleigh_ratio: float,
    settings: Optional[ExperimentSettings] = None,
    include_diffraction: bool = True,
    medium_width: Optional[float] = None,
    waist: float = 1.0,
) -> DiscrepancyReport:
    """
    Run the bench with the 2x2 medium operator and with paraxial propagation over the
    medium length, and compare the four joint probabilities.

    Args:
        medium: The medium constants
        rayleigh_ratio: k w^2 / L, large values mean weak diffraction inside the medium
        settings: Bench settings; generic default settings if None (their medium is replaced)
        include_diffraction: Apply diffraction in the paraxial run
        medium_width: Transverse width of the coupling region; uniform if None
        waist: Beam waist w, the length unit of the transverse problem

    Returns:
        The discrepancy report

    Raises:
        BrokenPhaseError: If the medium is outside the unbroken PT phase
    """
    base = default_settings(medium) if settings is None else settings
    run_settings = ExperimentSettings(
        bs_angle=base.bs_angle,
        hwp_angle=base.hwp_angle,
        medium=medium,
        bs_phases=base.bs_phases,
        medium_position=base.medium_position,
        mirror_swap=base.mirror_swap,
    )
    paraxial_bench = ParaxialBench(
        rayleigh_ratio=rayleigh_ratio,
        waist=waist,
        include_diffraction=include_diffraction,
        medium_width=medium_width,
    )
    cfg = paraxial_bench.propagation_config(run_settings)
    report = DiscrepancyReport(
        rayleigh_ratio=rayleigh_ratio,
        include_diffraction=include_diffraction,
        k=cfg.k,
        waist=waist,
        medium_width=medium_width,
        matrix=probabilities(MatrixBench().run(run_settings)),
        paraxial=probabilities(paraxial_bench.run(run_settings)),
    )
    __logger.debug(f"k w^2/L={rayleigh_ratio}: max discrepancy {report.max_discrepancy!r}")
    return report


def propagated_field(
    medium: PTMediumParams,
    rayleigh_ratio: float,
    include_diffraction: bool = True,
    medium_width: Optional[float] = None,
    waist: float = 1.0,
) -> TransverseField:
    """
    Field pair after the medium for a beam entering the upper channel only.

    Raises:
        BrokenPhaseError: If the medium is outside the unbroken PT phase
    """
    paraxial_bench = ParaxialBench(
        rayleigh_ratio=rayleigh_ratio,
        waist=waist,
        include_diffraction=include_diffraction,
        medium_width=medium_width,
    )
    cfg = paraxial_bench.propagation_config(default_settings(medium))
    grid = paraxial_bench.grid(cfg)
    entrance = TransverseField(grid, paraxial_bench.input_profile(grid), 0 * grid.x)
    return split_step_propagate(entrance, cfg, derive(medium).length)
