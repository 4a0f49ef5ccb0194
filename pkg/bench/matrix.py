"""
Bench model with the medium as the 2x2 propagation operator of the diffraction-free Hamiltonian.
"""

from typing import Optional

from bench.pipeline import Stage, stage_order
from core import Bench, DetectionRecord, ExperimentSettings, PolPosState, PositionOperator
from optics import (
    apply_polarization_op,
    apply_position_op,
    beam_splitter_for_angle,
    hwp_rotation,
    initial_state,
    medium_operator,
    mirror_swap,
    pbs_intensities,
)


class MatrixBench(Bench):
    """
    Matrix implementation of the Bench interface.
    Every element is a one-sided product on the 2x2 amplitude tensor.
    """

    def __init__(self, numeric_medium: bool = False):
        """
        Initialize the matrix bench.

        Args:
            numeric_medium: Propagate through the medium with the numerical matrix
                exponential instead of the closed-form operator
        """
        self.__numeric_medium: bool = numeric_medium

    def run(self, settings: ExperimentSettings, initial: Optional[PolPosState] = None) -> DetectionRecord:
        """
        Run the bench once and record the four detector intensities.

        Args:
            settings: The measurement settings and the medium
            initial: Input state; the canonical inseparable state if None

        Returns:
            The detection record of the run

        Raises:
            BrokenPhaseError: If the medium is outside the unbroken PT phase
        """
        state: PolPosState = initial_state() if initial is None else initial
        medium: PositionOperator = medium_operator(settings.medium, numeric=self.__numeric_medium)

        for stage in stage_order(settings):
            if stage is Stage.BEAM_SPLITTER:
                op = beam_splitter_for_angle(settings.bs_angle, settings.bs_phases)
            elif stage is Stage.MEDIUM:
                op = medium
            else:
                op = mirror_swap()
            state = apply_position_op(state, op)

        state = apply_polarization_op(state, hwp_rotation(settings.hwp_angle))
        return pbs_intensities(state)


__DEFAULT_BENCH = MatrixBench()


def run_bench(settings: ExperimentSettings, initial: Optional[PolPosState] = None) -> DetectionRecord:
    """
    Run the closed-form matrix bench; see MatrixBench.run.
    """
    return __DEFAULT_BENCH.run(settings, initial)
