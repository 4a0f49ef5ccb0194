"""
Bench model that replaces the 2x2 medium operator by split-step propagation of
transverse fields and integrates the detected intensities over x.
"""

import math
from typing import Optional

import numpy as np

from bench.pipeline import Stage, stage_order
from core import (
    Bench,
    DetectionRecord,
    ExperimentSettings,
    PolPosState,
    PropagationConfig,
    TransverseField,
    TransverseGrid,
)
from core.field import MIN_GRID_POINTS
from optics import beam_splitter_for_angle, derive, hwp_rotation, initial_state
from optics.elements import CIRCULAR_TO_LINEAR
from paraxial.profiles import discrete_norm, gaussian_profile
from paraxial.solver import split_step_propagate

# Domain half width in units of the largest beam radius, and samples per waist
DOMAIN_EXTENT = 8.0
SAMPLES_PER_WAIST = 8


def diffracted_waist(waist: float, k: float, z: float) -> float:
    """
    Radius of a free Gaussian beam after a distance z, w sqrt(1 + (2z/(k w^2))^2).
    """
    return waist * math.sqrt(1 + (2 * z / (k * waist**2)) ** 2)


def grid_for_beam(waist: float, k: float, length: float) -> TransverseGrid:
    """
    Grid wide enough for the beam diffracted over the medium length and fine enough
    to resolve the initial waist.
    """
    half_width = DOMAIN_EXTENT * max(waist, diffracted_waist(waist, k, length))
    samples = 2 * half_width * SAMPLES_PER_WAIST / waist
    n = max(MIN_GRID_POINTS, 1 << math.ceil(math.log2(samples)))
    return TransverseGrid(n=n, half_width=half_width)


class ParaxialBench(Bench):
    """
    Paraxial implementation of the Bench interface.
    Both beams carry the same centred Gaussian envelope; inside the medium every
    polarization component is propagated as a coupled (E_u, E_l) pair, and each
    detector integrates its intensity over the transverse coordinate.
    """

    def __init__(
        self,
        rayleigh_ratio: float,
        waist: float = 1.0,
        include_diffraction: bool = True,
        medium_width: Optional[float] = None,
        dz: Optional[float] = None,
    ):
        """
        Initialize the paraxial bench.

        Args:
            rayleigh_ratio: k w^2 / L; the wave number follows from the medium length of each run
            waist: Beam waist w
            include_diffraction: Apply the diffraction half steps
            medium_width: Transverse width of the coupling region; uniform if None
            dz: Step length; L/1000 if None

        Raises:
            ValueError: If rayleigh_ratio or waist is not positive
        """
        if not rayleigh_ratio > 0:
            raise ValueError(f"rayleigh ratio must be positive, got {rayleigh_ratio}")
        if not waist > 0:
            raise ValueError(f"beam waist must be positive, got {waist}")

        self.__rayleigh_ratio: float = rayleigh_ratio
        self.__waist: float = waist
        self.__include_diffraction: bool = include_diffraction
        self.__medium_width: Optional[float] = medium_width
        self.__dz: Optional[float] = dz

    def propagation_config(self, settings: ExperimentSettings) -> PropagationConfig:
        """
        Propagation parameters of a run, with k = rayleigh_ratio * L / w^2.

        Raises:
            BrokenPhaseError: If the medium is outside the unbroken PT phase
        """
        length = derive(settings.medium).length
        return PropagationConfig(
            k=self.__rayleigh_ratio * length / self.__waist**2,
            medium=settings.medium,
            dz=self.__dz,
            include_diffraction=self.__include_diffraction,
            medium_width=self.__medium_width,
        )

    def grid(self, cfg: PropagationConfig) -> TransverseGrid:
        return grid_for_beam(self.__waist, cfg.k, derive(cfg.medium).length)

    def input_profile(self, grid: TransverseGrid) -> np.ndarray:
        """
        Centred Gaussian of unit discrete norm shared by both beams.
        """
        profile = gaussian_profile(grid.x, 0.0, self.__waist)
        return profile / math.sqrt(discrete_norm(profile, grid))

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
        cfg = self.propagation_config(settings)
        grid = self.grid(cfg)
        length = derive(settings.medium).length
        state = initial_state() if initial is None else initial

        # amps[n, m, x]: position n, circular polarization m, transverse sample x
        amps: np.ndarray = state.amps[:, :, None] * self.input_profile(grid)[None, None, :]
        for stage in stage_order(settings):
            if stage is Stage.BEAM_SPLITTER:
                bs = beam_splitter_for_angle(settings.bs_angle, settings.bs_phases)
                amps = np.einsum("ij,jmx->imx", bs.mat, amps)
            elif stage is Stage.MEDIUM:
                amps = self.__propagate_columns(amps, grid, cfg, length)
            else:
                amps = amps[::-1]

        amps = np.einsum("km,nmx->nkx", hwp_rotation(settings.hwp_angle).mat, amps)
        linear = np.einsum("jm,nmx->njx", CIRCULAR_TO_LINEAR, amps)
        w = np.sum(np.abs(linear) ** 2, axis=-1) * grid.dx
        return DetectionRecord(
            w_uh=float(w[0, 0]),
            w_uv=float(w[0, 1]),
            w_lh=float(w[1, 0]),
            w_lv=float(w[1, 1]),
        )

    @staticmethod
    def __propagate_columns(
        amps: np.ndarray, grid: TransverseGrid, cfg: PropagationConfig, length: float
    ) -> np.ndarray:
        propagated = np.empty_like(amps)
        for m in range(amps.shape[1]):
            out = split_step_propagate(TransverseField(grid, amps[0, m], amps[1, m]), cfg, length)
            propagated[0, m] = out.e_u
            propagated[1, m] = out.e_l
        return propagated
