"""
Linear optical elements of the bench acting on the polarization x position space:
beam splitter, mirror swap, half-wave-plate rotation and polarization-resolved detection.
"""

import math
from typing import Sequence, Tuple

import numpy as np

from core import DetectionRecord, PolarizationOperator, PolPosState, PositionOperator
from core.bench import DEFAULT_BS_PHASES

LOSSLESS_PHASE_TOLERANCE = 1e-12

# Columns map circular amplitudes (c+, c-) to linear amplitudes (a_h, a_v),
# with sigma+- = (e_h +- i e_v)/sqrt(2)
CIRCULAR_TO_LINEAR: np.ndarray = np.array([[1, 1], [1j, -1j]], dtype=complex) / math.sqrt(2)
LINEAR_TO_CIRCULAR: np.ndarray = np.conj(CIRCULAR_TO_LINEAR).T

PAULI_X: np.ndarray = np.array([[0, 1], [1, 0]], dtype=complex)


def initial_state() -> PolPosState:
    """
    The inseparable input field E_u sigma+ + E_l sigma-.

    Returns:
        The state with unit amplitude on (u, +) and (l, -)
    """
    return PolPosState(np.eye(2, dtype=complex))


def apply_position_op(state: PolPosState, op: PositionOperator) -> PolPosState:
    return PolPosState(op.mat @ state.amps)


def apply_polarization_op(state: PolPosState, op: PolarizationOperator) -> PolPosState:
    # amps'[n][m'] = sum_m op[m'][m] * amps[n][m]
    return PolPosState(state.amps @ op.mat.T)


def satisfies_lossless_phases(phases: Sequence[float]) -> bool:
    """
    Check the lossless beam-splitter condition theta2 - theta1 + theta3 - theta4 = pi (mod 2pi).

    Args:
        phases: The four phases theta1..theta4 in radians

    Returns:
        True if the condition holds within LOSSLESS_PHASE_TOLERANCE
    """
    theta1, theta2, theta3, theta4 = phases
    residual = math.remainder(theta2 - theta1 + theta3 - theta4 - math.pi, 2 * math.pi)
    return abs(residual) <= LOSSLESS_PHASE_TOLERANCE


def _beam_splitter_matrix(r: float, t: float, phases: Sequence[float]) -> np.ndarray:
    theta1, theta2, theta3, theta4 = phases
    return np.array(
        [
            [r * np.exp(1j * theta1), t * np.exp(1j * theta2)],
            [t * np.exp(1j * theta3), r * np.exp(1j * theta4)],
        ],
        dtype=complex,
    )


def beam_splitter(
    r: float,
    phases: Sequence[float] = DEFAULT_BS_PHASES,
    lossless: bool = True,
) -> PositionOperator:
    """
    Beam splitter acting on the position basis, with t = sqrt(1 - r^2).

    Args:
        r: Reflection coefficient in [0, 1]
        phases: The four phases theta1..theta4
        lossless: Demand a unitary element and check the phase constraint

    Returns:
        The operator [[r e^{i theta1}, t e^{i theta2}], [t e^{i theta3}, r e^{i theta4}]]

    Raises:
        ValueError: If r is outside [0, 1], or lossless is demanded and the phases violate
            theta2 - theta1 + theta3 - theta4 = pi (mod 2pi)
    """
    if len(phases) != 4:
        raise ValueError(f"beam splitter needs four phases, got {len(phases)}")
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"reflection coefficient must lie in [0, 1], got {r}")
    if lossless and not satisfies_lossless_phases(phases):
        raise ValueError(f"beam splitter phases {tuple(phases)} violate the lossless constraint")
    t = math.sqrt(1.0 - r * r)
    return PositionOperator(_beam_splitter_matrix(r, t, phases), lossless=lossless)


def beam_splitter_for_angle(bs_angle: float, phases: Sequence[float] = DEFAULT_BS_PHASES) -> PositionOperator:
    """
    Beam splitter of the bench setting angle, r = sin(bs_angle) and t = cos(bs_angle).
    Negative r or t are allowed here; they keep the element unitary.

    Raises:
        ValueError: If the phases violate the lossless constraint
    """
    if not satisfies_lossless_phases(phases):
        raise ValueError(f"beam splitter phases {tuple(phases)} violate the lossless constraint")
    return PositionOperator(_beam_splitter_matrix(math.sin(bs_angle), math.cos(bs_angle), phases), lossless=True)


def hwp_rotation(beta: float) -> PolarizationOperator:
    """
    Polarization rotation e_h -> cos(beta) e_h - sin(beta) e_v, e_v -> sin(beta) e_h + cos(beta) e_v,
    which is diagonal in the circular basis.

    Args:
        beta: Rotation angle in radians

    Returns:
        diag(e^{i beta}, e^{-i beta})
    """
    return PolarizationOperator(np.diag([np.exp(1j * beta), np.exp(-1j * beta)]))


def mirror_swap() -> PositionOperator:
    """
    The mirror pair interchanging the upper and lower beams; also the parity operator
    in the position basis.

    Returns:
        Pauli sigma_x
    """
    return PositionOperator(PAULI_X, lossless=True)


def circular_to_linear(circular: np.ndarray) -> np.ndarray:
    """
    Convert amplitudes (c+, c-) along the last axis to (a_h, a_v).
    """
    return np.asarray(circular, dtype=complex) @ CIRCULAR_TO_LINEAR.T


def linear_to_circular(linear: np.ndarray) -> np.ndarray:
    """
    Convert amplitudes (a_h, a_v) along the last axis to (c+, c-).
    """
    return np.asarray(linear, dtype=complex) @ LINEAR_TO_CIRCULAR.T


def pbs_intensities(state: PolPosState) -> DetectionRecord:
    """
    Split each beam into h and v components and record the four port intensities.

    Args:
        state: The state arriving at the polarizing beam splitters

    Returns:
        The detection record W_nj = |a_{n,j}|^2
    """
    w: np.ndarray = np.abs(circular_to_linear(state.amps)) ** 2
    return DetectionRecord(
        w_uh=float(w[0, 0]),
        w_uv=float(w[0, 1]),
        w_lh=float(w[1, 0]),
        w_lv=float(w[1, 1]),
    )


def amplitude_schmidt(state: PolPosState) -> Tuple[float, float]:
    """
    Schmidt coefficients of the amplitude tensor; two non-zero values mean the
    polarization and position degrees of freedom are inseparable.
    """
    values = np.linalg.svd(state.amps, compute_uv=False)
    return float(values[0]), float(values[1])
