from dataclasses import dataclass

import numpy as np

# Row labels (position) and column labels (circular polarization) of PolPosState.amps
POSITIONS = ("u", "l")
POLARIZATIONS = ("+", "-")

UNITARITY_TOLERANCE = 1e-12


def _as_frozen_matrix(mat: np.ndarray, name: str) -> np.ndarray:
    array = np.array(mat, dtype=complex)
    if array.shape != (2, 2):
        raise ValueError(f"{name} must be a 2x2 matrix, got shape {array.shape}")
    if not np.all(np.isfinite(array)):
        raise ValueError(f"{name} has non-finite entries")
    array.setflags(write=False)
    return array


def is_unitary(mat: np.ndarray, tolerance: float = UNITARITY_TOLERANCE) -> bool:
    """
    Check whether a 2x2 matrix satisfies mat^dagger mat = identity entrywise.

    Args:
        mat: The matrix to check
        tolerance: Maximum absolute deviation allowed per entry

    Returns:
        True if the matrix is unitary within the tolerance, False otherwise
    """
    deviation = np.conj(mat).T @ mat - np.eye(2)
    return bool(np.max(np.abs(deviation)) <= tolerance)


@dataclass(frozen=True, eq=False)
class PolPosState:
    """
    Field amplitudes of a beam pair on the polarization x position product space.
    Rows index the position basis {u, l}, columns the circular polarization basis {+, -}.
    """

    amps: np.ndarray  # 2x2 complex amplitude tensor

    def __post_init__(self) -> None:
        object.__setattr__(self, "amps", _as_frozen_matrix(self.amps, "PolPosState.amps"))

    @property
    def total_intensity(self) -> float:
        return float(np.sum(np.abs(self.amps) ** 2))

    def scaled(self, factor: complex) -> "PolPosState":
        return PolPosState(self.amps * factor)


@dataclass(frozen=True, eq=False)
class PositionOperator:
    """
    Linear element acting on the position (row) index only, e.g. a beam splitter,
    the mirror swap or the PT-symmetric medium.
    """

    mat: np.ndarray  # 2x2 complex matrix
    lossless: bool = False  # if set, mat must be unitary

    def __post_init__(self) -> None:
        object.__setattr__(self, "mat", _as_frozen_matrix(self.mat, "PositionOperator.mat"))
        if self.lossless and not is_unitary(self.mat):
            raise ValueError("PositionOperator flagged lossless is not unitary")


@dataclass(frozen=True, eq=False)
class PolarizationOperator:
    """
    Linear element acting on the polarization (column) index only, expressed in the
    circular basis {sigma+, sigma-}.
    """

    mat: np.ndarray  # 2x2 complex matrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "mat", _as_frozen_matrix(self.mat, "PolarizationOperator.mat"))
