from dataclasses import dataclass
from typing import Optional

import numpy as np

from core.medium import PTMediumParams

MIN_GRID_POINTS = 64


@dataclass(frozen=True)
class TransverseGrid:
    """
    Periodic 1-D transverse grid centred on zero, x_j = -half_width + j*dx.
    The parity map x -> -x sends grid point j to point (n - j) mod n.
    """

    n: int  # number of samples, a power of two
    half_width: float  # domain is [-half_width, +half_width)

    def __post_init__(self) -> None:
        if self.n < MIN_GRID_POINTS or self.n & (self.n - 1) != 0:
            raise ValueError(f"grid size must be a power of two >= {MIN_GRID_POINTS}, got {self.n}")
        if not self.half_width > 0:
            raise ValueError(f"half_width must be positive, got {self.half_width}")

    @property
    def dx(self) -> float:
        return 2 * self.half_width / self.n

    @property
    def x(self) -> np.ndarray:
        return -self.half_width + self.dx * np.arange(self.n)

    @property
    def kx(self) -> np.ndarray:
        """Angular spatial frequencies in FFT order."""
        return 2 * np.pi * np.fft.fftfreq(self.n, d=self.dx)

    @property
    def parity_indices(self) -> np.ndarray:
        return (-np.arange(self.n)) % self.n


@dataclass(frozen=True, eq=False)
class TransverseField:
    """
    Sampled complex envelopes of the upper and lower beam on a transverse grid.
    """

    grid: TransverseGrid
    e_u: np.ndarray
    e_l: np.ndarray

    def __post_init__(self) -> None:
        for name in ("e_u", "e_l"):
            array = np.array(getattr(self, name), dtype=complex)
            if array.shape != (self.grid.n,):
                raise ValueError(f"TransverseField.{name} must have shape ({self.grid.n},), got {array.shape}")
            if not np.all(np.isfinite(array)):
                raise ValueError(f"TransverseField.{name} has non-finite entries")
            array.setflags(write=False)
            object.__setattr__(self, name, array)

    def swapped(self) -> "TransverseField":
        return TransverseField(self.grid, self.e_l, self.e_u)


@dataclass(frozen=True)
class PropagationConfig:
    """
    Parameters of the split-step propagation through the medium.
    """

    k: float  # wave number, inverse length
    medium: PTMediumParams
    dz: Optional[float] = None  # step length; None means L/1000 of the medium, see resolve_step
    include_diffraction: bool = True
    medium_width: Optional[float] = None  # transverse width of the coupling region; None means uniform

    def __post_init__(self) -> None:
        if not self.k > 0:
            raise ValueError(f"wave number must be positive, got {self.k}")
        if self.dz is not None and not self.dz > 0:
            raise ValueError(f"step length must be positive, got {self.dz}")
        if self.medium_width is not None and not self.medium_width > 0:
            raise ValueError(f"medium width must be positive, got {self.medium_width}")
