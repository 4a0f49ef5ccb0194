"""
Transverse beam profiles, overlaps and channel intensities on a periodic grid.
"""

import math
from typing import Tuple

import numpy as np

from core import DomainTooSmallError, TransverseField, TransverseGrid


def gaussian_profile(x: np.ndarray, center: float, waist: float) -> np.ndarray:
    """
    Unnormalized Gaussian envelope exp(-(x - center)^2 / waist^2).
    """
    return np.exp(-((x - center) ** 2) / waist**2).astype(complex)


def discrete_norm(values: np.ndarray, grid: TransverseGrid) -> float:
    """
    Riemann sum of |values|^2 dx.
    """
    return float(np.sum(np.abs(values) ** 2) * grid.dx)


def gaussian_profiles(x0: float, waist: float, grid: TransverseGrid) -> TransverseField:
    """
    Upper and lower beams displaced to +x0 and -x0, mirror images of each other so that
    the parity x -> -x swaps them. Both are scaled by the same factor, which gives the
    upper beam unit discrete norm.

    Args:
        x0: Transverse displacement of the upper beam
        waist: Beam waist w > 0
        grid: The transverse grid

    Returns:
        The field pair (E_u, E_l)

    Raises:
        ValueError: If the waist is not positive
        DomainTooSmallError: If 3(|x0| + w) >= half_width
    """
    if not waist > 0:
        raise ValueError(f"beam waist must be positive, got {waist}")
    if not 3 * (abs(x0) + waist) < grid.half_width:
        raise DomainTooSmallError(
            f"beams at +-{x0} with waist {waist} need a half width above {3 * (abs(x0) + waist)}, got {grid.half_width}"
        )
    x = grid.x
    e_u = gaussian_profile(x, x0, waist)
    e_l = gaussian_profile(x, -x0, waist)
    scale = 1.0 / math.sqrt(discrete_norm(e_u, grid))
    return TransverseField(grid, e_u * scale, e_l * scale)


def overlap(a: np.ndarray, b: np.ndarray, grid: TransverseGrid) -> complex:
    """
    Discrete overlap integral sum(conj(a) b) dx.

    Raises:
        ValueError: If the arrays differ in length or do not match the grid
    """
    if len(a) != len(b):
        raise ValueError(f"cannot overlap arrays of lengths {len(a)} and {len(b)}")
    if len(a) != grid.n:
        raise ValueError(f"arrays of length {len(a)} do not match a grid of {grid.n} points")
    return complex(np.sum(np.conj(a) * b) * grid.dx)


def aggregate_channels(field: TransverseField) -> Tuple[float, float]:
    """
    Per-channel intensities, the discrete norms of E_u and E_l.
    """
    return discrete_norm(field.e_u, field.grid), discrete_norm(field.e_l, field.grid)


def beam_width(values: np.ndarray, grid: TransverseGrid) -> float:
    """
    Gaussian-equivalent beam radius 2*sqrt(<x^2> - <x>^2) of the intensity |values|^2.
    """
    intensity = np.abs(values) ** 2
    weight = np.sum(intensity)
    mean = np.sum(grid.x * intensity) / weight
    variance = np.sum((grid.x - mean) ** 2 * intensity) / weight
    return float(2 * math.sqrt(variance))
