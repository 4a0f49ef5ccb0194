"""
The PT-symmetric optical Hamiltonian without diffraction, its derived quantities and
its propagation operator, both in closed form and as an independent numerical oracle.
"""

import logging
import math
from typing import Tuple

import numpy as np
from scipy.linalg import expm

from core import BrokenPhaseError, DerivedMedium, PositionOperator, PTMediumParams
from optics.elements import PAULI_X

__logger = logging.getLogger(__name__)

PT_SYMMETRY_TOLERANCE = 1e-12


def hamiltonian(params: PTMediumParams) -> np.ndarray:
    """
    The local coupling matrix of the medium.

    Args:
        params: The medium constants

    Returns:
        [[eta1 e^{i phi1}, eta2 e^{i phi2}], [eta2 e^{-i phi2}, eta1 e^{-i phi1}]]
    """
    return np.array(
        [
            [params.eta1 * np.exp(1j * params.phi1), params.eta2 * np.exp(1j * params.phi2)],
            [params.eta2 * np.exp(-1j * params.phi2), params.eta1 * np.exp(-1j * params.phi1)],
        ],
        dtype=complex,
    )


def is_pt_symmetric(h: np.ndarray, tolerance: float = PT_SYMMETRY_TOLERANCE) -> bool:
    """
    Check invariance under parity (the beam swap sigma_x) combined with time reversal
    (complex conjugation): sigma_x conj(H) sigma_x = H.

    Args:
        h: A 2x2 complex matrix
        tolerance: Maximum absolute deviation allowed per entry

    Returns:
        True if H is PT symmetric within the tolerance, False otherwise
    """
    h = np.asarray(h, dtype=complex)
    transformed = PAULI_X @ np.conj(h) @ PAULI_X
    return bool(np.max(np.abs(transformed - h)) <= tolerance)


def derive(params: PTMediumParams) -> DerivedMedium:
    """
    Derive alpha, the medium length L and the global phase.

    Args:
        params: The medium constants

    Returns:
        sin(alpha) = eta1 sin(phi1)/eta2, L = pi/(2 eta2 cos(alpha)), global phase -eta1 cos(phi1) L

    Raises:
        BrokenPhaseError: If eta2 <= eta1*|sin(phi1)|
    """
    if not params.is_unbroken:
        raise BrokenPhaseError(params.eta1, params.phi1, params.eta2)
    alpha: float = math.asin(params.eta1 * math.sin(params.phi1) / params.eta2)
    length: float = math.pi / (2 * params.eta2 * math.cos(alpha))
    return DerivedMedium(
        alpha=alpha,
        length=length,
        global_phase=-params.eta1 * math.cos(params.phi1) * length,
    )


def spectrum(params: PTMediumParams) -> Tuple[complex, complex]:
    """
    Numerical eigenvalues of the coupling matrix, sorted by real then imaginary part.
    Both are real in the unbroken phase and form a complex-conjugate pair (about the
    real shift eta1 cos(phi1)) in the broken phase.
    """
    values = np.linalg.eigvals(hamiltonian(params))
    ordered = sorted((complex(v) for v in values), key=lambda v: (v.real, v.imag))
    return ordered[0], ordered[1]


def spectrum_closed_form(params: PTMediumParams) -> Tuple[float, float]:
    """
    Eigenvalues eta1 cos(phi1) -+ eta2 cos(alpha), valid in the unbroken phase.

    Raises:
        BrokenPhaseError: If the medium is outside the unbroken phase
    """
    derived = derive(params)
    shift = params.eta1 * math.cos(params.phi1)
    split = params.eta2 * math.cos(derived.alpha)
    return shift - split, shift + split


def m_opt_analytic(params: PTMediumParams) -> np.ndarray:
    """
    Closed-form propagation operator of the medium evaluated at its length L.

    Args:
        params: The medium constants

    Returns:
        (e^{i global_phase}/cos(alpha)) [[sin(alpha), -i e^{i phi2}], [-i e^{-i phi2}, -sin(alpha)]]

    Raises:
        BrokenPhaseError: If the medium is outside the unbroken phase
    """
    derived = derive(params)
    sin_alpha = math.sin(derived.alpha)
    prefactor = np.exp(1j * derived.global_phase) / math.cos(derived.alpha)
    return prefactor * np.array(
        [
            [sin_alpha, -1j * np.exp(1j * params.phi2)],
            [-1j * np.exp(-1j * params.phi2), -sin_alpha],
        ],
        dtype=complex,
    )


def m_opt_numeric(params: PTMediumParams, z: float) -> np.ndarray:
    """
    Propagation operator e^{-i H z} by scaling-and-squaring (scipy.linalg.expm).
    Valid in the broken phase too.

    Args:
        params: The medium constants
        z: Propagation distance, z >= 0

    Returns:
        The 2x2 propagation matrix

    Raises:
        ValueError: If z is negative or not finite
    """
    if not (math.isfinite(z) and z >= 0):
        raise ValueError(f"propagation distance must be finite and non-negative, got {z}")
    return expm(-1j * z * hamiltonian(params))


def medium_operator(params: PTMediumParams, numeric: bool = False) -> PositionOperator:
    """
    The medium as a position operator over its full length L.

    Args:
        params: The medium constants
        numeric: Use the numerical oracle instead of the closed form

    Returns:
        The (non-unitary) position operator M_opt(L)

    Raises:
        BrokenPhaseError: If the medium is outside the unbroken phase
    """
    if numeric:
        length = derive(params).length
        __logger.debug(f"Propagating numerically over L={length}")
        return PositionOperator(m_opt_numeric(params, length))
    return PositionOperator(m_opt_analytic(params))
