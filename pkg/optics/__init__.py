"""
Optics package of the PT-symmetric optical bench.
Contains the linear optical elements of the bench and the PT-symmetric medium model.
"""

from optics.elements import (
    apply_polarization_op,
    apply_position_op,
    beam_splitter,
    beam_splitter_for_angle,
    circular_to_linear,
    hwp_rotation,
    initial_state,
    linear_to_circular,
    mirror_swap,
    pbs_intensities,
)
from optics.medium import (
    derive,
    hamiltonian,
    is_pt_symmetric,
    m_opt_analytic,
    m_opt_numeric,
    medium_operator,
    spectrum,
    spectrum_closed_form,
)

__all__ = [
    "apply_polarization_op",
    "apply_position_op",
    "beam_splitter",
    "beam_splitter_for_angle",
    "circular_to_linear",
    "derive",
    "hamiltonian",
    "hwp_rotation",
    "initial_state",
    "is_pt_symmetric",
    "linear_to_circular",
    "m_opt_analytic",
    "m_opt_numeric",
    "medium_operator",
    "mirror_swap",
    "pbs_intensities",
    "spectrum",
    "spectrum_closed_form",
]
