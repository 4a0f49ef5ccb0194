"""
Paraxial package of the PT-symmetric optical bench.
Contains the transverse beam profiles, the split-step solver of the coupled paraxial
wave equations, the paraxial bench model and the validation of the diffraction-free model.
"""

from paraxial.bench import ParaxialBench, grid_for_beam
from paraxial.profiles import aggregate_channels, beam_width, gaussian_profiles, overlap
from paraxial.snapshot import write_field_snapshot
from paraxial.solver import split_step_propagate
from paraxial.validation import DiscrepancyReport, propagated_field, validate_matrix_model

__all__ = [
    "DiscrepancyReport",
    "ParaxialBench",
    "aggregate_channels",
    "beam_width",
    "gaussian_profiles",
    "grid_for_beam",
    "overlap",
    "propagated_field",
    "split_step_propagate",
    "validate_matrix_model",
    "write_field_snapshot",
]
