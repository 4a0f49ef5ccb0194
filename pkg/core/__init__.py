"""
Core package of the PT-symmetric optical bench.
Contains the data models, error types and abstract base classes shared by the optics,
bench, paraxial and cli packages.
"""

from core.bench import (
    DEFAULT_BS_PHASES,
    Bench,
    DetectionRecord,
    ExperimentSettings,
    MediumPosition,
    ProbabilityTable,
)
from core.errors import BenchError, BrokenPhaseError, DomainTooSmallError, ZeroIntensityError
from core.field import PropagationConfig, TransverseField, TransverseGrid
from core.medium import PRESETS, DerivedMedium, PTMediumParams
from core.state import PolarizationOperator, PolPosState, PositionOperator

__all__ = [
    "DEFAULT_BS_PHASES",
    "PRESETS",
    "Bench",
    "BenchError",
    "BrokenPhaseError",
    "DerivedMedium",
    "DetectionRecord",
    "DomainTooSmallError",
    "ExperimentSettings",
    "MediumPosition",
    "PolarizationOperator",
    "PolPosState",
    "PositionOperator",
    "ProbabilityTable",
    "PropagationConfig",
    "PTMediumParams",
    "TransverseField",
    "TransverseGrid",
    "ZeroIntensityError",
]
