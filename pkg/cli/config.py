"""
Run configuration of the command-line front end.
"""

import json
import math
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from core import DEFAULT_BS_PHASES, PRESETS, ExperimentSettings, MediumPosition, PTMediumParams
from core import config

# Flags holding angles; --deg converts these to radians
ANGLE_FIELDS = ("phi1", "phi2", "bs_angle", "hwp_angle", "setting_a", "setting_b")
ANGLE_RANGE_FIELDS = ("beta_range", "phi2_range")


class Command(str, Enum):
    BENCH = "bench"
    SCAN = "scan"
    CHSH = "chsh"
    PARAXIAL = "paraxial"
    PRESET = "preset"


class ScanRange(BaseModel):
    """
    steps equally spaced values from start to stop, both included.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    start: float = Field(allow_inf_nan=False)
    stop: float = Field(allow_inf_nan=False)
    steps: int = Field(ge=1)

    def values(self) -> List[float]:
        if self.steps == 1:
            return [self.start]
        return [float(v) for v in np.linspace(self.start, self.stop, self.steps)]


class RunConfig(BaseModel):
    """
    Everything one CLI invocation needs. Angles are stored in radians.
    """

    model_config = ConfigDict(extra="forbid")

    command: Command = Command.BENCH

    # medium
    preset: Optional[str] = None
    eta1: float = Field(default=0.0, ge=0, allow_inf_nan=False)
    phi1: float = Field(default=0.0, allow_inf_nan=False)
    eta2: float = Field(default=1.0, ge=0, allow_inf_nan=False)
    phi2: float = Field(default=0.0, allow_inf_nan=False)

    # bench settings
    bs_angle: float = Field(default=math.pi / 4, allow_inf_nan=False)
    r: Optional[float] = Field(default=None, ge=0, le=1)
    hwp_angle: float = Field(default=math.pi / 8, allow_inf_nan=False)
    bs_phases: Tuple[float, float, float, float] = DEFAULT_BS_PHASES
    medium_position: MediumPosition = MediumPosition.AFTER_BS
    mirror_swap: bool = True
    bench_model: str = Field(default_factory=lambda: config.BENCH_MODEL)

    # scan and search
    sin_alpha_range: ScanRange = ScanRange(start=0.0, stop=0.9, steps=10)
    beta_range: ScanRange = ScanRange(start=0.0, stop=math.pi / 2, steps=9)
    phi2_range: ScanRange = ScanRange(start=0.0, stop=0.0, steps=1)
    setting_a: float = Field(default=math.pi / 2, allow_inf_nan=False)
    setting_b: float = Field(default=0.0, allow_inf_nan=False)
    grid_resolution: int = Field(default=50, ge=1)

    # paraxial validation
    rayleigh_ratios: List[float] = [1.0, 10.0, 100.0, 1000.0, 10000.0]
    include_diffraction: bool = True
    medium_width: Optional[float] = Field(default=None, gt=0)
    snapshot: Optional[str] = None

    # run
    output: Optional[str] = None
    threads: Optional[int] = Field(default=None, ge=1)
    progress: bool = False

    @field_validator("preset")
    @classmethod
    def _known_preset(cls, value: Optional[str]) -> Optional[str]:
        if value is not None and value not in PRESETS:
            raise ValueError(f"unknown preset {value!r}, expected one of {sorted(PRESETS)}")
        return value

    @field_validator("rayleigh_ratios")
    @classmethod
    def _positive_ratios(cls, value: List[float]) -> List[float]:
        if not value:
            raise ValueError("at least one rayleigh ratio is required")
        if not all(math.isfinite(v) and v > 0 for v in value):
            raise ValueError(f"rayleigh ratios must be finite and positive, got {value}")
        return value

    @field_validator("bs_phases")
    @classmethod
    def _finite_phases(cls, value: Tuple[float, float, float, float]) -> Tuple[float, float, float, float]:
        if not all(math.isfinite(v) for v in value):
            raise ValueError(f"beam-splitter phases must be finite, got {value}")
        return value

    @model_validator(mode="after")
    def _scan_inside_unit_interval(self) -> "RunConfig":
        if self.command is Command.SCAN and any(not -1 < s < 1 for s in self.sin_alpha_range.values()):
            raise ValueError("sin_alpha scan values must lie in (-1, 1)")
        return self

    def medium(self) -> PTMediumParams:
        if self.preset is not None:
            return PRESETS[self.preset]
        return PTMediumParams(eta1=self.eta1, phi1=self.phi1, eta2=self.eta2, phi2=self.phi2)

    def settings(self) -> ExperimentSettings:
        bs_angle = self.bs_angle if self.r is None else math.asin(self.r)
        return ExperimentSettings(
            bs_angle=bs_angle,
            hwp_angle=self.hwp_angle,
            medium=self.medium(),
            bs_phases=self.bs_phases,
            medium_position=self.medium_position,
            mirror_swap=self.mirror_swap,
        )


def degrees_to_radians(overrides: Mapping[str, Any]) -> Dict[str, Any]:
    """
    Convert the angle entries of a flag mapping from degrees to radians.
    """
    converted: Dict[str, Any] = dict(overrides)
    for name in ANGLE_FIELDS:
        if converted.get(name) is not None:
            converted[name] = math.radians(converted[name])
    for name in ANGLE_RANGE_FIELDS:
        if converted.get(name) is not None:
            scan = dict(converted[name])
            scan["start"], scan["stop"] = math.radians(scan["start"]), math.radians(scan["stop"])
            converted[name] = scan
    return converted


def load_config(path: Optional[Path], overrides: Mapping[str, Any], deg: bool = False) -> RunConfig:
    """
    Build the run configuration from an optional JSON file and flag values.
    Flags override file values; flags left unset (None) are ignored.

    Args:
        path: JSON file with RunConfig fields, or None
        overrides: Flag values by field name
        deg: Angle flags are given in degrees

    Returns:
        The validated run configuration

    Raises:
        OSError: If the file cannot be read
        json.JSONDecodeError: If the file is not valid JSON
        pydantic.ValidationError: If a value is invalid
    """
    data: Dict[str, Any] = {}
    if path is not None:
        with open(path, encoding="utf-8") as handle:
            loaded = json.load(handle)
        if not isinstance(loaded, dict):
            raise ValueError(f"config file {path} must contain a JSON object")
        data.update(loaded)

    flags = {name: value for name, value in overrides.items() if value is not None}
    data.update(degrees_to_radians(flags) if deg else flags)
    return RunConfig.model_validate(data)
