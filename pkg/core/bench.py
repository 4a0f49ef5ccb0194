import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from core.medium import PTMediumParams
from core.state import PolPosState

# theta1..theta4 of the beam-splitter matrix: theta2 = theta3 = 0, theta1 = theta4 = -pi/2
DEFAULT_BS_PHASES: Tuple[float, float, float, float] = (-math.pi / 2, 0.0, 0.0, -math.pi / 2)


class MediumPosition(str, Enum):
    """
    Where the PT-symmetric medium sits relative to the beam splitter.
    """

    AFTER_BS = "after_bs"
    BEFORE_BS = "before_bs"


@dataclass(frozen=True)
class ExperimentSettings:
    """
    The local measurement settings and the medium of one bench run.
    The beam splitter is parametrized by an angle, r = sin(bs_angle), t = cos(bs_angle),
    so r^2 + t^2 = 1 holds by construction.
    """

    bs_angle: float  # radians
    hwp_angle: float  # beta, radians
    medium: PTMediumParams
    bs_phases: Tuple[float, float, float, float] = DEFAULT_BS_PHASES
    medium_position: MediumPosition = MediumPosition.AFTER_BS
    mirror_swap: bool = True

    @property
    def r(self) -> float:
        return math.sin(self.bs_angle)

    @property
    def t(self) -> float:
        return math.cos(self.bs_angle)

    @classmethod
    def from_reflectivity(
        cls,
        r: float,
        hwp_angle: float,
        medium: PTMediumParams,
        medium_position: MediumPosition = MediumPosition.AFTER_BS,
    ) -> "ExperimentSettings":
        """
        Build settings from a reflection coefficient r in [0, 1] (t = sqrt(1 - r^2)).

        Raises:
            ValueError: If r is outside [0, 1]
        """
        if not 0.0 <= r <= 1.0:
            raise ValueError(f"reflection coefficient must lie in [0, 1], got {r}")
        return cls(bs_angle=math.asin(r), hwp_angle=hwp_angle, medium=medium, medium_position=medium_position)

    def with_angles(self, bs_angle: float, hwp_angle: float) -> "ExperimentSettings":
        return ExperimentSettings(
            bs_angle=bs_angle,
            hwp_angle=hwp_angle,
            medium=self.medium,
            bs_phases=self.bs_phases,
            medium_position=self.medium_position,
            mirror_swap=self.mirror_swap,
        )


@dataclass(frozen=True)
class DetectionRecord:
    """
    Intensities recorded at the four output ports of the two polarizing beam splitters.
    """

    w_uh: float
    w_uv: float
    w_lh: float
    w_lv: float

    def __post_init__(self) -> None:
        for name in ("w_uh", "w_uv", "w_lh", "w_lv"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise ValueError(f"DetectionRecord.{name} must be finite and non-negative, got {value}")

    @property
    def total(self) -> float:
        return self.w_uh + self.w_uv + self.w_lh + self.w_lv

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return self.w_uh, self.w_uv, self.w_lh, self.w_lv


@dataclass(frozen=True)
class ProbabilityTable:
    """
    Joint probabilities P(n, j) normalized to the total intensity, with the
    polarization marginals P_A(j) and the position marginals P_B(n).
    """

    p_uh: float
    p_uv: float
    p_lh: float
    p_lv: float
    pa_h: float = field(init=False)
    pa_v: float = field(init=False)
    pb_u: float = field(init=False)
    pb_l: float = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "pa_h", self.p_uh + self.p_lh)
        object.__setattr__(self, "pa_v", self.p_uv + self.p_lv)
        object.__setattr__(self, "pb_u", self.p_uh + self.p_uv)
        object.__setattr__(self, "pb_l", self.p_lh + self.p_lv)

    @property
    def correlation(self) -> float:
        """C = P(u,h) - P(u,v) - P(l,h) + P(l,v)."""
        return self.p_uh - self.p_uv - self.p_lh + self.p_lv

    def joint(self) -> Tuple[float, float, float, float]:
        return self.p_uh, self.p_uv, self.p_lh, self.p_lv


class Bench(ABC):
    """
    Abstract base class for simulations of the optical bench.
    Implementations differ in how the medium step is modelled; all of them run
    initial state -> BS -> medium -> mirror swap -> HWP -> PBS detection
    (or medium first, for MediumPosition.BEFORE_BS).
    """

    @abstractmethod
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
        pass
