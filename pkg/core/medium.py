import math
from dataclasses import dataclass
from typing import Dict


@dataclass(frozen=True)
class PTMediumParams:
    """
    The four real constants of the PT-symmetric medium. The coupling strengths share
    one arbitrary inverse-length unit; the phases are in radians.
    The unbroken-phase condition eta2 > eta1*|sin(phi1)| is checked where it is needed
    (see optics.medium.derive), so broken-phase media can still be built and probed.
    """

    eta1: float  # diagonal gain/loss strength, >= 0
    phi1: float  # diagonal phase
    eta2: float  # off-diagonal coupling strength, >= 0
    phi2: float = 0.0  # off-diagonal phase

    def __post_init__(self) -> None:
        for name in ("eta1", "phi1", "eta2", "phi2"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"PTMediumParams.{name} must be finite")
        if self.eta1 < 0:
            raise ValueError(f"eta1 must be non-negative, got {self.eta1}")
        if self.eta2 < 0:
            raise ValueError(f"eta2 must be non-negative, got {self.eta2}")

    @property
    def is_hermitian(self) -> bool:
        return self.eta1 * math.sin(self.phi1) == 0.0

    @property
    def is_unbroken(self) -> bool:
        return self.eta2 > self.eta1 * abs(math.sin(self.phi1))

    @classmethod
    def from_sin_alpha(cls, sin_alpha: float, eta2: float = 1.0, phi2: float = 0.0) -> "PTMediumParams":
        """
        Build a medium with the requested sin(alpha) = eta1*sin(phi1)/eta2.

        Args:
            sin_alpha: Target value, strictly inside (-1, 1)
            eta2: Off-diagonal coupling strength
            phi2: Off-diagonal phase

        Returns:
            A medium with phi1 = pi/2 (3pi/2 for negative targets) and eta1 = |sin_alpha|*eta2

        Raises:
            ValueError: If sin_alpha is outside (-1, 1) or eta2 is not positive
        """
        if not -1.0 < sin_alpha < 1.0:
            raise ValueError(f"sin_alpha must lie in (-1, 1), got {sin_alpha}")
        if eta2 <= 0:
            raise ValueError(f"eta2 must be positive, got {eta2}")
        phi1 = math.pi / 2 if sin_alpha >= 0 else 3 * math.pi / 2
        return cls(eta1=abs(sin_alpha) * eta2, phi1=phi1, eta2=eta2, phi2=phi2)


@dataclass(frozen=True)
class DerivedMedium:
    """
    Quantities derived from PTMediumParams in the unbroken phase.
    """

    alpha: float  # radians, in (-pi/2, pi/2)
    length: float  # medium length L = pi/(2*eta2*cos(alpha))
    global_phase: float  # -eta1*cos(phi1)*L

    @property
    def sin_alpha(self) -> float:
        return math.sin(self.alpha)

    @property
    def intensity_gain(self) -> float:
        """Ratio of output to input intensity for the canonical pipeline state."""
        return (1 + math.sin(self.alpha) ** 2) / math.cos(self.alpha) ** 2


PRESETS: Dict[str, PTMediumParams] = {
    # Effective medium constants of the two-species rubidium scheme
    "fig2": PTMediumParams(eta1=1.91, phi1=0.84 * math.pi, eta2=36.5, phi2=0.0),
}
