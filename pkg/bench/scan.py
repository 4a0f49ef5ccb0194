import itertools
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from bench.analysis import signaling_delta
from core import Bench, MediumPosition, PTMediumParams
from core.util import parallel_map

# Beam-splitter settings (i) r = 1, t = 0 and (ii) r = 0, t = 1
DEFAULT_SETTING_PAIR: Tuple[float, float] = (math.pi / 2, 0.0)


@dataclass(frozen=True)
class ScanRow:
    sin_alpha: float
    beta: float
    phi2: float
    delta: float


def signaling_scan(
    sin_alphas: Sequence[float],
    betas: Sequence[float],
    phi2s: Sequence[float],
    setting_pair: Tuple[float, float] = DEFAULT_SETTING_PAIR,
    eta2: float = 1.0,
    medium_position: MediumPosition = MediumPosition.AFTER_BS,
    bench: Optional[Bench] = None,
    max_workers: Optional[int] = None,
    progress: bool = False,
) -> List[ScanRow]:
    """
    Evaluate signaling_delta on the product grid of sin(alpha), HWP angle and medium phase phi2.
    Rows are ordered lexicographically by (sin_alpha, beta, phi2) index.

    Args:
        sin_alphas: Values of sin(alpha), each in (-1, 1)
        betas: HWP angles in radians
        phi2s: Off-diagonal medium phases in radians
        setting_pair: The two beam-splitter angles compared
        eta2: Off-diagonal coupling strength of every scanned medium
        medium_position: Where the medium sits relative to the BS
        bench: Bench implementation; the closed-form matrix bench if None
        max_workers: Worker cap
        progress: Show a progress bar on stderr

    Returns:
        One ScanRow per grid point
    """
    points = list(itertools.product(sin_alphas, betas, phi2s))

    def evaluate(point: Tuple[float, float, float]) -> ScanRow:
        sin_alpha, beta, phi2 = point
        medium = PTMediumParams.from_sin_alpha(sin_alpha, eta2=eta2, phi2=phi2)
        delta = signaling_delta(medium, beta, setting_pair[0], setting_pair[1], medium_position, bench)
        return ScanRow(sin_alpha=sin_alpha, beta=beta, phi2=phi2, delta=delta)

    return parallel_map(evaluate, points, max_workers, progress)
