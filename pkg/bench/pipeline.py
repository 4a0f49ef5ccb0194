from enum import Enum
from typing import List

from core import ExperimentSettings, MediumPosition


class Stage(Enum):
    """
    Elements acting on the position basis, in the order the beam meets them.
    """

    BEAM_SPLITTER = "beam_splitter"
    MEDIUM = "medium"
    MIRROR_SWAP = "mirror_swap"


def stage_order(settings: ExperimentSettings) -> List[Stage]:
    """
    Position-space stages of a run. The mirror swap always follows the medium;
    the half-wave plate and the detection come after all of them.

    Args:
        settings: The run settings

    Returns:
        The ordered list of stages
    """
    medium_stages: List[Stage] = [Stage.MEDIUM]
    if settings.mirror_swap:
        medium_stages.append(Stage.MIRROR_SWAP)

    if settings.medium_position is MediumPosition.BEFORE_BS:
        return medium_stages + [Stage.BEAM_SPLITTER]
    return [Stage.BEAM_SPLITTER] + medium_stages
