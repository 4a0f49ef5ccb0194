import asyncio
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

import numpy as np
from tqdm import tqdm

from core import config

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(
    func: Callable[[T], R],
    items: Sequence[T],
    max_workers: Optional[int] = None,
    progress: bool = False,
) -> List[R]:
    """
    Evaluate func on every item in a bounded thread pool.
    Results are returned in input order, independent of completion order.

    Args:
        func: A pure function of one item
        items: The items to evaluate
        max_workers: Worker cap; PTBENCH_THREADS if None
        progress: Show a tqdm progress bar on stderr

    Returns:
        The list [func(item) for item in items]
    """
    workers: int = max(max_workers or config.PTBENCH_THREADS, 1)
    if workers == 1 or len(items) <= 1:
        return [func(item) for item in tqdm(items, disable=not progress, leave=False)]

    async def evaluate_all_async() -> List[R]:
        loop = asyncio.get_running_loop()
        with ThreadPoolExecutor(max_workers=workers) as executor, tqdm(
            total=len(items), disable=not progress, leave=False
        ) as bar:

            async def _evaluate_one(item: T) -> R:
                result: R = await loop.run_in_executor(executor, func, item)
                bar.update(1)
                return result

            tasks = [_evaluate_one(item) for item in items]
            return list(await asyncio.gather(*tasks))

    return asyncio.run(evaluate_all_async())


def wrap_angle(angle: float, period: float = math.pi) -> float:
    """
    Map an angle into [0, period).
    """
    wrapped = math.fmod(angle, period)
    if wrapped < 0:
        wrapped += period
    return 0.0 if wrapped >= period else wrapped


def angle_grid(resolution: int, period: float = math.pi) -> np.ndarray:
    """
    Equally spaced angles k*period/resolution for k = 0..resolution-1.

    Raises:
        ValueError: If resolution is smaller than 1
    """
    if resolution < 1:
        raise ValueError(f"grid resolution must be at least 1, got {resolution}")
    return period * np.arange(resolution) / resolution
