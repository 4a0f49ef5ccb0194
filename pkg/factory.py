"""
Factory module for creating instances of bench models.
"""

from typing import Dict, Optional

from bench import MatrixBench
from core import config, Bench
from paraxial import ParaxialBench

# k w^2 / L of the paraxial bench model, deep in the weak-diffraction regime
DEFAULT_RAYLEIGH_RATIO = 1e4

__BENCHES: Dict[str, Bench] = {
    "matrix": MatrixBench(),
    "numeric": MatrixBench(numeric_medium=True),
    "paraxial": ParaxialBench(rayleigh_ratio=DEFAULT_RAYLEIGH_RATIO),
}

BENCH_MODELS = tuple(__BENCHES)


def bench(name: Optional[str] = None) -> Bench:
    """
    Get a bench model by name.

    Args:
        name: One of BENCH_MODELS; the configured BENCH_MODEL if None

    Returns:
        The bench model

    Raises:
        ValueError: If the bench model is not supported
    """
    model_name: str = config.BENCH_MODEL if name is None else name.lower()
    model: Optional[Bench] = __BENCHES.get(model_name, None)
    if model is None:
        raise ValueError(f"Unsupported bench model: {model_name}")
    return model
