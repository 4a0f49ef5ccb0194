import logging
import os

from dotenv import load_dotenv

load_dotenv()

__logger = logging.getLogger(__name__)

LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING").upper()

BENCH_MODEL = os.getenv("PTBENCH_BENCH_MODEL", "matrix").lower()


def __read_threads() -> int:
    default: int = max(os.cpu_count() or 1, 1)
    raw = os.getenv("PTBENCH_THREADS")
    if raw is None or raw.strip() == "":
        return default
    try:
        return max(int(raw), 1)
    except ValueError:
        __logger.warning(f"Ignoring invalid PTBENCH_THREADS={raw!r}, using {default}")
        return default


PTBENCH_THREADS: int = __read_threads()


def summary() -> str:
    """
    Render the loaded configuration as a framed summary.

    Returns:
        The multi-line summary text
    """
    summary_lines = [
        "=" * 50,
        "Configuration Summary".center(50),
        "=" * 50,
        f"{'LOG_LEVEL'.ljust(20)}: {LOG_LEVEL}",
        "-" * 50,
        f"{'PTBENCH_THREADS'.ljust(20)}: {PTBENCH_THREADS}",
        f"{'BENCH_MODEL'.ljust(20)}: {BENCH_MODEL}",
        "=" * 50,
    ]
    return "\n".join(summary_lines)
