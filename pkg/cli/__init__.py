"""
Command-line package of the PT-symmetric optical bench.
Contains the run configuration model, CSV output helpers and the click command group.
"""

from cli.commands import cli
from cli.config import Command, RunConfig, ScanRange, load_config

__all__ = [
    "Command",
    "RunConfig",
    "ScanRange",
    "cli",
    "load_config",
]
