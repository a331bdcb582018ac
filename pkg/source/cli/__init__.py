"""
Batch command line: subcommands rip, recover, corsing, cover, sweep and constants.
"""

from source.cli.commands import (
    EXIT_NUMERICAL,
    EXIT_OK,
    EXIT_USAGE,
    CommandResult,
    cmd_constants,
    cmd_corsing,
    cmd_cover,
    cmd_recover,
    cmd_rip,
)
from source.cli.main import build_parser, main, run
from source.cli.sweeps import SWEEP_COLUMNS, run_sweep

__all__ = [
    "EXIT_NUMERICAL",
    "EXIT_OK",
    "EXIT_USAGE",
    "SWEEP_COLUMNS",
    "CommandResult",
    "build_parser",
    "cmd_constants",
    "cmd_corsing",
    "cmd_cover",
    "cmd_recover",
    "cmd_rip",
    "main",
    "run",
    "run_sweep",
]
