"""
Main entry point for the record statistics command line.

This module provides main(), which parses arguments, loads configuration,
configures logging and dispatches to one of the four commands.
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, TextIO

from asym import AsymDomainError
from closedform import FormulaDomainError
from combinum import TABLES, TableCapExceeded
from oracle import OracleCapExceeded
from app.commands import TABLE_STATS, cmd_asym, cmd_enumerate, cmd_table
from app.config import FORMATS, SOURCES, RunConfig, UsageError, load_config_from_env_and_args
from app.verify import cmd_verify

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2

COMMAND_HANDLERS: Dict[str, Callable[[RunConfig, TextIO], int]] = {
    "table": cmd_table,
    "verify": cmd_verify,
    "asym": cmd_asym,
    "enumerate": cmd_enumerate,
}

# Errors that mean "this request cannot be answered as asked".
USAGE_ERRORS = (UsageError, OracleCapExceeded, FormulaDomainError, AsymDomainError, TableCapExceeded)


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        type=str,
        choices=list(FORMATS),
        help="Output format (overrides env)"
    )
    common.add_argument(
        "--cap",
        type=int,
        help="Largest n for exhaustive enumeration (overrides env)"
    )
    common.add_argument(
        "--table-cap",
        type=int,
        help="Largest Stirling/Bell table row (overrides env)"
    )
    common.add_argument(
        "--threads",
        type=int,
        help="Worker threads (overrides env)"
    )
    common.add_argument(
        "--log-level",
        type=str,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Logging level (overrides env)"
    )

    parser = argparse.ArgumentParser(description="Record statistics of set partitions")
    subparsers = parser.add_subparsers(dest="command", required=True)

    table = subparsers.add_parser("table", parents=[common], help="Tabulate one statistic")
    table.add_argument("--stat", type=str, required=True, help=f"One of: {', '.join(TABLE_STATS)}")
    table.add_argument("--n", type=str, required=True, help="n range: a..b, a,b,c or a")
    table.add_argument("--k", type=str, help="k range (default: every valid k)")
    table.add_argument("--param", type=str, help="r or h range (default: every valid value)")
    table.add_argument("--source", type=str, choices=list(SOURCES), help="Which path computes the values")

    verify = subparsers.add_parser("verify", parents=[common], help="Cross-check all three paths")
    verify.add_argument("--max-n", type=int, help="Check n = 1..MAX_N")
    verify.add_argument("--n", type=str, help="n range instead of --max-n")
    verify.add_argument("--stat", type=str, help="Check one formula only, e.g. thm1i")

    asym = subparsers.add_parser("asym", parents=[common], help="Asymptotic estimates against exact values")
    asym.add_argument("--stat", type=str, help="strong-h1, strong-height, weak-h1 or weak-height")
    asym.add_argument("--n", type=str, required=True, help="n values")

    enumerate_ = subparsers.add_parser("enumerate", parents=[common], help="Write RGFs one per line")
    enumerate_.add_argument("--n", type=str, required=True, help="Number of elements")
    enumerate_.add_argument("--k", type=str, help="Number of blocks (default: all)")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Exit code: 0 success, 1 unexpected verification mismatch, 2 usage error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    try:
        config = load_config_from_env_and_args(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    log_level = getattr(logging, config.log_level.upper(), logging.WARNING)
    logging.basicConfig(
        level=log_level,
        format='%(asctime)s [%(levelname)s] %(name)s: %(message)s',
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )
    logger.debug(f"[CLI] {config}")
    TABLES.set_cap(config.table_cap)

    try:
        return COMMAND_HANDLERS[config.command](config, sys.stdout)
    except USAGE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
