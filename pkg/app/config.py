"""
Centralized configuration for the command-line front end.

This module provides the RunConfig dataclass and configuration loading
from environment variables and CLI arguments.
"""

import argparse
import os
from dataclasses import dataclass
from typing import Optional, Tuple

from dotenv import load_dotenv

from combinum import DEFAULT_TABLE_CAP

DEFAULT_CAP = 12
DEFAULT_THREADS = 1
COMMANDS = ("table", "verify", "asym", "enumerate")
FORMATS = ("csv", "json")
SOURCES = ("closedform", "oracle", "series")


class UsageError(ValueError):
    """Raised for invalid command-line input; the CLI exits with code 2."""


@dataclass
class RunConfig:
    """
    One CLI invocation.

    All values can come from environment variables or CLI arguments, with
    CLI arguments taking precedence.
    """
    command: str  # table | verify | asym | enumerate
    stat: Optional[str]  # statistic id, or None for "all" where allowed
    n_values: Tuple[int, ...]  # requested n, in order
    k_values: Optional[Tuple[int, ...]]  # requested k, or None for every valid k
    param_values: Optional[Tuple[int, ...]]  # r or h filter, or None for every valid value
    output_format: str  # csv | json
    source: str  # closedform | oracle | series (table only)
    cap: int  # exhaustive enumeration bound on n
    table_cap: int  # largest Stirling/Bell table row
    threads: int  # worker count
    log_level: str  # logging level name


def parse_range(text: str, name: str) -> Tuple[int, ...]:
    """
    Parse "a..b", "a,b,c" or "a" into a nonempty tuple of integers.

    Args:
        text: Range text from the command line
        name: Flag name used in error messages

    Returns:
        The integers in the given order

    Raises:
        UsageError: On malformed or empty ranges
    """
    text = text.strip()
    try:
        if ".." in text:
            low_text, high_text = text.split("..", 1)
            values = tuple(range(int(low_text), int(high_text) + 1))
        else:
            values = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise UsageError(f"--{name}: cannot parse range {text!r}") from None
    if not values:
        raise UsageError(f"--{name}: range {text!r} is empty")
    return values


def load_config_from_env_and_args(args: Optional[argparse.Namespace] = None) -> RunConfig:
    """
    Load configuration from environment variables and CLI arguments.

    Environment variables are loaded first (a .env file is honoured), then
    CLI arguments override them.

    Args:
        args: Parsed CLI arguments

    Returns:
        RunConfig

    Raises:
        UsageError: On inconsistent or invalid values
    """
    load_dotenv()

    def get_value(arg_name: str, env_name: str, default: Optional[str]) -> Optional[str]:
        """Get value from args (if provided) or env, with default fallback."""
        if args is not None and getattr(args, arg_name, None) is not None:
            return getattr(args, arg_name)
        return os.getenv(env_name, default)

    def get_int(arg_name: str, env_name: str, default: int) -> int:
        """Get int value from args or env."""
        if args is not None and getattr(args, arg_name, None) is not None:
            return int(getattr(args, arg_name))
        env_val = os.getenv(env_name)
        if env_val:
            try:
                return int(env_val)
            except ValueError:
                raise UsageError(f"{env_name}={env_val!r} is not an integer") from None
        return default

    command = getattr(args, "command", None) if args is not None else None
    if command not in COMMANDS:
        raise UsageError(f"unknown command {command!r}")

    output_format = get_value("format", "RECORDS_FORMAT", "csv")
    if output_format not in FORMATS:
        raise UsageError(f"--format must be one of {', '.join(FORMATS)}")
    cap = get_int("cap", "RECORDS_CAP", DEFAULT_CAP)
    table_cap = get_int("table_cap", "RECORDS_TABLE_CAP", DEFAULT_TABLE_CAP)
    if table_cap < 0:
        raise UsageError("--table-cap must be non-negative")
    threads = get_int("threads", "RECORDS_THREADS", DEFAULT_THREADS)
    if threads < 1:
        raise UsageError("--threads must be at least 1")
    log_level = get_value("log_level", "LOG_LEVEL", "WARNING")

    n_text = getattr(args, "n", None)
    max_n = getattr(args, "max_n", None)
    if command == "verify":
        if max_n is not None and n_text is not None:
            raise UsageError("give either --max-n or --n, not both")
        if max_n is not None:
            n_values = parse_range(f"1..{max_n}", "max-n")
        elif n_text is not None:
            n_values = parse_range(n_text, "n")
        else:
            n_values = parse_range(f"1..{min(cap, 8)}", "max-n")
    else:
        if n_text is None:
            raise UsageError("--n is required")
        n_values = parse_range(str(n_text), "n")
    if any(n < 0 for n in n_values):
        raise UsageError("--n values must be non-negative")

    k_text = getattr(args, "k", None)
    param_text = getattr(args, "param", None)
    k_values = parse_range(str(k_text), "k") if k_text is not None else None
    param_values = parse_range(param_text, "param") if param_text is not None else None

    source = getattr(args, "source", None) or "closedform"
    if source not in SOURCES:
        raise UsageError(f"--source must be one of {', '.join(SOURCES)}")

    return RunConfig(
        command=command,
        stat=getattr(args, "stat", None),
        n_values=n_values,
        k_values=k_values,
        param_values=param_values,
        output_format=output_format,
        source=source,
        cap=cap,
        table_cap=table_cap,
        threads=threads,
        log_level=log_level.upper(),
    )
