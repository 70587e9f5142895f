"""Centralized configuration and environment variable loading for stabledaha.

This module ensures consistent environment variable loading across all contexts:
- Local runs (with .env and .env.local in the project root)
- Testing environments

Environment variables are loaded once at import time, with .env.local
overriding values from .env.

IMPORTANT: This is the ONLY place where default values are defined.
Other modules reference config.VARIABLE_NAME; CLI flags override these.
"""

import logging
import os

from dotenv import find_dotenv, load_dotenv

# Configure module logger
logger = logging.getLogger(__name__)

# find_dotenv() searches up the directory tree, so it works regardless of where
# the Python process is started from
env_file = find_dotenv(".env")
env_local_file = find_dotenv(".env.local")

if env_file:
    logger.debug(f"Loading .env from: {env_file}")
    load_dotenv(env_file)
else:
    logger.debug("No .env file found (using defaults from config.py)")

if env_local_file:
    logger.debug(f"Loading .env.local from: {env_local_file}")
    load_dotenv(env_local_file, override=True)
else:
    logger.debug("No .env.local file found (this is optional)")


def get_env(key: str, default: str | None = None, required: bool = False) -> str:
    """Get environment variable with optional validation.

    Args:
        key: Environment variable name
        default: Default value if not found
        required: If True, raise ValueError when variable is missing

    Returns:
        Environment variable value or default

    Raises:
        ValueError: If required=True and variable is not found
    """
    value = os.getenv(key, default)
    if required and value is None:
        raise ValueError(f"Required environment variable '{key}' is not set")
    return value


def get_env_int(key: str, default: int) -> int:
    """Return an integer environment variable, falling back on malformed input."""
    raw_value = get_env(key, str(default))
    try:
        return int(raw_value.strip())
    except (AttributeError, ValueError):
        logger.warning(f"Ignoring non-integer {key}={raw_value!r}, using {default}")
        return default


# =============================================================================
# Application Configuration
# All defaults are defined here. Override by setting env vars in .env.local
# =============================================================================

LOG_LEVEL = get_env("STABLEDAHA_LOG_LEVEL", "INFO").upper()

# Hard cap on symmetric-function degree; exceeding it is an error, never a truncation
MAX_DEGREE = get_env_int("STABLEDAHA_MAX_DEGREE", 8)

# Default rank bound for verification suites
MAX_RANK = get_env_int("STABLEDAHA_MAX_RANK", 5)

SEED = get_env_int("STABLEDAHA_SEED", 0)
OUTPUT_FORMAT = get_env("STABLEDAHA_OUTPUT_FORMAT", "text").strip().lower()

OUTPUT_FORMATS = ("text", "json", "csv")

# Largest values the suites accept; beyond these the combinatorics explode
RANK_CEILING = 6
DEGREE_CEILING = 10


def get_runtime_config_errors(
    *,
    max_degree: int,
    max_rank: int,
    output_format: str,
) -> list[str]:
    """Return fail-fast configuration errors for the given runtime settings."""
    errors: list[str] = []

    if not 1 <= max_degree <= DEGREE_CEILING:
        errors.append(f"MAX_DEGREE must be between 1 and {DEGREE_CEILING}")
    if not 1 <= max_rank <= RANK_CEILING:
        errors.append(f"MAX_RANK must be between 1 and {RANK_CEILING}")
    if output_format not in OUTPUT_FORMATS:
        errors.append(f"OUTPUT_FORMAT must be one of {', '.join(OUTPUT_FORMATS)}")

    return errors


def validate_runtime_config() -> None:
    """Raise when the active runtime configuration is outside the supported bounds."""
    errors = get_runtime_config_errors(
        max_degree=MAX_DEGREE,
        max_rank=MAX_RANK,
        output_format=OUTPUT_FORMAT,
    )
    if not errors:
        return

    raise RuntimeError("Invalid runtime configuration: " + "; ".join(errors))
