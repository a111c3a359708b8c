"""
Configuration Settings for the Spectral Problems Toolkit

Centralized configuration for the combinatorial deciders, the numerical
oracle and the command-line surface. Every block is a plain dictionary so
callers can read values without instantiating anything; environment
variables (optionally loaded from a ``.env`` file by the entry point)
override the defaults.

Configuration Categories:
    - APPLICATION_CONFIG: Name, version and logging
    - COMBINATORICS_CONFIG: Horn list soft cap and multiplicity bounds
    - NUMERICS_CONFIG: Tolerances and eigensolver limits
    - ORACLE_CONFIG: Monte-Carlo harness defaults
    - OUTPUT_CONFIG: JSON schema locations and versions
"""
import os
from pathlib import Path


def _env_float(name: str, default: float) -> float:
    raw = os.getenv(name)
    return float(raw) if raw not in (None, "") else default


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    return int(raw) if raw not in (None, "") else default


# Core Application Configuration
APPLICATION_CONFIG = {
    "name": "horn-spectra",
    "app_version": "1.0.0",
    "log_level": os.getenv("HORN_LOG_LEVEL", "WARNING"),
    "log_format": "%(asctime)s %(levelname)s %(name)s: %(message)s",
}

# Exact combinatorics
COMBINATORICS_CONFIG = {
    "horn_soft_cap": 8,  # horn_list above this n logs a warning
    "multiplicity_bound": 2**63 - 1,  # 64-bit counters
    "lr_cache_size": None,  # unbounded memo
}

# Real comparisons and the eigensolver
NUMERICS_CONFIG = {
    "default_tolerance": _env_float("HORN_TOLERANCE", 1e-9),
    "jacobi_relative_threshold": 1e-13,
    "jacobi_max_sweeps": 100,
    "hermitian_check_tolerance": 1e-10,
    "unitary_check_tolerance": 1e-10,
    # weight of the skew part when a normal matrix is diagonalized through
    # the Hermitian combination X + w*Y; irrational so distinct eigenvalues
    # on the circle do not collide
    "unitary_mixing_weight": 0.6180339887498949,
}

# Monte-Carlo oracle
ORACLE_CONFIG = {
    "default_trials": _env_int("HORN_TRIALS", 1000),
    "default_seed": _env_int("HORN_SEED", 0),
    "default_jobs": _env_int("HORN_JOBS", 1),
    "sum_tolerance": 1e-8,
    "product_tolerance": 1e-7,
    "singular_tolerance": 1e-7,
    "max_dimension": 16,
    "max_reported_failures": 20,
}

# Machine-readable output
OUTPUT_CONFIG = {
    "schema_version": 1,
    "schema_directory": Path(__file__).resolve().parent.parent / "schemas",
    "response_schema": "response.v1.schema.json",
    "sample_report_schema": "sample_report.v1.schema.json",
}


def validate_configuration() -> bool:
    """
    Validate all configuration settings for consistency and completeness.

    Returns:
        True if all configurations are valid, False otherwise
    """
    try:
        if NUMERICS_CONFIG["default_tolerance"] < 0:
            return False
        if NUMERICS_CONFIG["jacobi_max_sweeps"] <= 0:
            return False
        if ORACLE_CONFIG["default_trials"] <= 0 or ORACLE_CONFIG["default_jobs"] <= 0:
            return False
        if ORACLE_CONFIG["default_seed"] < 0:
            return False
        if COMBINATORICS_CONFIG["horn_soft_cap"] < 2:
            return False
        return True

    except (KeyError, TypeError):
        return False
