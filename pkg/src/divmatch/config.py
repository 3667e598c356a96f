"""
Configuration management for the divmatch package.

This module provides utilities for loading, saving, and validating the
solver configuration (seeds, trial caps, universal-family constants,
oracle guards and logging).
"""

import copy
import os
from typing import Any, Dict, Optional

import yaml

from divmatch.logging import get_logger


logger = get_logger(__name__)

DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(__file__), "../../config/default_config.yaml")

REQUIRED_PARAMS = {
    "solver": ["seed", "max_default_trials", "threads"],
    "matching": ["tie_break_edge_limit"],
    "universal": ["size_constant", "seed", "max_attempts", "verify_budget", "proven_size_limit"],
    "oracle": ["max_edges"],
    "logging": ["level"],
}

INTEGER_PARAMS = {
    section: params for section, params in REQUIRED_PARAMS.items() if section != "logging"
}


def load_config(config_path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load configuration from a YAML file.

    Args:
        config_path: Path to the configuration file. If None, the default
            configuration file is loaded, or the built-in defaults when the
            file is not shipped alongside the package.

    Returns:
        Dictionary containing the configuration.

    Raises:
        FileNotFoundError: If an explicit configuration file does not exist.
        yaml.YAMLError: If the configuration file is not valid YAML.
    """
    if config_path is None:
        if not os.path.exists(DEFAULT_CONFIG_PATH):
            return get_default_config()
        config_path = DEFAULT_CONFIG_PATH

    if not os.path.exists(config_path):
        raise FileNotFoundError(f"Configuration file not found: {config_path}")

    with open(config_path, "r") as f:
        try:
            config = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise yaml.YAMLError(f"Error parsing configuration file: {e}")

    return merge_config(get_default_config(), config or {})


def save_config(config: Dict[str, Any], config_path: str) -> None:
    """
    Save configuration to a YAML file.

    Args:
        config: Dictionary containing the configuration.
        config_path: Path to save the configuration file.

    Raises:
        yaml.YAMLError: If the configuration cannot be serialized to YAML.
    """
    config_dir = os.path.dirname(config_path)
    if config_dir:
        os.makedirs(config_dir, exist_ok=True)

    with open(config_path, "w") as f:
        try:
            yaml.dump(config, f, default_flow_style=False)
        except yaml.YAMLError as e:
            raise yaml.YAMLError(f"Error serializing configuration: {e}")


def merge_config(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    """
    Recursively merge ``override`` into a copy of ``base``.

    Args:
        base: Configuration providing defaults.
        override: Configuration whose values take precedence.

    Returns:
        The merged configuration.
    """
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = merge_config(merged[key], value)
        else:
            merged[key] = value
    return merged


def validate_config(config: Dict[str, Any]) -> bool:
    """
    Validate configuration structure and values.

    Args:
        config: Dictionary containing the configuration.

    Returns:
        True if the configuration is valid, False otherwise.
    """
    for section, params in REQUIRED_PARAMS.items():
        if section not in config:
            logger.warning(f"Missing required configuration section: {section}")
            return False

        section_config = config[section]
        if not isinstance(section_config, dict):
            logger.warning(f"Configuration section '{section}' must be a dictionary")
            return False

        for param in params:
            if param not in section_config:
                logger.warning(f"Missing required {section} parameter: {param}")
                return False

    for section, params in INTEGER_PARAMS.items():
        for param in params:
            value = config[section][param]
            if isinstance(value, bool) or not isinstance(value, int):
                logger.warning(f"{section}.{param} must be an integer, got {value!r}")
                return False

    if config["solver"]["threads"] < 1:
        logger.warning("solver.threads must be at least 1")
        return False

    if config["solver"]["max_default_trials"] < 0:
        logger.warning("solver.max_default_trials must be non-negative")
        return False

    if config["universal"]["size_constant"] < 1:
        logger.warning("universal.size_constant must be at least 1")
        return False

    if config["universal"]["proven_size_limit"] < 0:
        logger.warning("universal.proven_size_limit must be non-negative")
        return False

    if config["oracle"]["max_edges"] < 0:
        logger.warning("oracle.max_edges must be non-negative")
        return False

    return True


def get_default_config() -> Dict[str, Any]:
    """
    Get the default configuration for the divmatch solvers.

    Returns:
        Dictionary containing the default configuration.
    """
    return {
        "solver": {
            "seed": 0,
            "max_default_trials": 65536,
            "threads": 1,
        },
        "matching": {
            "tie_break_edge_limit": 64,
        },
        "universal": {
            "size_constant": 3,
            "seed": 0,
            "max_attempts": 32,
            "verify_budget": 20000000,
            "proven_size_limit": 1048576,
            "cache_dir": None,
        },
        "oracle": {
            "max_edges": 24,
        },
        "logging": {
            "level": "WARNING",
            "file": None,
        },
    }
