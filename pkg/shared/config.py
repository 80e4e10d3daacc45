"""Configuration management for tools."""

import json
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field

from shared.errors import InvalidArgumentError


class OutputFormat(str, Enum):
    """Supported result formats."""

    TABLE = "table"
    JSON = "json"
    TSV = "tsv"


class RunConfig(BaseModel):
    """Run-wide options shared by every command."""

    model_config = ConfigDict(extra="forbid")

    debug: bool = False
    log_level: str = "WARNING"
    output_format: OutputFormat = OutputFormat.TABLE
    jobs: int = Field(default=1, ge=1)
    seed: int = 0


def parse_record_file(record_path: Path) -> Dict[str, Any]:
    """
    Parse an input record (JSON or YAML).

    Args:
        record_path: Path to the record file

    Returns:
        Record dictionary

    Raises:
        FileNotFoundError: If the file does not exist
        InvalidArgumentError: If the suffix is unsupported or the content is not a mapping
    """
    if not record_path.exists():
        raise FileNotFoundError(f"Input file not found: {record_path}")

    if record_path.suffix == ".json":
        with open(record_path) as f:
            data = json.load(f)
    elif record_path.suffix in [".yaml", ".yml"]:
        with open(record_path) as f:
            data = yaml.safe_load(f)
    else:
        raise InvalidArgumentError(f"Unsupported input file format: {record_path.suffix}")

    if not isinstance(data, dict):
        raise InvalidArgumentError(f"Expected a mapping at the top level of {record_path}")
    return data


def load_run_config(config_path: Optional[Path] = None, **overrides: Any) -> RunConfig:
    """
    Build the run configuration.

    Precedence, lowest first: model defaults, the optional config file,
    explicit overrides. Overrides whose value is None are ignored so that
    unset command-line flags do not mask the file.

    Args:
        config_path: Optional JSON/YAML file with RunConfig fields
        **overrides: Values taken from command-line flags

    Returns:
        Validated RunConfig
    """
    values: Dict[str, Any] = {}
    if config_path is not None:
        values.update(parse_record_file(config_path))
    values.update({key: value for key, value in overrides.items() if value is not None})
    return RunConfig(**values)
