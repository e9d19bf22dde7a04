# Configuration module
import logging
from pathlib import Path

import yaml

DEFAULT_CONFIG_PATH = Path(__file__).parent / "config.yaml"


def load_config(config_path=None) -> dict:
    """Load configuration from YAML file."""
    path = Path(config_path) if config_path else DEFAULT_CONFIG_PATH
    with open(path, "r") as f:
        return yaml.safe_load(f)


def configure_logging(config: dict) -> None:
    """Apply the logging section of the configuration."""
    settings = config.get("logging", {})
    logging.basicConfig(
        level=settings.get("level", "INFO"),
        format=settings.get(
            "format", "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
        ),
    )
