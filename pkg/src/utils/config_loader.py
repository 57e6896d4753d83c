"""
Configuration Loader Module
Reads the YAML settings of the verification engine, with .env and environment
overrides
"""

import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

CONFIG_DIR_ENV = "CUBIC_BRIDGE_CONFIG_DIR"
LOG_LEVEL_ENV = "CUBIC_BRIDGE_LOG_LEVEL"

_PROJECT_ROOT = Path(__file__).resolve().parents[2]


class ConfigLoader:
    """Every YAML file of one config directory, keyed by file stem"""

    def __init__(self, config_dir: Optional[str] = None):
        """
        Args:
            config_dir: Configuration directory; falls back to
                $CUBIC_BRIDGE_CONFIG_DIR, then to the repository config/
        """
        load_dotenv(_PROJECT_ROOT / '.env')
        self.config_dir = str(config_dir or os.getenv(CONFIG_DIR_ENV) or _PROJECT_ROOT / 'config')
        self.configs: Dict[str, Dict[str, Any]] = {}

        directory = Path(self.config_dir)
        if not directory.is_dir():
            raise ValueError(f"Config directory not found: {self.config_dir}")
        for path in sorted(directory.glob("*.yaml")) + sorted(directory.glob("*.yml")):
            with open(path, 'r', encoding='utf-8') as f:
                self.configs[path.stem] = yaml.safe_load(f) or {}

    def get_config(self, config_name: str) -> Dict[str, Any]:
        if config_name not in self.configs:
            raise KeyError(f"Configuration '{config_name}' not found")
        return self.configs[config_name]

    def get(self, config_name: str, key: str, default: Any = None) -> Any:
        """
        Look up a dotted key such as 'verification.seed'

        Args:
            config_name: Configuration file stem
            key: Dotted path into the YAML mapping
            default: Returned when any step of the path is missing or null

        Returns:
            Configuration value
        """
        value: Any = self.get_config(config_name)
        for part in key.split('.'):
            if not isinstance(value, dict):
                return default
            value = value.get(part)
        return default if value is None else value

    def get_settings(self) -> Dict[str, Any]:
        return self.configs.get('settings', {})

    def log_level(self) -> str:
        """Log level with the environment override applied"""
        configured = self.get_settings().get('logging', {}).get('level')
        return os.getenv(LOG_LEVEL_ENV) or configured or 'INFO'


_config_instance: Optional[ConfigLoader] = None


def get_config_loader(config_dir: Optional[str] = None) -> ConfigLoader:
    """
    Process-wide loader; a different config_dir replaces the cached instance
    """
    global _config_instance
    if _config_instance is None or (
        config_dir is not None and str(config_dir) != _config_instance.config_dir
    ):
        _config_instance = ConfigLoader(config_dir)
    return _config_instance
