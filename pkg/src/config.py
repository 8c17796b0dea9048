"""
Configuration management for permsys.
Loads budgets and defaults from environment variables with sensible defaults.
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

PROJECT_ROOT = Path(__file__).resolve().parent.parent


def _int_env(name: str, default: str) -> int:
    # base 0 accepts 0x.. seeds as well as decimal budgets
    return int(os.getenv(name, default), 0)


class Config:
    """
    Application configuration loaded from environment variables.
    Provides centralized access to scan budgets, seeds and paths.
    """

    def __init__(self):
        self._load_config()

    def _load_config(self):
        """
        Load all configuration values from environment with defaults.
        """
        # Application
        self.APP_NAME = os.getenv('PERMSYS_APP_NAME', 'permsys')
        self.APP_VERSION = os.getenv('PERMSYS_APP_VERSION', '0.1.0')

        # Logging
        self.LOG_LEVEL = os.getenv('PERMSYS_LOG_LEVEL', 'INFO').upper()

        # Budgets
        self.SCAN_BUDGET = _int_env('PERMSYS_SCAN_BUDGET', str(1 << 24))
        self.HERMITE_BUDGET = _int_env('PERMSYS_HERMITE_BUDGET', str(1 << 16))
        self.CHAR3_MAX_Q = _int_env('PERMSYS_CHAR3_MAX_Q', '27')

        # Sampling and performance
        self.DEFAULT_SEED = _int_env('PERMSYS_DEFAULT_SEED', '0xC0FFEE')
        self.WORKERS = _int_env('PERMSYS_WORKERS', '1')
        self.CHUNK_SIZE = _int_env('PERMSYS_CHUNK_SIZE', str(1 << 16))

        # Data paths
        self.FIELDS_CONFIG_PATH = Path(
            os.getenv('PERMSYS_FIELDS_CONFIG', str(PROJECT_ROOT / 'config' / 'fields.yml'))
        )

        self.DEBUG_MODE = os.getenv('PERMSYS_DEBUG', 'false').lower() == 'true'

    def reload(self):
        """
        Re-read the environment, e.g. after a test changed a variable.
        """
        self._load_config()

    def validate_config(self) -> list:
        """
        Validate configuration and return any errors found.
        Returns: List of validation error messages.
        """
        errors = []

        if not self.FIELDS_CONFIG_PATH.exists():
            errors.append(f"Fields catalogue does not exist: {self.FIELDS_CONFIG_PATH}")

        for name in ('SCAN_BUDGET', 'HERMITE_BUDGET', 'CHAR3_MAX_Q', 'WORKERS', 'CHUNK_SIZE'):
            if getattr(self, name) <= 0:
                errors.append(f"PERMSYS_{name} must be positive")

        if self.LOG_LEVEL not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
            errors.append(f"PERMSYS_LOG_LEVEL is not a logging level: {self.LOG_LEVEL}")

        return errors

    def __str__(self) -> str:
        return f"""Configuration:
  App: {self.APP_NAME} v{self.APP_VERSION}
  Budgets:
    Scan: {self.SCAN_BUDGET}
    Hermite: {self.HERMITE_BUDGET}
    Char-3 max q: {self.CHAR3_MAX_Q}
  Sampling:
    Seed: {self.DEFAULT_SEED:#x}
    Workers: {self.WORKERS}
    Chunk size: {self.CHUNK_SIZE}
  Fields: {self.FIELDS_CONFIG_PATH}
  Debug: {self.DEBUG_MODE}"""


# Global configuration instance
config = Config()
