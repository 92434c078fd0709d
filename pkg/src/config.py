"""
Configuration

Settings are read from the environment (and a local .env file) once at
startup. Command-line flags override them.
"""

import os
import logging
from typing import Literal, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, field_validator

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class Settings(BaseModel):
    """Runtime settings"""
    model_config = ConfigDict(frozen=True)

    log_level: str = Field("WARNING", description="Logging level (NAKAYAMA_LOG_LEVEL)")
    workers: int = Field(1, ge=1, description="Worker processes for verify (NAKAYAMA_WORKERS)")
    output_format: Literal["human", "json", "csv"] = Field(
        "human",
        description="Default --format (NAKAYAMA_FORMAT)"
    )
    max_suite_n: int = Field(12, ge=1, description="Upper bound on verify --n (NAKAYAMA_MAX_SUITE_N)")

    @field_validator("log_level")
    @classmethod
    def _normalize_level(cls, value: str) -> str:
        level = value.upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level {value!r}")
        return level


def load_settings() -> Settings:
    """
    Build settings from NAKAYAMA_* environment variables.

    Returns:
        Validated settings

    Raises:
        pydantic.ValidationError: If a variable has an invalid value
    """
    load_dotenv()
    return Settings(
        log_level=os.getenv("NAKAYAMA_LOG_LEVEL", "WARNING"),
        workers=os.getenv("NAKAYAMA_WORKERS", "1"),
        output_format=os.getenv("NAKAYAMA_FORMAT", "human"),
        max_suite_n=os.getenv("NAKAYAMA_MAX_SUITE_N", "12"),
    )


# Global settings instance
_settings: Optional[Settings] = None


def initialize_settings() -> Settings:
    """Load the global settings"""
    global _settings
    _settings = load_settings()
    logger.debug(f"Settings initialized: {_settings}")
    return _settings


def get_settings() -> Settings:
    """Get the global settings, loading them on first use"""
    if _settings is None:
        return initialize_settings()
    return _settings


def configure_logging(settings: Settings) -> None:
    """Configure root logging (stderr) at the configured level"""
    logging.basicConfig(level=settings.log_level, format=LOG_FORMAT)
