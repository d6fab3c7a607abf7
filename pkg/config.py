"""
Runtime settings and logging setup.

Settings are read from the environment (optionally a ``.env`` file) once
per process.
"""

import os
import logging
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class Settings(BaseModel):
    """Process-wide configuration."""

    catalog_path: Optional[str] = None
    max_workers: int = Field(default=4, ge=1)
    cache_enabled: bool = False
    cache_dir: str = ".cache"
    cache_ttl: int = Field(default=30 * 24 * 3600, ge=1)
    log_level: str = "WARNING"
    log_file: str = "fujiki_orbifolds.log"


def _env_flag(name: str, default: bool) -> bool:
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in ("1", "true", "yes", "on")


def load_settings() -> Settings:
    """
    Build the settings from environment variables.

    Returns:
        Settings populated from FUJIKI_* variables, defaults elsewhere
    """
    load_dotenv()
    return Settings(
        catalog_path=os.getenv("FUJIKI_CATALOG") or None,
        max_workers=int(os.getenv("FUJIKI_MAX_WORKERS", "4")),
        cache_enabled=_env_flag("FUJIKI_CACHE_ENABLED", False),
        cache_dir=os.getenv("FUJIKI_CACHE_DIR", ".cache"),
        cache_ttl=int(os.getenv("FUJIKI_CACHE_TTL", str(30 * 24 * 3600))),
        log_level=os.getenv("FUJIKI_LOG_LEVEL", "WARNING").upper(),
        log_file=os.getenv("FUJIKI_LOG_FILE", "fujiki_orbifolds.log"),
    )


def configure_logging(settings: Settings) -> None:
    """Configure root logging: stderr plus a log file."""
    logging.basicConfig(
        level=getattr(logging, settings.log_level, logging.WARNING),
        format=LOG_FORMAT,
        handlers=[
            logging.StreamHandler(),
            logging.FileHandler(settings.log_file)
        ]
    )
    logger.debug(f"Logging configured at level {settings.log_level}")
