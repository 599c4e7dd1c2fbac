"""
Configuration management for the partial group lab.

Centralizes all configuration with environment variable support.
"""

from typing import Literal, Optional
from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class VerificationSettings(BaseModel):
    """Bounds and defaults for constructions and theorem checks"""
    levels: int = Field(default=6, ge=2)  # default truncation N
    max_levels_safe: int = Field(default=8)  # N above this needs unsafe_large
    max_word_length: int = Field(default=8)
    max_tree_leaves: int = Field(default=10)
    mirror_max_length: int = Field(default=5)
    contraction_max_length: int = Field(default=5)
    spot_checks: int = Field(default=25)  # random SimplexMaps per hom check
    seed: int = Field(default=0)
    closure_mode: Literal["exhaustive", "generators"] = Field(default="exhaustive")
    unsafe_large: bool = Field(default=False)


class EnumerationSettings(BaseModel):
    """Brute-force enumeration configuration"""
    max_size: int = Field(default=4)
    unsafe_max_size: int = Field(default=5)  # only reachable with unsafe_large
    workers: int = Field(default=1, ge=1)  # 1 runs sweeps in-process
    atlas_dir: str = Field(default="./atlas")


class ObservabilitySettings(BaseModel):
    """Logging configuration"""
    log_level: str = Field(default="WARNING")
    log_format: str = Field(default="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>")


class Settings(BaseSettings):
    """
    Main application settings.

    Loads from environment variables with PARTIAL_GROUPS_ prefix.
    Example: PARTIAL_GROUPS_VERIFICATION__LEVELS=5
    """

    model_config = SettingsConfigDict(
        env_prefix="PARTIAL_GROUPS_",
        env_nested_delimiter="__",
        case_sensitive=False,
    )

    app_name: str = Field(default="partial-group-lab")
    app_version: str = Field(default="0.1.0")

    verification: VerificationSettings = Field(default_factory=VerificationSettings)
    enumeration: EnumerationSettings = Field(default_factory=EnumerationSettings)
    observability: ObservabilitySettings = Field(default_factory=ObservabilitySettings)


# Global settings instance
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """
    Get global settings instance (singleton).

    Returns:
        Settings instance
    """
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reload_settings() -> Settings:
    """
    Reload settings from environment.

    Returns:
        New settings instance
    """
    global _settings
    _settings = Settings()
    return _settings


def override_settings(**sections: dict) -> Settings:
    """
    Replace fields of individual sections for the running process.

    Example:
        override_settings(verification={"levels": 5, "seed": 7})
    """
    settings = get_settings()
    updates = {}
    for name, values in sections.items():
        current = getattr(settings, name)
        updates[name] = current.model_copy(update=values)
    global _settings
    _settings = settings.model_copy(update=updates)
    return _settings


# Example .env file content:
"""
PARTIAL_GROUPS_VERIFICATION__LEVELS=6
PARTIAL_GROUPS_VERIFICATION__CLOSURE_MODE=exhaustive
PARTIAL_GROUPS_ENUMERATION__WORKERS=4
PARTIAL_GROUPS_ENUMERATION__ATLAS_DIR=/data/atlas
PARTIAL_GROUPS_OBSERVABILITY__LOG_LEVEL=INFO
"""
