"""Configuration management for LTL Synth."""

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings."""

    # Application settings
    APP_NAME: str = "LTL Synth"
    APP_VERSION: str = "0.1.0"

    # Engine settings
    MAX_STATES: int = 1_000_000
    EXPLORATION: str = "bfs"
    BFS_LAYER_MODE: bool = False

    # Automaton settings
    MEMOIZE_TRANSITIONS: bool = True

    # Solver settings
    SOLVER_CHECK_PROGRESS: bool = False

    # Extraction and verification
    PRIME_IMPLICANT_EXACT_LIMIT: int = 12
    VERIFY_COMPLETION_LIMIT: int = 8

    # Exploration scoring
    SCORE_MAX_ATOMS: int = 20

    # Logging
    LOG_LEVEL: str = "WARNING"

    # Model configuration
    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", case_sensitive=True, extra="ignore"
    )

    @field_validator("EXPLORATION")
    @classmethod
    def validate_exploration(cls, v: str) -> str:
        """Validate the exploration strategy name."""
        v = v.strip().lower()
        if v not in ["bfs", "bfs+", "pq", "pq+"]:
            raise ValueError(f"Invalid exploration strategy: {v}")
        return v

    @field_validator("MAX_STATES")
    @classmethod
    def validate_max_states(cls, v: int) -> int:
        """Validate the state limit."""
        if v < 1:
            raise ValueError("MAX_STATES must be positive")
        return v

    @field_validator("LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level."""
        v = v.upper()
        if v not in ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]:
            raise ValueError(f"Invalid log level: {v}")
        return v


# Global settings instance
settings = Settings()


def get_settings() -> Settings:
    """Get the application settings."""
    return settings
