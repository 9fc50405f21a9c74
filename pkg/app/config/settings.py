"""Configuration settings for the phase-shift direct measurement toolkit."""

from pydantic_settings import BaseSettings
from pydantic import field_validator


class Settings(BaseSettings):
    """Application settings."""

    # State validation
    validation_tol: float = 1e-9
    normalization_tol: float = 1e-12

    # Circuit simulation
    postselect_floor: float = 1e-14
    compile_max_qubits: int = 10
    verify_max_qubits: int = 6
    verify_tol: float = 1e-10

    # Sampling
    bernoulli_threshold: int = 100_000  # shots at or above use the inverse CDF

    # Reconstruction
    full_reconstruction_tol: float = 1e-9

    # Continuous-variable grid
    cv_boundary_tol: float = 1e-8

    # Output
    output_format: str = "json"
    log_level: str = "WARNING"
    debug: bool = False

    @field_validator('output_format')
    @classmethod
    def parse_output_format(cls, v) -> str:
        """Normalize the output format and reject unknown ones."""
        fmt = str(v).strip().lower()
        if fmt not in ("json", "csv"):
            raise ValueError(f"output_format must be json or csv, got {v!r}")
        return fmt

    @field_validator('log_level')
    @classmethod
    def parse_log_level(cls, v) -> str:
        """Upper-case the level name so logging accepts it."""
        return str(v).strip().upper()

    class Config:
        env_file = ".env"
        case_sensitive = False
        extra = "ignore"


# Global settings instance
settings = Settings()
