import hashlib
import logging
from pathlib import Path
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

PROJECT_ROOT = Path(__file__).parent.parent
ENV_FILE_PATH = PROJECT_ROOT / ".env"


class BaseConfigSettings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=[".env", str(ENV_FILE_PATH)],
        extra="ignore",
        frozen=True,
        env_nested_delimiter="__",
        case_sensitive=False,
    )


class CliSettings(BaseConfigSettings):
    model_config = SettingsConfigDict(
        env_file=[".env", str(ENV_FILE_PATH)],
        env_prefix="CLI__",
        extra="ignore",
        frozen=True,
        case_sensitive=False,
    )

    default_format: Literal["json", "text"] = "text"
    json_indent: int = 2
    digest_algorithm: str = "sha256"  # Used for the input digests of every report

    @field_validator("digest_algorithm")
    @classmethod
    def validate_digest_algorithm(cls, v: str) -> str:
        if v not in hashlib.algorithms_available:
            raise ValueError(f"Unknown digest algorithm: {v}")
        return v


class FactorizationSettings(BaseConfigSettings):
    model_config = SettingsConfigDict(
        env_file=[".env", str(ENV_FILE_PATH)],
        env_prefix="FACTORIZATION__",
        extra="ignore",
        frozen=True,
        case_sensitive=False,
    )

    check_multiplicativity: bool = True  # Verify F_ab F_bc = F_ac over all triples
    normalize_output: bool = True  # Pin delta of the smallest support label to 1


class LexSettings(BaseConfigSettings):
    model_config = SettingsConfigDict(
        env_file=[".env", str(ENV_FILE_PATH)],
        env_prefix="LEX__",
        extra="ignore",
        frozen=True,
        case_sensitive=False,
    )

    witness_bound: int = 1000000  # Bound passed to unboundedness_witness by the CLI

    @field_validator("witness_bound")
    @classmethod
    def validate_witness_bound(cls, v: int) -> int:
        if v < 0:
            raise ValueError("Witness bound must be non-negative")
        return v


class Settings(BaseConfigSettings):
    app_version: str = "0.1.0"
    environment: Literal["development", "staging", "production"] = "development"
    service_name: str = "lattice-automorphisms"
    log_level: str = "WARNING"

    cli: CliSettings = Field(default_factory=CliSettings)
    factorization: FactorizationSettings = Field(default_factory=FactorizationSettings)
    lex: LexSettings = Field(default_factory=LexSettings)

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        level = v.upper()
        if level not in logging.getLevelNamesMapping():
            raise ValueError(f"Unknown log level: {v}")
        return level


def get_settings() -> Settings:
    return Settings()
