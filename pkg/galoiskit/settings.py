from __future__ import annotations

import itertools
import typing
from pathlib import Path

import pydantic_settings
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

if typing.TYPE_CHECKING:
    from pydantic_settings import PydanticBaseSettingsSource


class Settings(BaseSettings):

    model_config = SettingsConfigDict(
        env_nested_delimiter="__",
        env_prefix="galois_",
        extra="ignore",
        pyproject_toml_table_header=("tool", "galoiskit"),
    )

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return (
            init_settings,
            env_settings,
            pydantic_settings.TomlConfigSettingsSource(
                settings_cls, _find_config(".galois.toml")
            ),
            pydantic_settings.PyprojectTomlConfigSettingsSource(
                settings_cls, _find_config("pyproject.toml")
            ),
        )

    color: bool | None = None
    """Colorize the output. If None, the output is colorized if the output is a terminal."""

    max_primes: int = Field(default=200, ge=1)
    """Number of admissible primes sampled when classifying Galois groups."""

    eisenstein_shift_bound: int = Field(default=10, ge=0)
    """Largest |a| tried when looking for an Eisenstein prime of f(x + a)."""

    reduction_prime_bound: int = Field(default=97, ge=2)
    """Largest prime tried by the reduction test."""

    search_bound: int = Field(default=10**7, ge=1)
    """Upper limit on the number of candidates a brute-force search may visit."""

    table_order_limit: int = Field(default=4096, ge=2)
    """Largest field order for multiplication tables and the x^q - x check."""

    quintic_range: int = Field(default=40, ge=0, le=100)
    """Default bound R of the x^5 + ax + b grid."""

    workers: int = Field(default=1, ge=1)
    """Worker processes used by the quintic grid scan."""


def _find_config(name: str) -> Path | None:
    cwd = Path.cwd()
    for dir_ in itertools.chain([cwd], cwd.parents):
        path = dir_ / name
        if path.is_file():
            return path


settings = Settings()
