from pathlib import Path

import pytest
from pydantic import ValidationError

from galoiskit.settings import Settings


class TestSettings:

    def test_env_var(self, monkeypatch: pytest.MonkeyPatch):
        monkeypatch.setenv("GALOIS_COLOR", "true")
        monkeypatch.setenv("GALOIS_MAX_PRIMES", "50")

        settings = Settings()
        assert settings.color is True
        assert settings.max_primes == 50

    def test_toml(self, monkeypatch: pytest.MonkeyPatch, tmp_path: Path):
        toml_file = tmp_path / ".galois.toml"
        toml_file.write_text(
            """
            color = false
            quintic_range = 12
            workers = 4
            """
        )

        (tmp_path / "foo").mkdir()
        monkeypatch.chdir(tmp_path / "foo")

        settings = Settings()
        assert settings.color is False
        assert settings.quintic_range == 12
        assert settings.workers == 4

    def test_order(self, monkeypatch: pytest.MonkeyPatch, tmp_path: Path):
        toml_file = tmp_path / "pyproject.toml"
        toml_file.write_text(
            """
            [tool.galoiskit]
            color = false
            max_primes = 100
            eisenstein_shift_bound = 3
            """
        )
        (tmp_path / ".galois.toml").write_text("eisenstein_shift_bound = 5\n")
        monkeypatch.chdir(tmp_path)

        monkeypatch.setenv("galois_max_primes", "99")

        settings = Settings(color=True)
        assert settings.color is True
        assert settings.max_primes == 99
        assert settings.eisenstein_shift_bound == 5

    def test_defaults(self, monkeypatch: pytest.MonkeyPatch, tmp_path: Path):
        monkeypatch.chdir(tmp_path)
        settings = Settings()
        assert settings.max_primes == 200
        assert settings.quintic_range == 40
        assert settings.workers == 1

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"quintic_range": 101},
            {"quintic_range": -1},
            {"max_primes": 0},
            {"table_order_limit": 1},
            {"workers": 0},
        ],
    )
    def test_reject(self, kwargs: dict):
        with pytest.raises(ValidationError):
            Settings(**kwargs)
