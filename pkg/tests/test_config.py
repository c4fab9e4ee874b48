"""
Tests for run configuration.
"""

import pytest
from pydantic import ValidationError

from normalcut.config import JOBS_ENV, Command, RunConfig
from normalcut.enumeration.fundamental import DEFAULT_BOX_VOLUME_CAP


class TestRunConfig:
    """Test validation and defaults."""

    def test_defaults(self, samples_dir, monkeypatch):
        monkeypatch.delenv(JOBS_ENV, raising=False)
        config = RunConfig(command=Command.VALIDATE, inputs=[samples_dir / "ball.json"])
        assert config.n_max == 5
        assert config.jobs == 1
        assert config.box_volume_cap == DEFAULT_BOX_VOLUME_CAP
        assert config.mode == "fundamental"

    def test_jobs_from_environment(self, samples_dir, monkeypatch):
        monkeypatch.setenv(JOBS_ENV, "4")
        config = RunConfig(command=Command.ENUMERATE, inputs=[samples_dir / "ball.json"])
        assert config.jobs == 4

    def test_invalid_jobs_in_environment(self, samples_dir, monkeypatch):
        monkeypatch.setenv(JOBS_ENV, "0")
        with pytest.raises(ValidationError):
            RunConfig(command=Command.ENUMERATE, inputs=[samples_dir / "ball.json"])

    def test_n_max_lower_bound(self, samples_dir):
        with pytest.raises(ValidationError):
            RunConfig(command=Command.CERTIFY_KNOTTED, inputs=[samples_dir / "ball.json"], n_max=2)

    def test_missing_input(self, tmp_path):
        with pytest.raises(ValidationError) as exc_info:
            RunConfig(command=Command.VALIDATE, inputs=[tmp_path / "absent.json"])
        assert "not found" in str(exc_info.value)

    def test_unknown_mode(self, samples_dir):
        with pytest.raises(ValidationError):
            RunConfig(command=Command.ENUMERATE, inputs=[samples_dir / "ball.json"], mode="normal")
