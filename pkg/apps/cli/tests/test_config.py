"""Tests for settings and run configuration."""

from pydantic import ValidationError
import pytest

from amt_kernel.theory_lin import Bounds, TheoryName
from config import Settings
from schemas import Mode, OutputFormat, PartitionMode, RunConfig


def test_settings_from_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test that ``AMT_*`` variables override the defaults."""
    monkeypatch.setenv("AMT_DEFAULT_LO", "-3")
    monkeypatch.setenv("AMT_MAX_ATOMS", "8")
    monkeypatch.setenv("AMT_OUTPUT_FORMAT", "text")
    app_settings = Settings(_env_file=None)  # type: ignore[call-arg]
    config = RunConfig.from_settings(app_settings)
    assert config.lo == -3
    assert config.hi == 10
    assert config.max_atoms == 8
    assert config.output_format is OutputFormat.TEXT


def test_flags_override_settings(app_settings: Settings) -> None:
    """Test that given flags win and missing ones fall back to settings."""
    config = RunConfig.from_settings(app_settings, lo=-2, hi=2, mode="htc-tau", seed=None)
    assert config.bounds == Bounds(-2, 2)
    assert config.mode is Mode.HTC_TAU
    assert config.seed == app_settings.seed


def test_theory_aliases() -> None:
    """Test the one-letter theory selectors."""
    assert RunConfig(theory="D").theory is TheoryName.DIFF_INT
    assert RunConfig(theory="r").theory is TheoryName.LIN_RAT
    with pytest.raises(ValidationError, match="unknown theory"):
        RunConfig(theory="bool")


@pytest.mark.parametrize("field", ["max_atoms", "max_universe", "max_box_cells", "max_case_splits"])
def test_caps_must_be_positive(field: str) -> None:
    """Test that every cap rejects zero."""
    with pytest.raises(ValidationError):
        RunConfig.model_validate({field: 0})


def test_bounds_must_be_ordered() -> None:
    """Test that reversed intervals are rejected, also per variable."""
    with pytest.raises(ValidationError, match="exceeds upper bound"):
        RunConfig(lo=3, hi=1)
    with pytest.raises(ValidationError, match="for z"):
        RunConfig(bound_vars=(("z", 2, 0),))


def test_partition_selects_all_external() -> None:
    """Test the clingcon-style partition switch."""
    assert not RunConfig().all_external
    assert RunConfig(partition=PartitionMode.CLINGCON).all_external


def test_handle_uses_the_box() -> None:
    """Test that a boxed difference handle is marked bounded."""
    config = RunConfig(theory=TheoryName.DIFF_INT, lo=-1, hi=1)
    assert config.handle(boxed=True).bounded
    assert not config.handle().bounded

