"""Pytest configuration and fixtures."""

from pathlib import Path

import pytest

from config import Settings
from main import run
from samples import MARGIN, MARGIN_SHIFTED, RUNNING_EXAMPLE, Amt, CliResult, Write


@pytest.fixture
def app_settings() -> Settings:
    """Settings with their defaults, ignoring any ``.env`` file."""
    return Settings(_env_file=None)  # type: ignore[call-arg]


@pytest.fixture
def amt(capsys: pytest.CaptureFixture[str], app_settings: Settings) -> Amt:
    """Run the command line in-process and capture its streams."""

    def invoke(*argv: str | Path) -> CliResult:
        code = run([str(a) for a in argv], app_settings)
        captured = capsys.readouterr()
        return CliResult(code, captured.out, captured.err)

    return invoke


@pytest.fixture
def write(tmp_path: Path) -> Write:
    def write_file(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write_file


@pytest.fixture
def running_example(write: Write) -> Path:
    return write("running.lp", RUNNING_EXAMPLE)


@pytest.fixture
def margin_files(write: Write) -> tuple[Path, Path]:
    return write("margin.lp", MARGIN), write("margin_shifted.lp", MARGIN_SHIFTED)
