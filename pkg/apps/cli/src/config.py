"""Application configuration."""

from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict

# Get the apps/cli directory (parent of src/)
CLI_DIR = Path(__file__).parent.parent
ENV_FILE = CLI_DIR / ".env"


class Settings(BaseSettings):
    """Application settings, read from ``AMT_*`` environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="AMT_",
        env_file=str(ENV_FILE),
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Logging: a level name or "trace"
    kernel_log: str = "WARNING"

    # Default box
    default_lo: int = -10
    default_hi: int = 10

    # Caps
    max_atoms: int = 22
    max_universe: int = 20
    max_box_cells: int = 10**7
    max_case_splits: int = 2**16

    # Runs
    jobs: int = 0
    seed: int = 0
    output_format: str = "json"


settings = Settings()
