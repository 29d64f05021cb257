"""Pydantic schemas for run configuration and reports."""

from schemas.report import (
    BOX_CAVEAT,
    SCHEMA_VERSION,
    CounterexampleEntry,
    DifferingModel,
    InstanceReport,
    ModelEntry,
    ModeRun,
    Report,
    WitnessEntry,
)
from schemas.run_config import Fault, Mode, OutputFormat, PartitionMode, RunConfig

__all__ = [
    "BOX_CAVEAT",
    "SCHEMA_VERSION",
    "CounterexampleEntry",
    "DifferingModel",
    "Fault",
    "InstanceReport",
    "Mode",
    "ModeRun",
    "ModelEntry",
    "OutputFormat",
    "PartitionMode",
    "Report",
    "RunConfig",
    "WitnessEntry",
]
