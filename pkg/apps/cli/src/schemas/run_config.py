"""Validated run configuration built from settings and command-line flags."""

from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from amt_kernel.theory_core import TheoryHandle
from amt_kernel.theory_lin import Bounds, TheoryName, make_handle
from config import Settings


class Mode(str, Enum):
    """Which semantics computes the models."""

    TRANSFORM = "transform"
    HTC_TAU = "htc-tau"
    HTC_TAU2 = "htc-tau2"
    DIFF = "diff"


class PartitionMode(str, Enum):
    DEFINED = "defined"
    CLINGCON = "clingcon"


class OutputFormat(str, Enum):
    JSON = "json"
    TEXT = "text"


class Fault(str, Enum):
    """Deliberate translation faults for checking the differential run."""

    DROP_CHOICE = "drop-choice"


class RunConfig(BaseModel):
    """Everything a command needs besides its input files."""

    model_config = ConfigDict(frozen=True)

    theory: TheoryName = TheoryName.LIN_INT
    mode: Mode = Mode.TRANSFORM
    partition: PartitionMode = PartitionMode.DEFINED
    lo: int = -10
    hi: int = 10
    bound_vars: tuple[tuple[str, int, int], ...] = ()
    max_atoms: int = Field(22, gt=0)
    max_universe: int = Field(20, gt=0)
    max_box_cells: int = Field(10**7, gt=0)
    max_case_splits: int = Field(2**16, gt=0)
    output_format: OutputFormat = OutputFormat.JSON
    seed: int = 0
    jobs: int = Field(0, ge=0)
    witnesses: int = Field(1, ge=0)
    fault: Fault | None = None

    @field_validator("theory", mode="before")
    @classmethod
    def resolve_theory(cls, value: Any) -> Any:
        """Accept the short selectors ``L``, ``D`` and ``R``."""
        if isinstance(value, str):
            try:
                return TheoryName(value)
            except ValueError:
                msg = f"unknown theory {value!r}; expected lin-int, diff-int or lin-rat"
                raise ValueError(msg) from None
        return value

    @model_validator(mode="after")
    def check_bounds(self) -> "RunConfig":
        for name, lo, hi in (("the box", self.lo, self.hi), *self.bound_vars):
            if lo > hi:
                msg = f"lower bound {lo} exceeds upper bound {hi} for {name}"
                raise ValueError(msg)
        return self

    @classmethod
    def from_settings(cls, settings: Settings, **overrides: Any) -> "RunConfig":
        """Settings first, then every flag that was actually given."""
        values: dict[str, Any] = {
            "lo": settings.default_lo,
            "hi": settings.default_hi,
            "max_atoms": settings.max_atoms,
            "max_universe": settings.max_universe,
            "max_box_cells": settings.max_box_cells,
            "max_case_splits": settings.max_case_splits,
            "output_format": settings.output_format,
            "seed": settings.seed,
            "jobs": settings.jobs,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls.model_validate(values)

    @property
    def bounds(self) -> Bounds:
        return Bounds(self.lo, self.hi, self.bound_vars)

    @property
    def all_external(self) -> bool:
        return self.partition is PartitionMode.CLINGCON

    def handle(self, *, boxed: bool = False) -> TheoryHandle:
        """The theory handle; ``boxed`` makes difference logic box-relative."""
        return make_handle(
            self.theory,
            self.bounds,
            boxed=boxed,
            max_cells=self.max_box_cells,
            max_case_splits=self.max_case_splits,
        )
