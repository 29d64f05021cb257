"""Report schemas shared by every command."""

from pydantic import BaseModel, Field

SCHEMA_VERSION = 1

BOX_CAVEAT = (
    "models are computed relative to the finite box; claims over all integers are not checked"
)

WitnessEntry = dict[str, int | str]


class ModelEntry(BaseModel):
    """One stable model: its regular and theory atoms plus a witness."""

    regular: list[str]
    theory: list[str]
    witness: WitnessEntry | None = None
    solution: list[str] = Field(default_factory=list)
    witnesses: list[WitnessEntry] | None = None


class ModeRun(BaseModel):
    """Models produced by one semantics."""

    mode: str
    models: list[ModelEntry]


class DifferingModel(BaseModel):
    """The smallest model not produced by every mode."""

    atoms: list[str]
    found_in: list[str]
    missing_from: list[str]


class InstanceReport(BaseModel):
    """Outcome of the differential check on one corpus program."""

    index: int
    verdict: str
    models: int
    differing: DifferingModel | None = None
    program: str | None = None


class CounterexampleEntry(BaseModel):
    """An interpretation that is a model of exactly one theory."""

    here: WitnessEntry
    there: WitnessEntry
    model_of: str
    text: str


class Report(BaseModel):
    """Machine-readable result of a command."""

    schema_version: int = Field(SCHEMA_VERSION, serialization_alias="schema")
    command: str
    theory: str | None = None
    partition: str | None = None
    bounds: str | None = None
    caveat: str = BOX_CAVEAT
    runs: list[ModeRun] = Field(default_factory=list)
    verdict: str | None = None
    differing: DifferingModel | None = None
    instances: list[InstanceReport] | None = None
    counterexample: CounterexampleEntry | None = None
    exit_code: int = Field(0, exclude=True)
