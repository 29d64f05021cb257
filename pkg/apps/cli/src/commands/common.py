"""Helpers shared by the commands: loading programs, running one semantics, rendering reports."""

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from itertools import islice
import logging

from amt_kernel.htc import equilibrium_models
from amt_kernel.stable import te_stable_models
from amt_kernel.syntax import (
    Atom,
    Program,
    TheoryAtom,
    atom_sort_key,
    format_atom,
    infer_partition,
    parse_program,
)
from amt_kernel.theory_core import TheoryHandle, complete_wrt
from amt_kernel.theory_lin import TheoryName, witnesses_L
from amt_kernel.translate import (
    project_equilibrium,
    project_solution,
    project_tau2,
    tau,
    tau2,
)
from amt_kernel.valuation import Value, Valuation, format_value
from schemas import Fault, Mode, ModelEntry, ModeRun, OutputFormat, Report, RunConfig, WitnessEntry

logger = logging.getLogger(__name__)

AtomSet = frozenset[Atom]


@dataclass(frozen=True)
class ModeResult:
    """Models of one semantics keyed by their atom sets, smallest first."""

    mode: Mode
    models: dict[AtomSet, ModelEntry]

    def run(self) -> ModeRun:
        return ModeRun(mode=self.mode.value, models=list(self.models.values()))


def load_program(text: str, config: RunConfig) -> Program:
    return infer_partition(parse_program(text), all_external=config.all_external)


def atoms_key(atoms: Iterable[Atom]) -> tuple[int, tuple[tuple[int, str], ...]]:
    """Smaller sets first, then by their sorted atoms."""
    keys = sorted(atom_sort_key(a) for a in atoms)
    return len(keys), tuple(keys)


def format_atoms(atoms: Iterable[Atom]) -> list[str]:
    return [format_atom(a) for a in sorted(atoms, key=atom_sort_key)]


def witness_entry(v: Mapping[str, Value]) -> WitnessEntry:
    """A valuation as JSON-friendly values; rationals become ``p/q`` and truth ``t``."""
    return {x: val if isinstance(val, int) else format_value(val) for x, val in sorted(v.items())}


def model_entry(
    atoms: AtomSet,
    witness: Mapping[str, Value] | None,
    solution: Iterable[TheoryAtom],
    witnesses: list[WitnessEntry] | None = None,
) -> ModelEntry:
    ordered = sorted(atoms, key=atom_sort_key)
    return ModelEntry(
        regular=[str(a) for a in ordered if not isinstance(a, TheoryAtom)],
        theory=[format_atom(a) for a in ordered if isinstance(a, TheoryAtom)],
        witness=None if witness is None else witness_entry(witness),
        solution=format_atoms(solution),
        witnesses=witnesses,
    )


def _sorted(models: dict[AtomSet, ModelEntry]) -> dict[AtomSet, ModelEntry]:
    return {atoms: models[atoms] for atoms in sorted(models, key=atoms_key)}


def run_transform(
    program: Program, config: RunConfig, th: TheoryHandle
) -> dict[AtomSet, ModelEntry]:
    models = te_stable_models(
        program, th, max_atoms=config.max_atoms, max_universe=config.max_universe
    )
    found: dict[AtomSet, ModelEntry] = {}
    for m in models:
        extra = None
        if config.witnesses > 1 and config.theory is TheoryName.LIN_INT:
            completed = complete_wrt(m.solution, program.externals, th)
            points = witnesses_L(completed, config.bounds, max_cells=config.max_box_cells)
            extra = [witness_entry(w) for w in islice(points, config.witnesses)]
        found[m.atoms] = model_entry(m.atoms, m.witness, m.solution, extra)
    return found


def _equilibria(
    program: Program, config: RunConfig, th: TheoryHandle, mode: Mode
) -> Iterator[tuple[AtomSet, Valuation]]:
    if mode is Mode.HTC_TAU:
        out = tau(program, th, bounds=config.bounds, drop_choice=config.fault is Fault.DROP_CHOICE)
    else:
        out = tau2(program, th, bounds=config.bounds)
    for t in equilibrium_models(out.theory, out.signature, max_cells=config.max_box_cells):
        if mode is Mode.HTC_TAU:
            yield project_equilibrium(t, program), t
        else:
            yield project_tau2(t, program), t


def run_htc(
    program: Program, config: RunConfig, th: TheoryHandle, mode: Mode
) -> dict[AtomSet, ModelEntry]:
    """Equilibrium models of a translation, projected and grouped by their atoms.

    The first equilibrium model of each group serves as its witness.
    """
    variables = program.variables()
    found: dict[AtomSet, ModelEntry] = {}
    for atoms, t in _equilibria(program, config, th, mode):
        if atoms not in found:
            solution = project_solution(t, program.theory_atoms)
            found[atoms] = model_entry(atoms, t.restrict(variables), solution)
    return found


def run_mode(program: Program, config: RunConfig, mode: Mode, *, boxed: bool) -> ModeResult:
    th = config.handle(boxed=boxed)
    if mode is Mode.TRANSFORM:
        models = run_transform(program, config, th)
    else:
        models = run_htc(program, config, th, mode)
    logger.info("%s: %d models", mode.value, len(models))
    return ModeResult(mode, _sorted(models))


def base_report(command: str, config: RunConfig) -> Report:
    return Report(
        command=command,
        theory=config.theory.value,
        partition=config.partition.value,
        bounds=str(config.bounds),
    )


def _format_witness(witness: WitnessEntry) -> str:
    return " ".join(f"{x}={v}" for x, v in witness.items()) or "(empty)"


def _text_lines(report: Report) -> Iterator[str]:
    header = [f"command: {report.command}"]
    header += [f"theory: {report.theory}"] if report.theory else []
    header += [f"bounds: {report.bounds}"] if report.bounds else []
    yield "  ".join(header)
    for run in report.runs:
        yield f"mode {run.mode}: {len(run.models)} model(s)"
        for model in run.models:
            yield "  {" + ", ".join(model.regular + model.theory) + "}"
            if model.witnesses:
                for witness in model.witnesses:
                    yield f"    witness: {_format_witness(witness)}"
            elif model.witness is not None:
                yield f"    witness: {_format_witness(model.witness)}"
    if report.instances is not None:
        failed = sum(1 for i in report.instances if i.verdict != "agree")
        yield f"instances: {len(report.instances)} checked, {failed} disagreement(s)"
    if report.verdict:
        yield f"verdict: {report.verdict}"
    if report.differing:
        d = report.differing
        yield (
            "differing: {" + ", ".join(d.atoms) + "} found in " + ", ".join(d.found_in)
            + "; missing from " + ", ".join(d.missing_from)
        )
    if report.counterexample:
        yield f"counterexample: {report.counterexample.text}"
    yield f"note: {report.caveat}"


def render(report: Report, output_format: OutputFormat) -> str:
    """JSON is indented with fields in declaration order so output is byte-stable."""
    if output_format is OutputFormat.JSON:
        return report.model_dump_json(by_alias=True, exclude_none=True, indent=2) + "\n"
    return "\n".join(_text_lines(report)) + "\n"
