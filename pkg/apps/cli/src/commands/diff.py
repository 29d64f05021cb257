"""Differential run: the transformation semantics against both HT_c translations."""

from dataclasses import dataclass
import logging
from multiprocessing import Pool
import os

from amt_kernel.errors import KernelError
from amt_kernel.syntax import Program
from amt_kernel.theory_lin import TheoryName
from commands.common import (
    AtomSet,
    ModeResult,
    atoms_key,
    base_report,
    format_atoms,
    load_program,
    run_mode,
)
from corpus import generate_corpus, split_corpus
from schemas import DifferingModel, InstanceReport, Mode, Report, RunConfig

logger = logging.getLogger(__name__)

DIFF_MODES = (Mode.TRANSFORM, Mode.HTC_TAU, Mode.HTC_TAU2)

AGREE = "agree"
DISAGREE = "disagree"


@dataclass(frozen=True)
class DiffOutcome:
    results: list[ModeResult]
    differing: DifferingModel | None

    @property
    def agree(self) -> bool:
        return self.differing is None

    @property
    def verdict(self) -> str:
        return AGREE if self.agree else DISAGREE


def compare(results: list[ModeResult]) -> DifferingModel | None:
    """The smallest atom set that some mode reports and another does not."""
    everything: set[AtomSet] = set()
    for r in results:
        everything.update(r.models)
    for atoms in sorted(everything, key=atoms_key):
        found = [r.mode.value for r in results if atoms in r.models]
        if len(found) < len(results):
            missing = [r.mode.value for r in results if atoms not in r.models]
            return DifferingModel(atoms=format_atoms(atoms), found_in=found, missing_from=missing)
    return None


def diff_program(program: Program, config: RunConfig) -> DiffOutcome:
    """Run every semantics over the same box, so difference logic is box-relative too."""
    results = [run_mode(program, config, mode, boxed=True) for mode in DIFF_MODES]
    return DiffOutcome(results, compare(results))


def check_instance(job: tuple[int, str, RunConfig]) -> InstanceReport:
    """Check one corpus program; runs in worker processes."""
    index, text, config = job
    outcome = diff_program(load_program(text, config), config)
    models = len(outcome.results[0].models)
    if outcome.agree:
        return InstanceReport(index=index, verdict=AGREE, models=models)
    logger.warning("instance %d: %s", index, outcome.differing)
    return InstanceReport(
        index=index, verdict=DISAGREE, models=models, differing=outcome.differing, program=text
    )


def check_instances(programs: list[str], config: RunConfig) -> list[InstanceReport]:
    jobs = [(i, text, config) for i, text in enumerate(programs)]
    workers = min(config.jobs or os.cpu_count() or 1, max(len(jobs), 1))
    if workers == 1:
        return [check_instance(job) for job in jobs]
    logger.info("checking %d programs with %d workers", len(jobs), workers)
    with Pool(processes=workers) as pool:
        return pool.map(check_instance, jobs)


def instances_report(programs: list[str], config: RunConfig) -> Report:
    report = base_report("diff", config)
    report.instances = check_instances(programs, config)
    failed = [i for i in report.instances if i.verdict != AGREE]
    report.verdict = DISAGREE if failed else AGREE
    report.differing = failed[0].differing if failed else None
    report.exit_code = 1 if failed else 0
    return report


def cmd_diff(text: str, config: RunConfig) -> Report:
    programs = split_corpus(text)
    if len(programs) > 1:
        return instances_report(programs, config)
    outcome = diff_program(load_program(text, config), config)
    report = base_report("diff", config)
    report.runs = [r.run() for r in outcome.results]
    report.verdict = outcome.verdict
    report.differing = outcome.differing
    report.exit_code = 0 if outcome.agree else 1
    return report


def cmd_diff_corpus(count: int, config: RunConfig) -> Report:
    """Generate ``count`` programs from the configured seed and check each one."""
    if count <= 0:
        msg = f"corpus size must be positive, got {count}"
        raise KernelError(msg)
    programs = generate_corpus(count, config.seed, difference=config.theory is TheoryName.DIFF_INT)
    return instances_report(programs, config)
