"""Strong equivalence over a box, checked through HT_c model sets."""

import logging

from amt_kernel.errors import SignatureMismatch
from amt_kernel.htc import (
    Counterexample,
    Formula,
    ParsedTheory,
    Signature,
    equiv_models,
    parse_theory,
)
from amt_kernel.theory_lin import Bounds
from amt_kernel.translate import tau
from commands.common import base_report, load_program, witness_entry
from schemas import CounterexampleEntry, Report, RunConfig

logger = logging.getLogger(__name__)

EQUIVALENT = "equivalent"
INEQUIVALENT = "inequivalent"


def declared_bounds(bounds: Bounds, *theories: ParsedTheory) -> Bounds:
    """The box with every ``#domain`` line applied; two files may not disagree on one."""
    seen: dict[str, tuple[int, int]] = {}
    for theory in theories:
        for name, lo, hi in theory.domains:
            known = seen.setdefault(name, (lo, hi))
            if known != (lo, hi):
                msg = f"conflicting domains for {name}: {known[0]}..{known[1]} and {lo}..{hi}"
                raise SignatureMismatch(msg)
            bounds = bounds.with_var(name, lo, hi)
    return bounds


def theory_pair(
    first: str, second: str, config: RunConfig
) -> tuple[list[Formula], list[Formula], Signature]:
    a, b = parse_theory(first), parse_theory(second)
    bounds = declared_bounds(config.bounds, a, b)
    return list(a.formulas), list(b.formulas), a.signature(bounds).merge(b.signature(bounds))


def program_pair(
    first: str, second: str, config: RunConfig
) -> tuple[list[Formula], list[Formula], Signature]:
    """Both programs translated with the choice axioms for their external atoms."""
    th = config.handle(boxed=True)
    a = tau(load_program(first, config), th, bounds=config.bounds)
    b = tau(load_program(second, config), th, bounds=config.bounds)
    return list(a.theory), list(b.theory), a.signature.merge(b.signature)


def counterexample_entry(found: Counterexample) -> CounterexampleEntry:
    return CounterexampleEntry(
        here=witness_entry(found.interpretation.h),
        there=witness_entry(found.interpretation.t),
        model_of="first" if found.in_first else "second",
        text=str(found),
    )


def cmd_equiv(first: str, second: str, config: RunConfig, *, programs: bool = False) -> Report:
    pair = program_pair if programs else theory_pair
    g1, g2, sig = pair(first, second, config)
    logger.info("comparing %d and %d formulas over %s", len(g1), len(g2), sig)
    verdict = equiv_models(g1, g2, sig, max_cells=config.max_box_cells)
    report = base_report("equiv", config)
    if isinstance(verdict, Counterexample):
        report.verdict = INEQUIVALENT
        report.counterexample = counterexample_entry(verdict)
        report.exit_code = 1
    else:
        report.verdict = EQUIVALENT
    return report
