"""Compute the stable models of one program under a single semantics."""

from commands.common import base_report, load_program, run_mode
from commands.diff import cmd_diff
from schemas import Mode, Report, RunConfig


def cmd_solve(text: str, config: RunConfig) -> Report:
    """Exit code 0 when some model exists, 1 when there is none."""
    if config.mode is Mode.DIFF:
        return cmd_diff(text, config)
    program = load_program(text, config)
    result = run_mode(program, config, config.mode, boxed=config.mode is not Mode.TRANSFORM)
    report = base_report("solve", config)
    report.runs = [result.run()]
    report.exit_code = 0 if result.models else 1
    return report
