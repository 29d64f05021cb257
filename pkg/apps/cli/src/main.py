"""Command-line entry point: ``amt solve|diff|equiv|corpus``."""

import argparse
from collections.abc import Sequence
import logging
from pathlib import Path
import sys
from typing import Any

from pydantic import ValidationError

from amt_kernel import __version__ as kernel_version
from amt_kernel.errors import KernelError
from amt_kernel.logs import level_from_name
from amt_kernel.theory_lin import parse_interval, parse_var_interval
from commands.common import render
from commands.diff import cmd_diff, cmd_diff_corpus
from commands.equiv import cmd_equiv
from commands.generate import cmd_corpus
from commands.solve import cmd_solve
from config import Settings, settings
from schemas import Fault, Mode, OutputFormat, PartitionMode, Report, RunConfig

EXIT_OK = 0
EXIT_ERROR = 2

HANDLER_NAME = "amt-cli"
LOG_FORMAT = "%(levelname)s:%(name)s:\t%(message)s"


def setup_logging(level: str) -> None:
    """Send log records to stderr; stdout carries only the report."""
    root = logging.getLogger()
    root.setLevel(level_from_name(level))
    for handler in [h for h in root.handlers if h.get_name() == HANDLER_NAME]:
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.set_name(HANDLER_NAME)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--theory", help="lin-int, diff-int or lin-rat (or L, D, R)")
    common.add_argument("--bounds", metavar="LO..HI", help="box for every variable")
    common.add_argument(
        "--bound-var",
        action="append",
        default=[],
        metavar="X=LO..HI",
        help="box for a single variable; repeatable",
    )
    common.add_argument("--partition", choices=[p.value for p in PartitionMode])
    common.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat])
    common.add_argument("--max-atoms", type=int)
    common.add_argument("--max-universe", type=int)
    common.add_argument("--max-box-cells", type=int)
    common.add_argument("--max-case-splits", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--jobs", type=int, help="worker processes; 0 uses every core")
    common.add_argument("--log-level", help="overrides AMT_KERNEL_LOG")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="amt", description="Stable models of logic programs modulo theories."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {kernel_version}")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", parents=[common], help="compute stable models")
    solve.add_argument("program", type=Path)
    solve.add_argument("--mode", choices=[m.value for m in Mode])
    solve.add_argument("--witnesses", type=int, help="witnesses listed per model (lin-int)")

    diff = sub.add_parser("diff", parents=[common], help="compare all semantics")
    diff.add_argument("program", type=Path, nargs="?")
    diff.add_argument("--corpus", type=int, metavar="N", help="check N generated programs")
    diff.add_argument("--fault", choices=[f.value for f in Fault])

    equiv = sub.add_parser("equiv", parents=[common], help="check strong equivalence")
    equiv.add_argument("first", type=Path)
    equiv.add_argument("second", type=Path)
    equiv.add_argument(
        "--programs", action="store_true", help="inputs are programs, translated first"
    )

    corpus = sub.add_parser("corpus", parents=[common], help="print random programs")
    corpus.add_argument("--count", type=int, default=10)
    return parser


def config_from_args(args: argparse.Namespace, app_settings: Settings) -> RunConfig:
    overrides: dict[str, Any] = {
        "theory": args.theory,
        "partition": args.partition,
        "output_format": args.output_format,
        "max_atoms": args.max_atoms,
        "max_universe": args.max_universe,
        "max_box_cells": args.max_box_cells,
        "max_case_splits": args.max_case_splits,
        "seed": args.seed,
        "jobs": args.jobs,
        "mode": getattr(args, "mode", None),
        "witnesses": getattr(args, "witnesses", None),
        "fault": getattr(args, "fault", None),
    }
    if args.bounds is not None:
        overrides["lo"], overrides["hi"] = parse_interval(args.bounds)
    if args.bound_var:
        overrides["bound_vars"] = tuple(parse_var_interval(v) for v in args.bound_var)
    return RunConfig.from_settings(app_settings, **overrides)


def read_text(path: Path) -> str:
    return path.read_text(encoding="utf-8")


def dispatch(args: argparse.Namespace, config: RunConfig) -> Report | str:
    if args.command == "solve":
        return cmd_solve(read_text(args.program), config)
    if args.command == "diff":
        if args.corpus is not None:
            return cmd_diff_corpus(args.corpus, config)
        return cmd_diff(read_text(args.program), config)
    if args.command == "equiv":
        first, second = read_text(args.first), read_text(args.second)
        return cmd_equiv(first, second, config, programs=args.programs)
    return cmd_corpus(args.count, config)


def _error(message: str) -> int:
    sys.stderr.write(f"error: {message}\n")
    return EXIT_ERROR


def run(argv: Sequence[str] | None = None, app_settings: Settings | None = None) -> int:
    """Parse ``argv``, run the command and write its report; returns the exit code."""
    app_settings = app_settings or settings
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "diff" and args.program is None and args.corpus is None:
        parser.error("diff needs a program file or --corpus N")

    try:
        setup_logging(args.log_level or app_settings.kernel_log)
        config = config_from_args(args, app_settings)
        result = dispatch(args, config)
    except ValidationError as e:
        return _error("; ".join(err["msg"] for err in e.errors()))
    except (KernelError, ValueError) as e:
        return _error(str(e))
    except OSError as e:
        return _error(f"{e.filename}: {e.strerror}")

    if isinstance(result, str):
        sys.stdout.write(result)
        return EXIT_OK
    sys.stdout.write(render(result, config.output_format))
    return result.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
