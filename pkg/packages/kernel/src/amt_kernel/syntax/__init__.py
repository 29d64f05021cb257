"""Ground T-logic programs: abstract syntax, parser, printer and partition analysis."""

from amt_kernel.syntax.atoms import (
    BOTTOM,
    Atom,
    Bottom,
    Kind,
    Program,
    Regular,
    Rel,
    Rule,
    Term,
    TheoryAtom,
    atom_sort_key,
    normalize_atom,
)
from amt_kernel.syntax.parser import parse_program
from amt_kernel.syntax.partition import close_under_complement, infer_partition, program_variables
from amt_kernel.syntax.printer import format_atom, format_program, format_rule

__all__ = [
    "BOTTOM",
    "Atom",
    "Bottom",
    "Kind",
    "Program",
    "Regular",
    "Rel",
    "Rule",
    "Term",
    "TheoryAtom",
    "atom_sort_key",
    "close_under_complement",
    "format_atom",
    "format_program",
    "format_rule",
    "infer_partition",
    "normalize_atom",
    "parse_program",
    "program_variables",
]
