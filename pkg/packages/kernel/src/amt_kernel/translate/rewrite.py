"""Alternative theories for the same program and head-shifting rewrites."""

from enum import Enum

from amt_kernel.errors import HeadNotTheory
from amt_kernel.htc import (
    BOT,
    And,
    Atomic,
    Formula,
    Impl,
    Linear,
    Or,
    defz,
    neg,
)
from amt_kernel.syntax import BOTTOM, Program, Rule, TheoryAtom, atom_sort_key
from amt_kernel.theory_core import TheoryHandle
from amt_kernel.translate.tau import partitioned, require_integers, tau_program


def _external_vars(program: Program) -> list[str]:
    return sorted({x for s in program.externals for x in s.variables})


def defined_variant(program: Program, th: TheoryHandle) -> list[Formula]:
    """The rules plus ``def(x)`` for every variable of an external atom."""
    require_integers(th)
    program = partitioned(program)
    return tau_program(program) + [defz(x) for x in _external_vars(program)]


def choice_variant(program: Program, th: TheoryHandle) -> list[Formula]:
    """The rules, excluded-middle choices for external atoms and ``def(x)`` for their variables."""
    require_integers(th)
    program = partitioned(program)
    externals = sorted(program.externals, key=atom_sort_key)
    choices: list[Formula] = [Or(Atomic(Linear(s)), neg(Atomic(Linear(s)))) for s in externals]
    return tau_program(program) + choices + [defz(x) for x in _external_vars(program)]


class ShiftMode(str, Enum):
    """How a theory-atom head moves into the body."""

    DOUBLE_NEG = "double-neg"
    COMPLEMENT = "complement"


def shift_head(rule: Rule, mode: ShiftMode | str) -> Rule:
    """Turn ``c :- B`` into ``:- B, not c`` or ``:- B, comp(c)``.

    Only sound when the variables of ``c`` are defined in every model, which
    the caller has to ensure.
    """
    if not isinstance(rule.head, TheoryAtom):
        msg = f"head of rule '{rule}' is not a theory atom"
        raise HeadNotTheory(msg)
    if ShiftMode(mode) is ShiftMode.DOUBLE_NEG:
        return Rule(BOTTOM, rule.pbody, rule.nbody | {rule.head})
    return Rule(BOTTOM, rule.pbody | {rule.head.complemented()}, rule.nbody)


def shift_program_heads(program: Program, mode: ShiftMode | str) -> Program:
    """Shift every theory head whose variables all occur in external atoms.

    The result is unpartitioned so that the shifted atoms are read as external.
    """
    program = partitioned(program)
    covered = set(_external_vars(program))
    rules = tuple(
        shift_head(r, mode)
        if isinstance(r.head, TheoryAtom) and r.head.variables <= covered
        else r
        for r in program.rules
    )
    return Program.from_rules(rules, program.directives)


def head_shift_equivalences(c: TheoryAtom, f: Formula) -> list[tuple[Formula, Formula]]:
    """Pairs of formulas that agree once the variables of ``c`` are defined."""
    atom = Atomic(Linear(c))
    comp = Atomic(Linear(c.complemented()))
    return [
        (atom, neg(neg(atom))),
        (atom, neg(comp)),
        (Impl(f, atom), Impl(f, neg(neg(atom)))),
        (Impl(f, atom), Impl(And(f, neg(atom)), BOT)),
        (Impl(f, atom), Impl(And(f, comp), BOT)),
    ]

