"""Constraint atoms and formulas of HT_c, and their satisfaction relation."""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import reduce

from amt_kernel.syntax import TheoryAtom, format_atom
from amt_kernel.theory_lin.structure import den_contains
from amt_kernel.valuation import TRUE, Value, Valuation, is_integral


@dataclass(frozen=True, slots=True)
class PropTrue:
    """The atom ``p = t`` over a propositional variable."""

    var: str


@dataclass(frozen=True, slots=True)
class Linear:
    atom: TheoryAtom


@dataclass(frozen=True, slots=True)
class DefZ:
    """Holds when the variable has a defined integer value."""

    var: str


ConstraintAtom = PropTrue | Linear | DefZ


def atom_vars(atom: ConstraintAtom) -> frozenset[str]:
    if isinstance(atom, Linear):
        return atom.atom.variables
    return frozenset({atom.var})


def atom_den_contains(atom: ConstraintAtom, v: Mapping[str, Value]) -> bool:
    """Denotation membership of a valuation for a constraint atom."""
    match atom:
        case PropTrue(var):
            return v.get(var) is TRUE
        case DefZ(var):
            return var in v and is_integral(v[var])
        case Linear(theory_atom):
            return den_contains(theory_atom, v)
    msg = f"not a constraint atom: {atom!r}"
    raise TypeError(msg)


@dataclass(frozen=True, slots=True)
class Bot:
    pass


@dataclass(frozen=True, slots=True)
class Atomic:
    atom: ConstraintAtom


@dataclass(frozen=True, slots=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Impl:
    left: "Formula"
    right: "Formula"


Formula = Bot | Atomic | And | Or | Impl

BOT = Bot()
TOP = Impl(BOT, BOT)


def top() -> Formula:
    return TOP


def neg(f: Formula) -> Formula:
    return Impl(f, BOT)


def conj(fs: Iterable[Formula]) -> Formula:
    items = list(fs)
    return reduce(And, items) if items else TOP


def disj(fs: Iterable[Formula]) -> Formula:
    items = list(fs)
    return reduce(Or, items) if items else BOT


def iff(a: Formula, b: Formula) -> Formula:
    return And(Impl(a, b), Impl(b, a))


def prop(name: str) -> Formula:
    return Atomic(PropTrue(name))


def linear(atom: TheoryAtom) -> Formula:
    return Atomic(Linear(atom))


def defz(name: str) -> Formula:
    return Atomic(DefZ(name))


def holds(f: Formula, t: Mapping[str, Value]) -> bool:
    """Satisfaction in the total interpretation ``<t, t>``, which is classical."""
    match f:
        case Bot():
            return False
        case Atomic(atom):
            return atom_den_contains(atom, t)
        case And(a, b):
            return holds(a, t) and holds(b, t)
        case Or(a, b):
            return holds(a, t) or holds(b, t)
        case Impl(a, b):
            return not holds(a, t) or holds(b, t)
    msg = f"not a formula: {f!r}"
    raise TypeError(msg)


def evaluate(f: Formula, h: Valuation, t: Valuation) -> bool:
    """Satisfaction in ``<h, t>``; implications are checked in both worlds."""
    if h is t or h == t:
        return holds(f, t)
    match f:
        case Bot():
            return False
        case Atomic(atom):
            return atom_den_contains(atom, h)
        case And(a, b):
            return evaluate(a, h, t) and evaluate(b, h, t)
        case Or(a, b):
            return evaluate(a, h, t) or evaluate(b, h, t)
        case Impl(a, b):
            return (not holds(a, t) or holds(b, t)) and (
                not evaluate(a, h, t) or evaluate(b, h, t)
            )
    msg = f"not a formula: {f!r}"
    raise TypeError(msg)


def formula_atoms(f: Formula) -> set[ConstraintAtom]:
    match f:
        case Atomic(atom):
            return {atom}
        case And(a, b) | Or(a, b) | Impl(a, b):
            return formula_atoms(a) | formula_atoms(b)
    return set()


def formula_vars(f: Formula) -> frozenset[str]:
    return frozenset(x for c in formula_atoms(f) for x in atom_vars(c))


def format_constraint(atom: ConstraintAtom) -> str:
    match atom:
        case PropTrue(var):
            return var
        case DefZ(var):
            return f"def({var})"
        case Linear(theory_atom):
            return format_atom(theory_atom)
    msg = f"not a constraint atom: {atom!r}"
    raise TypeError(msg)


def _wrap(f: Formula) -> str:
    text = format_formula(f)
    return f"({text})" if isinstance(f, And | Or) or (
        isinstance(f, Impl) and f != TOP and f.right != BOT
    ) else text


def format_formula(f: Formula) -> str:
    """Render a formula in the syntax read by ``parse_theory``."""
    match f:
        case Bot():
            return "bot"
        case Atomic(atom):
            return format_constraint(atom)
        case Impl(Bot(), Bot()):
            return "top"
        case Impl(a, Bot()):
            return f"not {_wrap(a)}"
        case And(a, b):
            return f"{_wrap(a)} & {_wrap(b)}"
        case Or(a, b):
            return f"{_wrap(a)} | {_wrap(b)}"
        case Impl(a, b):
            return f"{_wrap(a)} -> {_wrap(b)}"
    msg = f"not a formula: {f!r}"
    raise TypeError(msg)
