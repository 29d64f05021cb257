"""The direct translation of T-logic programs into HT_c theories and its projection."""

from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass, field
import logging

from amt_kernel.errors import NameCollision, TheoryMismatch
from amt_kernel.htc import (
    BOT,
    Atomic,
    ConstraintAtom,
    Formula,
    Impl,
    Linear,
    Or,
    PropTrue,
    Signature,
    conj,
    holds,
    neg,
)
from amt_kernel.syntax import (
    Atom,
    Bottom,
    Program,
    Regular,
    Rel,
    Rule,
    TheoryAtom,
    atom_sort_key,
    infer_partition,
)
from amt_kernel.theory_core import TheoryHandle, complementary_pairs
from amt_kernel.theory_lin.structure import Bounds, Domain, den_contains
from amt_kernel.valuation import TRUE, Value

logger = logging.getLogger(__name__)

AUX_PREFIX = "__p_"
# never occurs in identifiers
AUX_SEP = "."

_REL_CODES = {
    Rel.LE: "le",
    Rel.EQ: "eq",
    Rel.NE: "ne",
    Rel.LT: "lt",
    Rel.GT: "gt",
    Rel.GE: "ge",
}


def _int_code(k: int) -> str:
    return f"m{-k}" if k < 0 else str(k)


def aux_name(atom: Atom) -> str:
    """Deterministic propositional variable standing for a program atom.

    ``a`` becomes ``__p_a`` and ``&sum{x;y}=4`` becomes ``__p_sum.1x.1y.eq.4``.
    """
    if isinstance(atom, Regular):
        return f"{AUX_PREFIX}{atom.name}"
    terms = AUX_SEP.join(f"{_int_code(t.coef)}{t.var}" for t in atom.terms)
    parts = (atom.kind.value, terms, _REL_CODES[atom.rel], _int_code(atom.rhs))
    return AUX_PREFIX + AUX_SEP.join(parts)


def check_aux_names(program: Program, atoms: Iterable[Atom]) -> dict[Atom, str]:
    """Auxiliary names for ``atoms``, refusing clashes with user variables or each other."""
    user = program.variables()
    names: dict[Atom, str] = {}
    owners: dict[str, Atom] = {}
    for atom in atoms:
        name = aux_name(atom)
        if name in user:
            msg = f"auxiliary variable {name} for {atom} clashes with a program variable"
            raise NameCollision(msg)
        other = owners.setdefault(name, atom)
        if other != atom:
            msg = f"atoms {other} and {atom} share the auxiliary variable {name}"
            raise NameCollision(msg)
        names[atom] = name
    return names


@dataclass(frozen=True)
class TranslationOutput:
    """An HT_c theory with its signature and the image of every program atom.

    ``aux`` maps theory atoms to their auxiliary propositions and is only
    filled by the auxiliary-proposition translation.
    """

    theory: tuple[Formula, ...]
    signature: Signature
    atom_map: Mapping[Atom, ConstraintAtom]
    aux: Mapping[TheoryAtom, str] = field(default_factory=dict)


def partitioned(program: Program) -> Program:
    return program if program.partitioned else infer_partition(program)


def require_integers(th: TheoryHandle) -> None:
    """HT_c boxes are integer boxes; rational theories have no translation here."""
    if th.structure is not None and th.structure.domain is Domain.RATIONAL:
        msg = f"theory {th.name} is not over the integers and cannot be translated to HT_c"
        raise TheoryMismatch(msg)


def resolve_bounds(th: TheoryHandle, bounds: Bounds | None) -> Bounds:
    if bounds is not None:
        return bounds
    if th.structure is not None and th.structure.bounds is not None:
        return th.structure.bounds
    return Bounds()


def constraint_of(atom: Atom) -> ConstraintAtom:
    if isinstance(atom, Regular):
        return PropTrue(aux_name(atom))
    return Linear(atom)


def rule_formula(rule: Rule, image: Callable[[Atom], ConstraintAtom]) -> Impl:
    """``τ(b1) & ... & not τ(bm) -> τ(b0)`` with literals in a fixed order."""
    body = conj(
        [Atomic(image(a)) for a in _ordered(rule.pbody)]
        + [neg(Atomic(image(a))) for a in _ordered(rule.nbody)]
    )
    head = BOT if isinstance(rule.head, Bottom) else Atomic(image(rule.head))
    return Impl(body, head)


def body_formula(rule: Rule, image: Callable[[Atom], ConstraintAtom] = constraint_of) -> Formula:
    return rule_formula(rule, image).left


def _ordered(atoms: Iterable[Atom]) -> list[Atom]:
    return sorted(atoms, key=atom_sort_key)


def tau_program(program: Program) -> list[Formula]:
    """One implication per rule; regular atoms become auxiliary propositions."""
    return [rule_formula(r, constraint_of) for r in program.rules]


def choice_axioms(externals: Iterable[TheoryAtom], th: TheoryHandle) -> list[Formula]:
    """``τ(s) | τ(comp(s))`` once for every complementary pair of external atoms."""
    return [
        Or(Atomic(Linear(a)), Atomic(Linear(b))) for a, b in complementary_pairs(externals, th)
    ]


def tau_signature(program: Program, bounds: Bounds, extra: Iterable[str] = ()) -> Signature:
    props = [aux_name(Regular(a)) for a in program.regulars]
    return Signature.build([*props, *extra], program.variables(), bounds)


def tau(
    program: Program,
    th: TheoryHandle,
    *,
    bounds: Bounds | None = None,
    drop_choice: bool = False,
) -> TranslationOutput:
    """Translate a program together with the choice axioms for its external atoms.

    ``drop_choice`` leaves the choice axioms out; it exists to check that
    differential runs notice a broken translation.
    """
    require_integers(th)
    program = partitioned(program)
    check_aux_names(program, [Regular(a) for a in sorted(program.regulars)])
    theory = tau_program(program)
    if not drop_choice:
        theory += choice_axioms(program.externals, th)
    atom_map = {a: constraint_of(a) for a in program.occurring_atoms()}
    signature = tau_signature(program, resolve_bounds(th, bounds))
    logger.debug("tau: %d formulas over %s", len(theory), signature)
    return TranslationOutput(tuple(theory), signature, atom_map)


def project_equilibrium(t: Mapping[str, Value], program: Program) -> frozenset[Atom]:
    """The program atoms an equilibrium model of the direct translation stands for.

    Regular and external atoms are read off ``t``; a founded atom is included
    when some rule with that head has a body true in ``t``.
    """
    program = partitioned(program)
    atoms: set[Atom] = {Regular(a) for a in program.regulars if t.get(aux_name(Regular(a))) is TRUE}
    atoms |= {s for s in program.externals if den_contains(s, t)}
    for rule in program.rules:
        if rule.head in program.founded and holds(body_formula(rule), t):
            atoms.add(rule.head)  # type: ignore[arg-type]
    return frozenset(atoms)


def project_solution(
    t: Mapping[str, Value], universe: Iterable[TheoryAtom]
) -> frozenset[TheoryAtom]:
    """Theory atoms of ``universe`` whose denotation contains ``t``."""
    return frozenset(s for s in universe if den_contains(s, t))
