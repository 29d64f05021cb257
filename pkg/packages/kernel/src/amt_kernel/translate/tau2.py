"""The auxiliary-proposition translation.

Every theory atom ``s`` gets a proposition ``p_s``. The program itself is
translated over propositions only; the theory part is a separate block of
choices over constraint atoms, and bridge formulas tie the two together.
"""

from collections.abc import Iterable, Mapping
import logging

from amt_kernel.htc import (
    BOT,
    And,
    Atomic,
    ConstraintAtom,
    Formula,
    Impl,
    Linear,
    Or,
    PropTrue,
    holds,
    neg,
)
from amt_kernel.syntax import Atom, Program, Regular, TheoryAtom, atom_sort_key
from amt_kernel.theory_core import TheoryHandle
from amt_kernel.theory_lin.structure import Bounds, den_contains
from amt_kernel.translate.tau import (
    TranslationOutput,
    aux_name,
    body_formula,
    check_aux_names,
    constraint_of,
    partitioned,
    require_integers,
    resolve_bounds,
    rule_formula,
    tau_signature,
)
from amt_kernel.valuation import TRUE, Value, Valuation

logger = logging.getLogger(__name__)


def phi(
    universe: Iterable[TheoryAtom], externals: Iterable[TheoryAtom], th: TheoryHandle
) -> list[Formula]:
    """Free choice over every theory atom, and a forced complement for external ones."""
    atoms = sorted(universe, key=atom_sort_key)
    external = frozenset(externals)
    choices: list[Formula] = [Or(Atomic(Linear(s)), neg(Atomic(Linear(s)))) for s in atoms]
    forced: list[Formula] = [
        Impl(neg(Atomic(Linear(s))), Atomic(Linear(th.complement(s))))
        for s in atoms
        if s in external
    ]
    return choices + forced


def _propositional(atom: Atom) -> ConstraintAtom:
    return PropTrue(aux_name(atom))


def bridge(program: Program) -> list[Formula]:
    """``τ(s) -> p_s`` for external atoms and ``not τ(s) & p_s -> bot`` for founded ones."""
    atoms = sorted(program.theory_atoms, key=atom_sort_key)
    up: list[Formula] = [
        Impl(Atomic(Linear(s)), Atomic(_propositional(s)))
        for s in atoms
        if s in program.externals
    ]
    down: list[Formula] = [
        Impl(And(neg(Atomic(Linear(s))), Atomic(_propositional(s))), BOT)
        for s in atoms
        if s in program.founded
    ]
    return up + down


def tau2(program: Program, th: TheoryHandle, *, bounds: Bounds | None = None) -> TranslationOutput:
    require_integers(th)
    program = partitioned(program)
    names = check_aux_names(
        program,
        [Regular(a) for a in sorted(program.regulars)]
        + sorted(program.theory_atoms, key=atom_sort_key),
    )
    theory = [
        *phi(program.theory_atoms, program.externals, th),
        *(rule_formula(r, _propositional) for r in program.rules),
        *bridge(program),
    ]
    aux = {s: n for s, n in names.items() if isinstance(s, TheoryAtom)}
    atom_map = {a: constraint_of(a) for a in program.occurring_atoms()}
    signature = tau_signature(program, resolve_bounds(th, bounds), aux.values())
    logger.debug("tau2: %d formulas, %d auxiliary propositions", len(theory), len(aux))
    return TranslationOutput(tuple(theory), signature, atom_map, aux)


def project_tau2(v: Mapping[str, Value], program: Program) -> frozenset[Atom]:
    """Atoms whose proposition is true in ``v``."""
    program = partitioned(program)
    atoms: list[Atom] = [Regular(a) for a in program.regulars]
    atoms += program.theory_atoms
    return frozenset(a for a in atoms if v.get(aux_name(a)) is TRUE)


def lift_to_tau2(t: Valuation, program: Program) -> Valuation:
    """Carry a model of the direct translation over to the auxiliary-proposition one.

    ``p_s`` is made true for external atoms true in ``t`` and for founded atoms
    derived by a rule whose body holds in ``t``.
    """
    program = partitioned(program)
    true = {aux_name(s) for s in program.externals if den_contains(s, t)}
    true |= {
        aux_name(r.head)  # type: ignore[arg-type]
        for r in program.rules
        if r.head in program.founded and holds(body_formula(r), t)
    }
    return t.extend(dict.fromkeys(true, TRUE))
