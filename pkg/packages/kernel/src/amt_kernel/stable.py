"""Stable models of propositional programs and of T-logic programs.

Theory atoms are handled like propositional atoms here; a theory enters only
through the solutions that ``transform`` turns into facts and constraints.
"""

from collections.abc import Iterable
from dataclasses import dataclass, field, replace
import itertools
import logging

from amt_kernel.errors import PartitionConflict, TooManyAtoms
from amt_kernel.logs import TRACE
from amt_kernel.syntax import (
    BOTTOM,
    Atom,
    Bottom,
    Program,
    Rule,
    TheoryAtom,
    atom_sort_key,
    infer_partition,
)
from amt_kernel.theory_core import (
    DEFAULT_MAX_UNIVERSE,
    TheoryHandle,
    complete_wrt,
    enumerate_complete_solutions,
    enumerate_solutions,
)
from amt_kernel.valuation import Valuation

logger = logging.getLogger(__name__)

DEFAULT_MAX_ATOMS = 22

AtomSet = frozenset[Atom]


def sort_atoms(atoms: Iterable[Atom]) -> list[Atom]:
    return sorted(atoms, key=atom_sort_key)


@dataclass(frozen=True)
class StableModel:
    """A stable model together with the solutions that produce it.

    ``solution`` and ``witness`` belong to the first solution found;
    ``solutions`` lists every solution that yields the same atoms.
    """

    atoms: AtomSet
    witness: Valuation | None = None
    solution: frozenset[TheoryAtom] = frozenset()
    solutions: tuple[frozenset[TheoryAtom], ...] = field(default=(), compare=False)

    @property
    def regular(self) -> list[str]:
        return sorted(str(a) for a in self.atoms if not isinstance(a, TheoryAtom))

    @property
    def theory(self) -> list[TheoryAtom]:
        return [a for a in sort_atoms(self.atoms) if isinstance(a, TheoryAtom)]

    def sort_key(self) -> tuple[int, list[tuple[int, str]]]:
        return len(self.atoms), [atom_sort_key(a) for a in sort_atoms(self.atoms)]


def reduct(program: Program, atoms: Iterable[Atom]) -> Program:
    """Drop rules whose negative body meets ``atoms``; strip the rest of negation."""
    model = frozenset(atoms)
    rules = tuple(Rule(r.head, r.pbody) for r in program.rules if not r.nbody & model)
    return replace(program, rules=rules)


def least_model(program: Program) -> AtomSet:
    """Least fixpoint of the immediate consequence operator.

    Constraints never derive anything; callers check them separately.
    """
    if any(r.nbody for r in program.rules):
        msg = "least_model expects a negation-free program"
        raise ValueError(msg)
    model: set[Atom] = set()
    pending = [r for r in program.rules if not isinstance(r.head, Bottom)]
    changed = True
    while changed:
        changed = False
        remaining = []
        for rule in pending:
            if rule.pbody <= model:
                if rule.head not in model:
                    model.add(rule.head)  # type: ignore[arg-type]
                    changed = True
            else:
                remaining.append(rule)
        pending = remaining
    return frozenset(model)


def satisfies_constraints(program: Program, atoms: AtomSet) -> bool:
    return not any(
        r.pbody <= atoms and not r.nbody & atoms for r in program.rules if r.is_constraint
    )


def is_stable(program: Program, atoms: AtomSet) -> bool:
    return least_model(reduct(program, atoms)) == atoms and satisfies_constraints(program, atoms)


def stable_models(program: Program, *, max_atoms: int = DEFAULT_MAX_ATOMS) -> list[AtomSet]:
    """All stable models, found by checking every subset of the head atoms."""
    occurring = program.occurring_atoms()
    if len(occurring) > max_atoms:
        msg = f"{len(occurring)} atoms exceed the enumeration cap of {max_atoms}"
        raise TooManyAtoms(msg)
    heads = sort_atoms(program.head_atoms())
    models = []
    for size in range(len(heads) + 1):
        for subset in itertools.combinations(heads, size):
            candidate = frozenset(subset)
            if is_stable(program, candidate):
                logger.log(TRACE, "stable model %s", [str(a) for a in subset])
                models.append(candidate)
    return models


def transform(
    program: Program, solution: Iterable[TheoryAtom], externals: Iterable[TheoryAtom]
) -> Program:
    """Add facts for the external atoms of ``solution`` and constraints for the rest.

    Every universe atom that is neither in ``solution`` nor external becomes an
    integrity constraint ``:- s.``.
    """
    chosen = frozenset(solution)
    external = frozenset(externals)
    facts = [Rule(s) for s in sort_atoms(chosen & external)]
    banned = program.theory_atoms - (chosen | external)
    constraints = [Rule(BOTTOM, frozenset({s})) for s in sort_atoms(banned)]
    return replace(program, rules=(*program.rules, *facts, *constraints))


def te_stable_models(
    program: Program,
    th: TheoryHandle,
    *,
    complete_only: bool = True,
    max_atoms: int = DEFAULT_MAX_ATOMS,
    max_universe: int = DEFAULT_MAX_UNIVERSE,
) -> list[StableModel]:
    """Stable models of ``program`` relative to the theory and its external atoms.

    Solutions are E-complete ones unless ``complete_only`` is false. Models are
    deduplicated on their atoms and returned in a deterministic order.
    """
    if not program.partitioned:
        program = infer_partition(program)
    if program.all_external and program.head_atoms() & program.externals:
        msg = "all-external programs with theory atoms in heads have no transformation semantics"
        raise PartitionConflict(msg)
    enumerate_ = enumerate_complete_solutions if complete_only else enumerate_solutions
    found: dict[AtomSet, StableModel] = {}
    for solution in enumerate_(
        program.theory_atoms, program.externals, th, max_universe=max_universe
    ):
        transformed = transform(program, solution, program.externals)
        for atoms in stable_models(transformed, max_atoms=max_atoms):
            known = found.get(atoms)
            if known is None:
                completed = complete_wrt(solution, program.externals, th)
                witness = th.witness(completed) if th.witness else None
                found[atoms] = StableModel(atoms, witness, solution, (solution,))
            else:
                found[atoms] = replace(known, solutions=(*known.solutions, solution))
    models = sorted(found.values(), key=StableModel.sort_key)
    logger.debug("%d stable models", len(models))
    return models
