"""Abstract theories: complement algebra, solutions and entailment.

A theory is reached only through a ``TheoryHandle``, so every function here
works for any oracle a caller wires up.
"""

from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass
import itertools
import logging
from typing import TYPE_CHECKING

from amt_kernel.errors import NotAbsolute, UniverseNotClosed, UniverseTooLarge
from amt_kernel.logs import TRACE
from amt_kernel.syntax import TheoryAtom, atom_sort_key
from amt_kernel.valuation import Valuation

if TYPE_CHECKING:
    from amt_kernel.theory_lin.structure import Structure

logger = logging.getLogger(__name__)

DEFAULT_MAX_UNIVERSE = 20

AtomSet = frozenset[TheoryAtom]


@dataclass(frozen=True)
class TheoryHandle:
    """A pluggable structured theory.

    ``absolute`` marks an absolute complement (entailment reduces to
    unsatisfiability); ``bounded`` marks an oracle that only searches a finite
    box; ``paraconsistent`` marks theories whose closed sets may be satisfiable.
    """

    name: str
    complement: Callable[[TheoryAtom], TheoryAtom]
    vars_of: Callable[[TheoryAtom], frozenset[str]]
    is_satisfiable: Callable[[AtomSet], bool]
    witness: Callable[[AtomSet], Valuation | None] | None = None
    den_contains: Callable[[TheoryAtom, Valuation], bool] | None = None
    absolute: bool = False
    bounded: bool = False
    paraconsistent: bool = False
    structure: "Structure | None" = None


def comp_set(atoms: Iterable[TheoryAtom], th: TheoryHandle) -> AtomSet:
    return frozenset(th.complement(s) for s in atoms)


def is_consistent(atoms: Iterable[TheoryAtom], th: TheoryHandle) -> bool:
    """No atom occurs together with its complement."""
    pool = frozenset(atoms)
    return not any(th.complement(s) in pool for s in pool)


def is_closed(atoms: Iterable[TheoryAtom], th: TheoryHandle) -> bool:
    pool = frozenset(atoms)
    return all(th.complement(s) in pool for s in pool)


def is_complete(
    atoms: Iterable[TheoryAtom], universe: Iterable[TheoryAtom], th: TheoryHandle
) -> bool:
    """Every atom of the universe or its complement is in ``atoms``."""
    pool = frozenset(atoms)
    universe = frozenset(universe)
    if not is_closed(universe, th):
        msg = "universe is not closed under complement"
        raise UniverseNotClosed(msg)
    return all(s in pool or th.complement(s) in pool for s in universe)


def complete_wrt(
    atoms: Iterable[TheoryAtom], externals: Iterable[TheoryAtom], th: TheoryHandle
) -> AtomSet:
    """``atoms`` completed with the complements of the externals it leaves out."""
    pool = frozenset(atoms)
    return pool | comp_set(frozenset(externals) - pool, th)


def is_solution(
    atoms: Iterable[TheoryAtom], externals: Iterable[TheoryAtom], th: TheoryHandle
) -> bool:
    return th.is_satisfiable(complete_wrt(atoms, externals, th))


def entails(atoms: Iterable[TheoryAtom], atom: TheoryAtom, th: TheoryHandle) -> bool:
    """Entailment through unsatisfiability of ``atoms`` plus the complement of ``atom``."""
    if not th.absolute:
        msg = f"theory {th.name} has no absolute complement"
        raise NotAbsolute(msg)
    return not th.is_satisfiable(frozenset(atoms) | {th.complement(atom)})


def complementary_pairs(
    universe: Iterable[TheoryAtom], th: TheoryHandle
) -> list[tuple[TheoryAtom, TheoryAtom]]:
    """Split a closed universe into ``(s, comp(s))`` pairs in a deterministic order."""
    pool = frozenset(universe)
    if not is_closed(pool, th):
        msg = "universe is not closed under complement"
        raise UniverseNotClosed(msg)
    pairs: dict[AtomSet, tuple[TheoryAtom, TheoryAtom]] = {}
    for s in pool:
        a, b = sorted((s, th.complement(s)), key=atom_sort_key)
        pairs[frozenset((a, b))] = (a, b)
    return sorted(pairs.values(), key=lambda p: atom_sort_key(p[0]))


def _check_universe(universe: AtomSet, externals: AtomSet, max_universe: int) -> None:
    if len(universe) > max_universe:
        msg = f"universe has {len(universe)} theory atoms (cap {max_universe})"
        raise UniverseTooLarge(msg)
    if not externals <= universe:
        msg = "external atoms must belong to the universe"
        raise UniverseNotClosed(msg)


def _pair_options(pair: tuple[TheoryAtom, TheoryAtom], externals: AtomSet) -> list[AtomSet]:
    a, b = pair
    options = [frozenset(), frozenset({a}), frozenset({b}), frozenset({a, b})]
    return [
        o
        for o in options
        if (a not in externals or a in o or b in o) and (b not in externals or b in o or a in o)
    ]


def enumerate_complete_solutions(
    universe: Iterable[TheoryAtom],
    externals: Iterable[TheoryAtom],
    th: TheoryHandle,
    *,
    max_universe: int = DEFAULT_MAX_UNIVERSE,
) -> Iterator[AtomSet]:
    """Yield every E-complete solution over a closed universe.

    Candidates are built pair by pair, so only E-complete sets are ever tested.
    """
    universe = frozenset(universe)
    externals = frozenset(externals)
    _check_universe(universe, externals, max_universe)
    pairs = complementary_pairs(universe, th)
    options = [_pair_options(p, externals) for p in pairs]
    tested = found = 0
    for choice in itertools.product(*options):
        candidate = frozenset().union(*choice)
        tested += 1
        if is_solution(candidate, externals, th):
            found += 1
            logger.log(TRACE, "solution %s", sorted(map(str, candidate)))
            yield candidate
    logger.debug("tested %d complete candidates, %d solutions", tested, found)


def enumerate_solutions(
    universe: Iterable[TheoryAtom],
    externals: Iterable[TheoryAtom],
    th: TheoryHandle,
    *,
    max_universe: int = DEFAULT_MAX_UNIVERSE,
) -> Iterator[AtomSet]:
    """Yield every solution over the universe, E-complete or not."""
    universe = frozenset(universe)
    externals = frozenset(externals)
    _check_universe(universe, externals, max_universe)
    ordered = sorted(universe, key=atom_sort_key)
    for size in range(len(ordered) + 1):
        for subset in itertools.combinations(ordered, size):
            candidate = frozenset(subset)
            if is_solution(candidate, externals, th):
                yield candidate
