"""Founded/external partition analysis."""

from collections.abc import Iterable
from dataclasses import replace
import logging

from amt_kernel.errors import PartitionConflict
from amt_kernel.syntax.atoms import Program, TheoryAtom

logger = logging.getLogger(__name__)


def close_under_complement(atoms: Iterable[TheoryAtom]) -> frozenset[TheoryAtom]:
    pool = frozenset(atoms)
    return pool | frozenset(s.complemented() for s in pool)


def infer_partition(program: Program, *, all_external: bool = False) -> Program:
    """Populate the external, founded and universe sets of a parsed program.

    Body-occurring theory atoms and ``#external`` directives are external,
    closed under complement. Head-occurring theory atoms are defined. The
    universe adds the complements of defined atoms so that constraints for
    atoms outside the solution stay finite.

    With ``all_external`` every theory atom is treated as external, the way
    systems that do not distinguish founded atoms read a program.
    """
    heads = frozenset(a for a in program.head_atoms() if isinstance(a, TheoryAtom))
    bodies = frozenset(a for a in program.body_atoms() if isinstance(a, TheoryAtom))

    if all_external:
        externals = close_under_complement(heads | bodies | frozenset(program.directives))
        partitioned = replace(
            program,
            theory_atoms=externals,
            externals=externals,
            founded=frozenset(),
            defined=heads,
            partitioned=True,
            all_external=True,
        )
        logger.debug("all-external partition: %d external atoms", len(externals))
        return partitioned

    externals = close_under_complement(bodies | frozenset(program.directives))
    clash = sorted(str(s) for s in heads & externals)
    if clash:
        msg = (
            "theory atoms occur both in a head and, directly or through their complement, "
            f"in a body or #external directive: {', '.join(clash)}"
        )
        raise PartitionConflict(msg)
    universe = externals | close_under_complement(heads)
    partitioned = replace(
        program,
        theory_atoms=universe,
        externals=externals,
        founded=universe - externals,
        defined=heads,
        partitioned=True,
        all_external=False,
    )
    partitioned.check_partition()
    logger.debug(
        "partition: %d external, %d founded, %d defined",
        len(externals),
        len(partitioned.founded),
        len(heads),
    )
    return partitioned


def program_variables(program: Program) -> frozenset[str]:
    """Variables of every theory atom of the program."""
    return program.variables()
