"""Integer linear constraints decided over a finite box."""

from collections.abc import Iterable, Iterator
import itertools
import logging

from amt_kernel.errors import BoxTooLarge
from amt_kernel.logs import TRACE
from amt_kernel.syntax import TheoryAtom
from amt_kernel.theory_lin.structure import RELATIONS, Bounds, as_sum, vars_of_set
from amt_kernel.valuation import Valuation

logger = logging.getLogger(__name__)

DEFAULT_MAX_CELLS = 10**7


def witnesses_L(  # noqa: N802
    atoms: Iterable[TheoryAtom],
    bounds: Bounds | None = None,
    *,
    max_cells: int = DEFAULT_MAX_CELLS,
) -> Iterator[Valuation]:
    """Yield every box valuation over the atoms' variables that satisfies all atoms.

    Valuations come in lexicographic order of the sorted variable names.
    """
    bounds = bounds or Bounds()
    atoms = [as_sum(s) for s in atoms]
    names = vars_of_set(atoms)
    cells = bounds.cells(names)
    if cells > max_cells:
        msg = f"box over {len(names)} variables has {cells} cells (cap {max_cells})"
        raise BoxTooLarge(msg)
    index = {x: i for i, x in enumerate(names)}
    compiled = [
        ([(index[t.var], t.coef) for t in s.terms], RELATIONS[s.rel], s.rhs) for s in atoms
    ]
    logger.log(TRACE, "scanning %d cells for %d atoms", cells, len(atoms))
    for point in itertools.product(*(bounds.values(x) for x in names)):
        if all(
            holds(sum(k * point[i] for i, k in terms), rhs) for terms, holds, rhs in compiled
        ):
            yield Valuation(zip(names, point))


def sat_L(  # noqa: N802
    atoms: Iterable[TheoryAtom],
    bounds: Bounds | None = None,
    *,
    max_cells: int = DEFAULT_MAX_CELLS,
) -> Valuation | None:
    """First box witness of the atom set, or ``None`` when the box holds none."""
    witness = next(witnesses_L(atoms, bounds, max_cells=max_cells), None)
    logger.debug("sat_L: %s", "sat" if witness is not None else "unsat")
    return witness
