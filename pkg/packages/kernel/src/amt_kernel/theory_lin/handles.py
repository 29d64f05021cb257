"""Theory handles for the shipped linear theories."""

from collections.abc import Callable
from enum import Enum
from functools import lru_cache, partial
import logging

from amt_kernel.syntax import TheoryAtom
from amt_kernel.theory_core import TheoryHandle
from amt_kernel.theory_lin.difference import sat_D
from amt_kernel.theory_lin.linear import DEFAULT_MAX_CELLS, sat_L
from amt_kernel.theory_lin.rational import DEFAULT_MAX_CASE_SPLITS, sat_R
from amt_kernel.theory_lin.structure import Bounds, Domain, Structure, as_sum
from amt_kernel.valuation import Valuation

logger = logging.getLogger(__name__)


class TheoryName(str, Enum):
    """Selector for a shipped theory."""

    LIN_INT = "lin-int"
    DIFF_INT = "diff-int"
    LIN_RAT = "lin-rat"

    @classmethod
    def _missing_(cls, value: object) -> "TheoryName | None":
        aliases = {"L": cls.LIN_INT, "D": cls.DIFF_INT, "R": cls.LIN_RAT}
        return aliases.get(str(value).upper()) if isinstance(value, str) else None


def make_handle(
    theory: TheoryName | str,
    bounds: Bounds | None = None,
    *,
    boxed: bool = False,
    max_cells: int = DEFAULT_MAX_CELLS,
    max_case_splits: int = DEFAULT_MAX_CASE_SPLITS,
) -> TheoryHandle:
    """Wire complement, variables and the matching decision procedure into a handle.

    Integer linear constraints are always decided over ``bounds``. Difference
    constraints are decided exactly unless ``boxed`` asks for the same
    box-relative oracle as the integer linear theory. Rational constraints are
    decided exactly.
    """
    name = TheoryName(theory)
    bounds = bounds or Bounds()
    solve: Callable[[frozenset[TheoryAtom]], Valuation | None]
    if name is TheoryName.LIN_INT or (name is TheoryName.DIFF_INT and boxed):
        structure = Structure(Domain.INT, bounds)
        solve = partial(sat_L, bounds=bounds, max_cells=max_cells)
    elif name is TheoryName.DIFF_INT:
        structure = Structure(Domain.INT)
        solve = sat_D
    else:
        structure = Structure(Domain.RATIONAL)
        solve = partial(sat_R, max_case_splits=max_case_splits)

    @lru_cache(maxsize=None)
    def oracle(atoms: frozenset[TheoryAtom]) -> Valuation | None:
        return solve(atoms)

    def witness(atoms: frozenset[TheoryAtom]) -> Valuation | None:
        return oracle(frozenset(atoms))

    def is_satisfiable(atoms: frozenset[TheoryAtom]) -> bool:
        return oracle(frozenset(atoms)) is not None

    def den_contains(atom: TheoryAtom, v: Valuation) -> bool:
        return structure.contains(as_sum(atom), v)

    logger.debug("theory handle %s (bounds %s, boxed=%s)", name.value, bounds, boxed)
    return TheoryHandle(
        name=name.value,
        complement=TheoryAtom.complemented,
        vars_of=structure.vars_of,
        is_satisfiable=is_satisfiable,
        witness=witness,
        den_contains=den_contains,
        absolute=True,
        bounded=structure.bounds is not None,
        structure=structure,
    )
