"""Finite-box model checking for HT_c: models, equilibrium models and equivalence.

Propositional variables range over ``{t, u}`` and integer variables over their
interval plus ``u``. Results are exact relative to the declared box.
"""

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from enum import Enum
import itertools
import logging
import math

from amt_kernel.errors import BoxTooLarge, SignatureMismatch
from amt_kernel.htc.formula import (
    DefZ,
    Formula,
    PropTrue,
    evaluate,
    formula_atoms,
    holds,
)
from amt_kernel.logs import TRACE
from amt_kernel.theory_lin.linear import DEFAULT_MAX_CELLS
from amt_kernel.theory_lin.structure import Bounds
from amt_kernel.valuation import TRUE, Value, Valuation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Interpretation:
    """A pair ``<h, t>`` of valuations with ``h`` included in ``t``."""

    h: Valuation
    t: Valuation

    def __post_init__(self) -> None:
        if not self.h <= self.t:
            msg = f"here-world {self.h!r} is not included in there-world {self.t!r}"
            raise ValueError(msg)

    @property
    def total(self) -> bool:
        return self.h == self.t

    def __str__(self) -> str:
        return f"<h={self.h!r}, t={self.t!r}>"


class Sort(str, Enum):
    PROP = "prop"
    INT = "int"


@dataclass(frozen=True)
class VarDecl:
    name: str
    sort: Sort
    lo: int = 0
    hi: int = 0

    def values(self) -> tuple[Value, ...]:
        if self.sort is Sort.PROP:
            return (TRUE,)
        return tuple(range(self.lo, self.hi + 1))

    def __str__(self) -> str:
        if self.sort is Sort.PROP:
            return f"{self.name}: prop"
        return f"{self.name}: int[{self.lo}..{self.hi}]"


def _sorts(formulas: Iterable[Formula]) -> dict[str, Sort]:
    sorts: dict[str, Sort] = {}
    for f in formulas:
        for atom in formula_atoms(f):
            if isinstance(atom, PropTrue):
                pairs = [(atom.var, Sort.PROP)]
            elif isinstance(atom, DefZ):
                pairs = [(atom.var, Sort.INT)]
            else:
                pairs = [(x, Sort.INT) for x in atom.atom.variables]
            for name, sort in pairs:
                if sorts.setdefault(name, sort) is not sort:
                    msg = f"variable {name} is used both as a proposition and as an integer"
                    raise SignatureMismatch(msg)
    return sorts


@dataclass(frozen=True)
class Signature:
    """Declared variables with their finite domains, kept sorted by name."""

    decls: tuple[VarDecl, ...] = ()

    def __post_init__(self) -> None:
        names = [d.name for d in self.decls]
        if len(set(names)) != len(names):
            msg = "a variable is declared twice"
            raise SignatureMismatch(msg)
        object.__setattr__(self, "decls", tuple(sorted(self.decls, key=lambda d: d.name)))

    @classmethod
    def build(
        cls, props: Iterable[str] = (), ints: Iterable[str] = (), bounds: Bounds | None = None
    ) -> "Signature":
        bounds = bounds or Bounds()
        decls = [VarDecl(p, Sort.PROP) for p in sorted(set(props))]
        decls += [VarDecl(x, Sort.INT, *bounds.interval(x)) for x in sorted(set(ints))]
        return cls(tuple(decls))

    @classmethod
    def from_theory(cls, formulas: Iterable[Formula], bounds: Bounds | None = None) -> "Signature":
        """Declare every variable of the formulas; integers get their box interval."""
        sorts = _sorts(formulas)
        props = [x for x, s in sorts.items() if s is Sort.PROP]
        ints = [x for x, s in sorts.items() if s is Sort.INT]
        return cls.build(props, ints, bounds)

    @property
    def names(self) -> list[str]:
        return [d.name for d in self.decls]

    def as_dict(self) -> dict[str, VarDecl]:
        return {d.name: d for d in self.decls}

    def merge(self, other: "Signature") -> "Signature":
        merged = self.as_dict()
        for decl in other.decls:
            known = merged.setdefault(decl.name, decl)
            if known != decl:
                msg = f"conflicting declarations {known} and {decl}"
                raise SignatureMismatch(msg)
        return Signature(tuple(merged.values()))

    def check_covers(self, formulas: Iterable[Formula]) -> None:
        """Raise ``SignatureMismatch`` unless every variable is declared with its sort."""
        declared = self.as_dict()
        for name, sort in _sorts(formulas).items():
            decl = declared.get(name)
            if decl is None:
                msg = f"variable {name} is not declared"
                raise SignatureMismatch(msg)
            if decl.sort is not sort:
                msg = f"variable {name} is declared {decl.sort.value} but used as {sort.value}"
                raise SignatureMismatch(msg)

    def cells(self) -> int:
        """Number of total valuations, counting ``u`` for every variable."""
        return math.prod(len(d.values()) + 1 for d in self.decls)

    def __str__(self) -> str:
        return ", ".join(map(str, self.decls))


def total_valuations(sig: Signature, *, max_cells: int = DEFAULT_MAX_CELLS) -> Iterator[Valuation]:
    """Every valuation of the box; ``u`` comes first in each coordinate."""
    cells = sig.cells()
    if cells > max_cells:
        msg = f"signature box has {cells} valuations (cap {max_cells})"
        raise BoxTooLarge(msg)
    names = sig.names
    choices = [(None, *d.values()) for d in sig.decls]
    for point in itertools.product(*choices):
        yield Valuation((x, v) for x, v in zip(names, point) if v is not None)


def sub_valuations(t: Valuation, *, proper: bool = False) -> Iterator[Valuation]:
    """Valuations obtained by undefining subsets of ``t``, largest first."""
    names = sorted(t.defined())
    for size in range(1 if proper else 0, len(names) + 1):
        for dropped in itertools.combinations(names, size):
            yield t.without(dropped)


def _models(theory: list[Formula], h: Valuation, t: Valuation) -> bool:
    return all(evaluate(f, h, t) for f in theory)


def _total_models(theory: list[Formula], sig: Signature, max_cells: int) -> Iterator[Valuation]:
    sig.check_covers(theory)
    for t in total_valuations(sig, max_cells=max_cells):
        if all(holds(f, t) for f in theory):
            yield t


def ht_models(
    theory: Iterable[Formula], sig: Signature, *, max_cells: int = DEFAULT_MAX_CELLS
) -> Iterator[Interpretation]:
    """All models ``<h, t>`` of the theory over the box.

    ``t`` ranges over total models only, since persistence rules out any other.
    """
    theory = list(theory)
    for t in _total_models(theory, sig, max_cells):
        for h in sub_valuations(t):
            if _models(theory, h, t):
                yield Interpretation(h, t)


def minimality_witness(theory: Iterable[Formula], t: Valuation) -> Valuation | None:
    """A strictly smaller ``h`` with ``<h, t>`` a model, or ``None`` if ``t`` is minimal."""
    theory = list(theory)
    for h in sub_valuations(t, proper=True):
        if _models(theory, h, t):
            return h
    return None


def is_equilibrium(theory: Iterable[Formula], t: Valuation) -> bool:
    theory = list(theory)
    return all(holds(f, t) for f in theory) and minimality_witness(theory, t) is None


def equilibrium_models(
    theory: Iterable[Formula], sig: Signature, *, max_cells: int = DEFAULT_MAX_CELLS
) -> Iterator[Valuation]:
    """Total models with no strictly smaller here-world."""
    theory = list(theory)
    checked = found = 0
    for t in _total_models(theory, sig, max_cells):
        checked += 1
        defeat = minimality_witness(theory, t)
        if defeat is None:
            found += 1
            logger.log(TRACE, "equilibrium model %r", t)
            yield t
        else:
            logger.log(TRACE, "%r defeated by %r", t, defeat)
    logger.debug("%d total models, %d equilibrium models", checked, found)


@dataclass(frozen=True)
class Equivalent:
    def __str__(self) -> str:
        return "equivalent"


@dataclass(frozen=True)
class Counterexample:
    """An interpretation that is a model of exactly one side.

    ``in_first`` tells whether it is a model of the first theory.
    """

    interpretation: Interpretation
    in_first: bool

    def __str__(self) -> str:
        side = "first" if self.in_first else "second"
        return f"{self.interpretation} is a model of the {side} theory only"


EquivVerdict = Equivalent | Counterexample

EQUIVALENT = Equivalent()


def _split_shared(
    first: list[Formula], second: list[Formula]
) -> tuple[list[Formula], list[Formula], list[Formula]]:
    common = set(first) & set(second)
    shared = [f for f in dict.fromkeys(first) if f in common]
    return shared, [f for f in first if f not in common], [f for f in second if f not in common]


def equiv_models(
    g1: Iterable[Formula],
    g2: Iterable[Formula],
    sig: Signature,
    *,
    max_cells: int = DEFAULT_MAX_CELLS,
) -> EquivVerdict:
    """Compare the HT_c model sets of two theories over a shared signature.

    Formulas found in both theories are only evaluated where the others disagree.
    """
    first, second = list(g1), list(g2)
    sig.check_covers(first + second)
    shared, only_first, only_second = _split_shared(first, second)
    checked = 0
    for t in total_valuations(sig, max_cells=max_cells):
        checked += 1
        if not all(holds(f, t) for f in shared):
            continue
        a = all(holds(f, t) for f in only_first)
        b = all(holds(f, t) for f in only_second)
        if a != b:
            return Counterexample(Interpretation(t, t), a)
        if not a:
            continue
        for h in sub_valuations(t, proper=True):
            a, b = _models(only_first, h, t), _models(only_second, h, t)
            if a != b and _models(shared, h, t):
                return Counterexample(Interpretation(h, t), a)
    logger.debug(
        "no difference over %d total valuations (%d shared formulas)", checked, len(shared)
    )
    return EQUIVALENT


def ht_entails(
    gamma: Iterable[Formula],
    f: Formula,
    sig: Signature,
    *,
    max_cells: int = DEFAULT_MAX_CELLS,
) -> Counterexample | None:
    """``None`` when every model of ``gamma`` satisfies ``f``, else a model that does not."""
    theory = list(gamma)
    sig.check_covers([*theory, f])
    for t in _total_models(theory, sig, max_cells):
        for h in sub_valuations(t):
            if _models(theory, h, t) and not evaluate(f, h, t):
                return Counterexample(Interpretation(h, t), True)
    return None


def valuation_of(assignment: Mapping[str, Value]) -> Valuation:
    """Convenience constructor accepting ``True`` for the truth value."""
    return Valuation({x: TRUE if v is True else v for x, v in assignment.items()})
