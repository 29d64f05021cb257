"""Bounds, structures and denotations of linear constraint atoms."""

from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
import math
import operator
import re

from amt_kernel.errors import BoundsError
from amt_kernel.syntax import Kind, Rel, TheoryAtom
from amt_kernel.valuation import Value, is_integral, is_numeric

DEFAULT_LO = -10
DEFAULT_HI = 10

_INTERVAL = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")
_VAR_INTERVAL = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.+)$")

RELATIONS: dict[Rel, Callable[[Fraction | int, Fraction | int], bool]] = {
    Rel.LE: operator.le,
    Rel.EQ: operator.eq,
    Rel.NE: operator.ne,
    Rel.LT: operator.lt,
    Rel.GT: operator.gt,
    Rel.GE: operator.ge,
}


def parse_interval(text: str) -> tuple[int, int]:
    """Parse ``LO..HI``."""
    match = _INTERVAL.match(text)
    if match is None:
        msg = f"expected LO..HI, got {text!r}"
        raise BoundsError(msg)
    lo, hi = int(match.group(1)), int(match.group(2))
    if lo > hi:
        msg = f"empty interval {lo}..{hi}"
        raise BoundsError(msg)
    return lo, hi


def parse_var_interval(text: str) -> tuple[str, int, int]:
    """Parse ``x=LO..HI``."""
    match = _VAR_INTERVAL.match(text)
    if match is None:
        msg = f"expected NAME=LO..HI, got {text!r}"
        raise BoundsError(msg)
    lo, hi = parse_interval(match.group(2))
    return match.group(1), lo, hi


@dataclass(frozen=True)
class Bounds:
    """A finite box: a global interval plus per-variable overrides."""

    lo: int = DEFAULT_LO
    hi: int = DEFAULT_HI
    overrides: tuple[tuple[str, int, int], ...] = ()

    def __post_init__(self) -> None:
        for name, lo, hi in ((None, self.lo, self.hi), *self.overrides):
            if lo > hi:
                where = f" for {name}" if name else ""
                msg = f"lower bound {lo} exceeds upper bound {hi}{where}"
                raise BoundsError(msg)

    @classmethod
    def parse(cls, text: str, var_bounds: Iterable[str] = ()) -> "Bounds":
        lo, hi = parse_interval(text)
        return cls(lo, hi, tuple(parse_var_interval(v) for v in var_bounds))

    def with_var(self, name: str, lo: int, hi: int) -> "Bounds":
        kept = tuple(o for o in self.overrides if o[0] != name)
        return Bounds(self.lo, self.hi, (*kept, (name, lo, hi)))

    def interval(self, name: str) -> tuple[int, int]:
        for var, lo, hi in reversed(self.overrides):
            if var == name:
                return lo, hi
        return self.lo, self.hi

    def values(self, name: str) -> range:
        lo, hi = self.interval(name)
        return range(lo, hi + 1)

    def cells(self, names: Iterable[str]) -> int:
        """Number of points of the box restricted to ``names``."""
        return math.prod(len(self.values(x)) for x in names)

    def contains(self, v: Mapping[str, Value]) -> bool:
        for name, value in v.items():
            lo, hi = self.interval(name)
            if not is_numeric(value) or not lo <= value <= hi:  # type: ignore[operator]
                return False
        return True

    def __str__(self) -> str:
        text = f"{self.lo}..{self.hi}"
        extra = ", ".join(f"{x}={lo}..{hi}" for x, lo, hi in self.overrides)
        return f"{text} ({extra})" if extra else text


class Domain(str, Enum):
    INT = "int"
    RATIONAL = "rational"


@dataclass(frozen=True)
class Structure:
    """Variables, domain and denotation of a structured linear theory.

    ``variables`` of ``None`` stands for an unlimited supply of variables.
    ``bounds`` is set when the domain is restricted to a finite box.
    """

    domain: Domain = Domain.INT
    bounds: Bounds | None = None
    variables: frozenset[str] | None = field(default=None)

    def vars_of(self, atom: TheoryAtom) -> frozenset[str]:
        return atom.variables

    def contains(self, atom: TheoryAtom, v: Mapping[str, Value]) -> bool:
        """Denotation membership of ``v`` for ``atom`` in this structure."""
        if self.bounds is not None and not self.bounds.contains(
            {x: v[x] for x in atom.variables if x in v}
        ):
            return False
        return den_contains(atom, v, integral=self.domain is Domain.INT)


def den_contains(atom: TheoryAtom, v: Mapping[str, Value], *, integral: bool = True) -> bool:
    """Whether ``v`` belongs to the denotation of ``atom``.

    Every variable of the atom must be defined with an integer value (or any
    rational when ``integral`` is false); other bindings are ignored.
    """
    total: Fraction | int = 0
    for term in atom.terms:
        if term.var not in v:
            return False
        value = v[term.var]
        if not (is_integral(value) if integral else is_numeric(value)):
            return False
        total += term.coef * value  # type: ignore[operator]
    return RELATIONS[atom.rel](total, atom.rhs)


def as_sum(atom: TheoryAtom) -> TheoryAtom:
    """The ``&sum`` form of an atom; difference atoms become ``x + -1*y <= k``."""
    if atom.kind is Kind.SUM:
        return atom
    return TheoryAtom(Kind.SUM, atom.terms, atom.rel, atom.rhs)


def complement(atom: TheoryAtom) -> TheoryAtom:
    """Complement of a linear or difference atom."""
    return atom.complemented()


def substitute(atom: TheoryAtom, name: str, value: int) -> TheoryAtom:
    """Replace variable ``name`` by ``value``, folding the product into the constant.

    The result is a ``&sum`` atom over the remaining variables.
    """
    atom = as_sum(atom)
    if name not in atom.variables:
        return atom
    kept = tuple(t for t in atom.terms if t.var != name)
    if not kept:
        msg = f"cannot substitute the only variable {name} of {atom}"
        raise ValueError(msg)
    folded = sum(t.coef for t in atom.terms if t.var == name) * value
    return TheoryAtom(Kind.SUM, kept, atom.rel, atom.rhs - folded)


def vars_of_set(atoms: Iterable[TheoryAtom]) -> list[str]:
    """Sorted variables of a set of atoms."""
    return sorted({x for s in atoms for x in s.variables})
