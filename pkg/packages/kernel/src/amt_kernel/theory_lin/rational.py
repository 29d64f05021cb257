"""Rational linear constraints decided by Fourier-Motzkin elimination.

Arithmetic is exact (``fractions.Fraction``). Strictness is tracked per row,
and disequalities are case-split into ``<`` and ``>`` branches.
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction
import itertools
import logging

from amt_kernel.errors import CaseSplitLimit
from amt_kernel.syntax import Rel, TheoryAtom
from amt_kernel.theory_lin.structure import as_sum, vars_of_set
from amt_kernel.valuation import Valuation

logger = logging.getLogger(__name__)

DEFAULT_MAX_CASE_SPLITS = 2**16


@dataclass(frozen=True)
class Row:
    """``sum(coefs[x] * x) <= rhs``, or ``<`` when ``strict``."""

    coefs: tuple[tuple[str, Fraction], ...]
    rhs: Fraction
    strict: bool

    @classmethod
    def make(cls, coefs: dict[str, Fraction], rhs: Fraction, strict: bool) -> "Row":
        kept = sorted((x, k) for x, k in coefs.items() if k != 0)
        if kept:
            # scale so that the leading coefficient has magnitude one
            scale = abs(kept[0][1])
            kept = [(x, k / scale) for x, k in kept]
            rhs = rhs / scale
        return cls(tuple(kept), rhs, strict)

    def coef(self, name: str) -> Fraction:
        for x, k in self.coefs:
            if x == name:
                return k
        return Fraction(0)

    def trivially_holds(self) -> bool:
        """For a row without variables: whether ``0 <= rhs`` (or ``0 < rhs``) holds."""
        return self.rhs > 0 if self.strict else self.rhs >= 0


def _rows(atom: TheoryAtom, rel: Rel) -> list[Row]:
    coefs = {t.var: Fraction(0) for t in atom.terms}
    for term in atom.terms:
        coefs[term.var] += term.coef
    negated = {x: -k for x, k in coefs.items()}
    rhs = Fraction(atom.rhs)
    match rel:
        case Rel.LE:
            return [Row.make(coefs, rhs, strict=False)]
        case Rel.LT:
            return [Row.make(coefs, rhs, strict=True)]
        case Rel.GE:
            return [Row.make(negated, -rhs, strict=False)]
        case Rel.GT:
            return [Row.make(negated, -rhs, strict=True)]
        case Rel.EQ:
            return [Row.make(coefs, rhs, strict=False), Row.make(negated, -rhs, strict=False)]
        case _:
            msg = f"disequality {atom} must be case-split first"
            raise ValueError(msg)


def _combine(lower: Row, upper: Row, name: str) -> Row:
    """Eliminate ``name`` from a row with negative and a row with positive coefficient."""
    a = -lower.coef(name)
    b = upper.coef(name)
    coefs: dict[str, Fraction] = {}
    for x, k in lower.coefs:
        coefs[x] = coefs.get(x, Fraction(0)) + b * k
    for x, k in upper.coefs:
        coefs[x] = coefs.get(x, Fraction(0)) + a * k
    coefs.pop(name, None)
    return Row.make(coefs, b * lower.rhs + a * upper.rhs, lower.strict or upper.strict)


def _pick(name: str, rows: list[Row], assignment: dict[str, Fraction]) -> Fraction:
    lowers: list[tuple[Fraction, bool]] = []
    uppers: list[tuple[Fraction, bool]] = []
    for row in rows:
        k = row.coef(name)
        rest = sum((c * assignment[x] for x, c in row.coefs if x != name), Fraction(0))
        bound = (row.rhs - rest) / k
        (uppers if k > 0 else lowers).append((bound, row.strict))
    lo = max(lowers, key=lambda b: (b[0], b[1]), default=None)
    hi = min(uppers, key=lambda b: (b[0], not b[1]), default=None)
    if lo is not None and not lo[1]:
        return lo[0]
    if hi is not None and not hi[1]:
        return hi[0]
    if lo is not None and hi is not None:
        return (lo[0] + hi[0]) / 2
    if lo is not None:
        return lo[0] + 1
    if hi is not None:
        return hi[0] - 1
    return Fraction(0)


def eliminate(rows: Iterable[Row], names: list[str]) -> dict[str, Fraction] | None:
    """Run Fourier-Motzkin elimination and back-substitute a witness."""
    current = set(rows)
    stages: list[tuple[str, list[Row]]] = []
    for name in names:
        zero = {r for r in current if r.coef(name) == 0}
        positive = [r for r in current if r.coef(name) > 0]
        negative = [r for r in current if r.coef(name) < 0]
        logger.debug(
            "eliminate %s: z=%d p=%d n=%d", name, len(zero), len(positive), len(negative)
        )
        stages.append((name, positive + negative))
        current = zero | {_combine(lo, up, name) for lo in negative for up in positive}
    if not all(r.trivially_holds() for r in current):
        return None
    assignment: dict[str, Fraction] = {}
    for name, rows_with_name in reversed(stages):
        assignment[name] = _pick(name, rows_with_name, assignment)
    return assignment


def _branches(atoms: list[TheoryAtom], max_case_splits: int) -> Iterator[list[Row]]:
    fixed: list[Row] = []
    split: list[TheoryAtom] = []
    for atom in atoms:
        if atom.rel is Rel.NE:
            split.append(atom)
        else:
            fixed.extend(_rows(atom, atom.rel))
    if 2 ** len(split) > max_case_splits:
        msg = f"{len(split)} disequalities need {2 ** len(split)} branches (cap {max_case_splits})"
        raise CaseSplitLimit(msg)
    for choice in itertools.product((Rel.LT, Rel.GT), repeat=len(split)):
        rows = list(fixed)
        for atom, rel in zip(split, choice):
            rows.extend(_rows(atom, rel))
        yield rows


def sat_R(  # noqa: N802
    atoms: Iterable[TheoryAtom], *, max_case_splits: int = DEFAULT_MAX_CASE_SPLITS
) -> Valuation | None:
    """Decide a set of linear atoms over the rationals, returning a rational witness."""
    atoms = [as_sum(s) for s in atoms]
    names = vars_of_set(atoms)
    for rows in _branches(atoms, max_case_splits):
        assignment = eliminate(rows, names)
        if assignment is not None:
            logger.debug("sat_R: sat")
            return Valuation(assignment)
    logger.debug("sat_R: unsat")
    return None
